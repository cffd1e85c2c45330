#!/usr/bin/env python3
"""How often does reconstruction succeed when 2(d+d*) < n+3?

Samples random representable matroids (simple, cosimple), runs both
reconstruction routes and tabulates outcome and system rank by
(n, d, d*). A "unique" entry below the bound would show the bound is not
sharp for that parameter set.

    python scripts/bound_survey.py --count 300 --max-n 11 --out results/bound_survey.csv
"""
from __future__ import annotations

import argparse
import csv
from collections import defaultdict
from pathlib import Path

from matpoly.corpus import CORPUS_SEED, FIELDS
from matpoly.invariants import mobius_poly
from matpoly.lattice import GeometricLattice
from matpoly.matroid import RepresentableMatroid, params
from matpoly.reconstruct import bound_holds, reconstruct_linear, reconstruct_zeta
from matpoly.search import sample_matrix, trial_rng


def sample(count: int, min_n: int, max_n: int, seed: int):
    i = 0
    got = 0
    while got < count:
        rng = trial_rng(seed, i)
        i += 1
        q = int(rng.choice(FIELDS))
        n = int(rng.integers(min_n, max_n + 1))
        k = int(rng.integers(2, n - 1))
        M = RepresentableMatroid(sample_matrix(rng, q, k, n))
        p = params(M)
        if p.k == k and p.simple and p.cosimple:
            got += 1
            yield q, M, p


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--min-n", type=int, default=6)
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--seed", type=int, default=CORPUS_SEED)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()

    table = defaultdict(lambda: defaultdict(int))
    rows = []
    for q, M, p in sample(a.count, a.min_n, a.max_n, a.seed):
        n, d, ds = p.n, int(p.d), int(p.dstar)
        mu, mus = mobius_poly(GeometricLattice(M)), mobius_poly(GeometricLattice(M.dual()))
        lin, zet = reconstruct_linear(mu, mus), reconstruct_zeta(mu, mus)
        key = (n, d, ds, bound_holds(n, d, ds))
        table[key][(lin.outcome, zet.outcome)] += 1
        rows.append(dict(q=q, n=n, k=p.k, d=d, dstar=ds, bound=int(key[3]),
                         linear=lin.outcome, linear_rank=lin.rank, linear_unknowns=lin.n_unknowns,
                         zeta=zet.outcome, zeta_rank=zet.rank, zeta_unknowns=zet.n_unknowns))

    print(f"{'n':>3} {'d':>3} {'d*':>3} {'bound':>6}  outcomes (linear/zeta: count)")
    for (n, d, ds, ok), outcomes in sorted(table.items()):
        cells = ", ".join(f"{l}/{z}: {c}" for (l, z), c in sorted(outcomes.items()))
        print(f"{n:>3} {d:>3} {ds:>3} {str(ok):>6}  {cells}")
    below = [r for r in rows if not r["bound"]]
    print(f"\n{len(below)} of {len(rows)} samples below the bound; "
          f"{sum(r['linear'] == 'unique' for r in below)} of those reconstructed uniquely")

    if a.out:
        a.out.parent.mkdir(parents=True, exist_ok=True)
        with a.out.open("w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    main()
