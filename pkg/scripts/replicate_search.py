#!/usr/bin/env python3
"""Random search for equal (mu_M, mu_M*) with different chi_M at n=10, k=5, d=d*=3.

Runs one search per seed and writes the trial records plus a summary per
seed under --outdir. Exits 2 if any seed produces a confirmed group.

    python scripts/replicate_search.py --seeds 20120601 1 2 --trials 260
"""
from __future__ import annotations

import argparse
import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path

from matpoly.search import SearchConfig, run_search


@dataclass
class Args:
    seeds: list[int]
    trials: int
    q: int
    k: int
    n: int
    d: int
    dstar: int
    outdir: Path
    threads: int


def parse() -> Args:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--seeds", type=int, nargs="+", default=[20120601])
    ap.add_argument("--trials", type=int, default=260)
    ap.add_argument("--q", type=int, default=7)
    ap.add_argument("--k", type=int, default=5)
    ap.add_argument("--n", type=int, default=10)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--dstar", type=int, default=3)
    ap.add_argument("--outdir", type=Path, default=Path("results/search"))
    ap.add_argument("--threads", type=int, default=1)
    return Args(**vars(ap.parse_args()))


def main() -> int:
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
    a = parse()
    a.outdir.mkdir(parents=True, exist_ok=True)
    found = False
    rows = []
    for seed in a.seeds:
        cfg = SearchConfig(q=a.q, k=a.k, n=a.n, d=a.d, dstar=a.dstar, trials=a.trials, seed=seed,
                           out=str(a.outdir / f"trials_seed{seed}.jsonl"), threads=a.threads)
        t0 = time.perf_counter()
        s = run_search(cfg)
        secs = time.perf_counter() - t0
        (a.outdir / f"summary_seed{seed}.json").write_text(s.to_json() + "\n")
        found |= s.found
        rows.append((seed, s.attempted, s.accepted, s.groups, len(s.counterexamples), secs))
        logging.info("seed %d done in %.1fs", seed, secs)

    print(f"{'seed':>10} {'attempts':>9} {'accepted':>9} {'cells':>6} {'groups':>7} {'sec':>7}")
    for seed, att, acc, cells, groups, secs in rows:
        print(f"{seed:>10} {att:>9} {acc:>9} {cells:>6} {groups:>7} {secs:>7.1f}")
    (a.outdir / "index.json").write_text(json.dumps(
        [dict(zip(("seed", "attempted", "accepted", "cells", "groups"), r[:5])) for r in rows], indent=2) + "\n")
    return 2 if found else 0


if __name__ == "__main__":
    raise SystemExit(main())
