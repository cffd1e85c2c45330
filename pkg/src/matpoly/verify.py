"""Run every identity the package knows about on one matroid."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .duality import check_dual_identities, chi_dual
from .exactpoly import PolyT
from .fields import FieldSpec
from .invariants import (ENUM_LIMIT, bruteforce_weights, coboundary, count_bases, mobius_poly, tutte)
from .lattice import GeometricLattice
from .matroid import Matroid, RepresentableMatroid, params, rank_axiom_violations, simplicity_violation
from .reconstruct import bound_holds, dstar_from_mobius, reconstruct_linear, reconstruct_zeta
from .zeta import chi_from_zeta, zeta_dual, zeta_from_chi


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag} {self.name}" + (f": {self.detail}" if self.detail else "")


def _check(out: list[Check], name: str, cond: bool, detail: str = "", fail_detail: str = "") -> bool:
    out.append(Check(name, bool(cond), detail if cond else (fail_detail or detail)))
    return bool(cond)


def run_checks(M: Matroid, oracle_extensions: tuple[int, ...] = (1, 2)) -> list[Check]:
    out: list[Check] = []
    bad = rank_axiom_violations(M)
    if not _check(out, "rank axioms", not bad, fail_detail="; ".join(bad)):
        return out
    p = params(M)
    out.append(Check("params", True, p.line()))
    for label, mat in (("M", M), ("M*", M.dual())):
        v = simplicity_violation(mat)
        if not _check(out, f"{label} simple", v is None, fail_detail=v or ""):
            return out
    n, k, d, dstar = p.n, p.k, int(p.d), int(p.dstar)
    L, Ld = GeometricLattice(M), GeometricLattice(M.dual())
    chi, chis = coboundary(L), coboundary(Ld)
    mu, mus = mobius_poly(L), mobius_poly(Ld)

    _check(out, "chi(1,T) = T^k", chi.chi.total() == PolyT.monomial(k))
    _check(out, "hyperplane law d = n - max|H|", d == n - max(bin(h).count("1") for h in L.hyperplanes))
    _check(out, "flat counts C(n,i) below d*-1",
           all(L.counts[i] == comb(n, i) for i in range(dstar - 1))
           and (dstar - 1 > k or L.counts[dstar - 1] < comb(n, dstar - 1)))
    _check(out, "Moebius interval sums vanish", _interval_sums_vanish(L))
    _check(out, "Whitney diagonal = flat counts",
           all(mu.flat_count(i) == L.counts[i] == L.whitney(i, k - i) for i in range(k + 1)))
    seeds = (all(chi[i] == mu[i] for i in range(dstar - 1))
             and all(chi[i].is_zero() for i in range(n - d + 1, n)) and chi[n] == 1)
    _check(out, "chi seeded by mu (three clauses)", seeds)
    got = (dstar_from_mobius(mu, n), dstar_from_mobius(mus, n))
    _check(out, "d*, d read off mu_M, mu_M*", got == (dstar, d), f"d*={got[0]} d={got[1]}")

    dual = chi_dual(chi)
    _check(out, "chi_dual matches dual lattice", dual == chis)
    _check(out, "chi_dual involution", chi_dual(dual) == chi)
    rep = check_dual_identities(chi, chis)
    _check(out, "coefficient dual identities", rep.ok, rep.line())

    Z = zeta_from_chi(chi, d, dstar)
    r = n - d - dstar + 2
    _check(out, "zeta Q-degree = n-d-d*+2", Z.q_degree == r, f"degree {Z.q_degree}")
    _check(out, "zeta round trip", chi_from_zeta(Z) == chi)
    _check(out, "zeta duality", zeta_dual(Z) == zeta_from_chi(chis, dstar, d))

    if bound_holds(n, d, dstar):
        lin, zet = reconstruct_linear(mu, mus), reconstruct_zeta(mu, mus)
        _check(out, "reconstruction (linear)", lin.outcome == "unique" and lin.chi == chi)
        _check(out, "reconstruction (zeta)", zet.outcome == "unique" and zet.chi == chi)
    else:
        out.append(Check("reconstruction", True, f"skipped: 2(d+d*)={2 * (d + dstar)} < n+3={n + 3}"))

    if n <= 20:
        tp = tutte(M)
        _check(out, "Tutte T(2,2) = 2^n", tp(2, 2) == 2 ** n)
        _check(out, "Tutte T(1,1) = #bases", tp(1, 1) == count_bases(M))
        _check(out, "Tutte duality", tutte(M.dual()) == tp.swap())

    if isinstance(M, RepresentableMatroid):
        mat = M.matrix
        for m in oracle_extensions:
            fs = FieldSpec(mat.q, m)
            if fs.order ** mat.k > ENUM_LIMIT:
                out.append(Check(f"codeword oracle over F_{fs.order}", True, "skipped: enumeration limit"))
                continue
            counts = bruteforce_weights(mat, fs)
            want = chi.weights().at(fs.order)
            _check(out, f"codeword oracle over F_{fs.order}", counts == want, f"A_w = {counts}")
    return out


def _interval_sums_vanish(L: GeometricLattice) -> bool:
    arr = np.array(L.flats, dtype=np.int64)
    leq = ((arr[:, None] & arr[None, :]) == arr[:, None]).astype(np.int64)
    # sum_{x <= z <= y} mu(x, z) = (mu @ zeta)[x, y] must be the identity
    return bool(np.array_equal(L.mu @ leq, np.eye(len(arr), dtype=np.int64)))
