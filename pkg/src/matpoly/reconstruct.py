"""Recover chi_M from the Moebius polynomials of M and M*.

Two routes: the coefficient duality relations solved for the unknown
chi_i and chi*_i jointly, and the zeta route solving for P_0..P_r. Both
systems live over Q(T); they are solved by exact elimination at integer
points T = 2, 3, ... followed by interpolation under known degree bounds.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable

from .duality import check_dual_identities, chi_dual, dual_identity_equations
from .exactpoly import ONE, ZERO, InconsistentSystem, PolyError, PolyT, SPoly, interpolate, solve_exact
from .invariants import CoboundaryPoly, MobiusPoly
from .zeta import ZetaError, ZetaPoly, basis_coeff, chi_from_zeta, dual_exponent

log = logging.getLogger(__name__)

FIRST_POINT = 2
MAX_EXTRA_POINTS = 32


class ReconstructionError(ArithmeticError):
    """The inputs cannot be the Moebius polynomials of a matroid and its dual."""


def dstar_from_mobius(mu: MobiusPoly, n: int | None = None) -> int:
    """Girth from the first rank whose flat count falls short of C(n, i)."""
    n = mu.n if n is None else n
    for i in range(mu.k + 1):
        count = mu.flat_count(i)
        if count > comb(n, i):
            raise ReconstructionError(f"{count} flats of rank {i} exceed C({n},{i})")
        if count < comb(n, i):
            return i + 1
    return mu.k + 1


@dataclass(frozen=True)
class PartialChi:
    n: int
    k: int
    d: int
    dstar: int
    known: dict[int, PolyT]

    @property
    def unknown(self) -> list[int]:
        return [i for i in range(self.n + 1) if i not in self.known]


def _seed(mu: MobiusPoly, n: int, k: int, d: int, dstar: int) -> PartialChi:
    known: dict[int, PolyT] = {}
    for i in range(min(dstar - 1, k + 1)):
        known[i] = mu[i]
    for i in range(n - d + 1, n):
        if i in known and not known[i].is_zero():
            raise ReconstructionError(f"chi_{i} seeded both as mu_{i} and as 0")
        known[i] = ZERO
    known[n] = ONE
    return PartialChi(n, k, d, dstar, known)


def seed_partial(mu_M: MobiusPoly, mu_Mstar: MobiusPoly) -> tuple[PartialChi, PartialChi]:
    n = mu_M.k + mu_Mstar.k
    if mu_M.n != n or mu_Mstar.n != n:
        raise ReconstructionError(
            f"degrees {mu_M.k} + {mu_Mstar.k} do not add up to n = {mu_M.n}/{mu_Mstar.n}")
    k = mu_M.k
    dstar = dstar_from_mobius(mu_M, n)
    d = dstar_from_mobius(mu_Mstar, n)
    if d + dstar > n + 2:
        raise ReconstructionError(f"d + d* = {d + dstar} exceeds n + 2")
    return _seed(mu_M, n, k, d, dstar), _seed(mu_Mstar, n, n - k, dstar, d)


def bound_holds(n: int, d: int, dstar: int) -> bool:
    return 2 * (d + dstar) >= n + 3


@dataclass
class ReconstructionReport:
    method: str
    outcome: str  # "unique" or "underdetermined"
    n: int
    k: int
    d: int
    dstar: int
    n_equations: int
    n_unknowns: int
    rank: int
    points: list[int] = field(default_factory=list)
    chi: CoboundaryPoly | None = None
    chi_star: CoboundaryPoly | None = None
    zeta: ZetaPoly | None = None

    @property
    def kernel_dim(self) -> int:
        return self.n_unknowns - self.rank

    @property
    def bound_ok(self) -> bool:
        return bound_holds(self.n, self.d, self.dstar)

    @property
    def advisory(self) -> str | None:
        if self.bound_ok:
            return None
        return (f"infeasible-bound: 2(d+d*) = {2 * (self.d + self.dstar)} < n+3 = {self.n + 3}; "
                "uniqueness is not guaranteed")

    def summary(self) -> dict:
        out = {
            "method": self.method, "outcome": self.outcome,
            "n": self.n, "k": self.k, "d": self.d, "dstar": self.dstar,
            "equations": self.n_equations, "unknowns": self.n_unknowns,
            "rank": self.rank, "kernel_dim": self.kernel_dim,
            "bound_ok": self.bound_ok, "points": self.points,
        }
        if self.advisory:
            out["advisory"] = self.advisory
        return out


SystemAt = Callable[[int], tuple[list[list[Fraction]], list[Fraction]]]


def _solve_pointwise(system_at: SystemAt, n_unknowns: int, points_needed: int):
    """Solve at T = 2, 3, ... keeping points of maximal rank.

    Returns (rank, points, solutions). Points where the rank drops below
    the best seen are discarded; rank over Q(T) equals the rank at all but
    finitely many points.
    """
    best = -1
    kept: list[tuple[int, tuple[Fraction, ...] | None]] = []
    t = FIRST_POINT
    limit = FIRST_POINT + points_needed + MAX_EXTRA_POINTS
    while len(kept) < points_needed and t < limit:
        A, b = system_at(t)
        try:
            sol = solve_exact(A, b)
        except InconsistentSystem:
            raise ReconstructionError(f"duality system inconsistent at T={t}") from None
        rank = sol.rank
        if rank > best:
            if kept:
                log.debug("rank rose to %d at T=%d; dropping %d earlier points", rank, t, len(kept))
            best, kept = rank, []
        if rank == best:
            kept.append((t, sol.solution))
        else:
            log.debug("rank drop at T=%d (%d < %d), point discarded", t, rank, best)
        t += 1
    if len(kept) < points_needed:
        raise ReconstructionError("could not find enough evaluation points of full rank")
    return best, [t for t, _ in kept], [s for _, s in kept]


def _interpolate_unknowns(points, sols, bounds: list[int]) -> list[PolyT]:
    out = []
    for u, bound in enumerate(bounds):
        try:
            out.append(interpolate([(t, s[u]) for t, s in zip(points, sols)], bound))
        except PolyError as exc:
            raise ReconstructionError(f"unknown {u} is not a polynomial of degree <= {bound}: {exc}") from None
    return out


def _verify(chi: CoboundaryPoly, chi_star: CoboundaryPoly, pm: PartialChi, ps: PartialChi) -> None:
    rep = check_dual_identities(chi, chi_star)
    if not rep.ok:
        raise ReconstructionError(f"recovered polynomials violate duality: {rep.line()}")
    for part, poly in ((pm, chi), (ps, chi_star)):
        for i, v in part.known.items():
            if poly[i] != v:
                raise ReconstructionError(f"recovered coefficient {i} contradicts the seeded value")


def reconstruct_linear(mu_M: MobiusPoly, mu_Mstar: MobiusPoly) -> ReconstructionReport:
    pm, ps = seed_partial(mu_M, mu_Mstar)
    n, k, d, dstar = pm.n, pm.k, pm.d, pm.dstar
    unk = [("chi", i) for i in pm.unknown] + [("chi*", i) for i in ps.unknown]
    eqs = dual_identity_equations(n, k)
    assert len(unk) == 2 * (n - d - dstar + 2), "unknown count disagrees with 2(n-d-d*+2)"
    assert len(eqs) == n + 1

    col = {u: c for c, u in enumerate(unk)}

    def system_at(t: int):
        A, b = [], []
        for eq in eqs:
            scale = Fraction(t) ** eq.t_power
            row = [Fraction(0)] * len(unk)
            rhs = Fraction(0)
            for i, c in eq.left.items():
                if i in pm.known:
                    rhs -= c * scale * pm.known[i](t)
                else:
                    row[col[("chi", i)]] += c * scale
            for i, c in eq.right.items():
                if i in ps.known:
                    rhs += c * ps.known[i](t)
                else:
                    row[col[("chi*", i)]] -= c
            A.append(row)
            b.append(rhs)
        return A, b

    points_needed = max(k, n - k) + 2
    rank, points, sols = _solve_pointwise(system_at, len(unk), points_needed)
    report = ReconstructionReport("linear", "underdetermined", n, k, d, dstar,
                                  len(eqs), len(unk), rank, points)
    if rank < len(unk):
        return report
    bounds = [k if kind == "chi" else n - k for kind, _ in unk]
    polys = _interpolate_unknowns(points, sols, bounds)
    chi = [pm.known.get(i) for i in range(n + 1)]
    chis = [ps.known.get(i) for i in range(n + 1)]
    for (kind, i), p in zip(unk, polys):
        (chi if kind == "chi" else chis)[i] = p
    report.chi = CoboundaryPoly(n, k, SPoly(tuple(chi)))
    report.chi_star = CoboundaryPoly(n, n - k, SPoly(tuple(chis)))
    _verify(report.chi, report.chi_star, pm, ps)
    report.outcome = "unique"
    return report


def reconstruct_zeta(mu_M: MobiusPoly, mu_Mstar: MobiusPoly) -> ReconstructionReport:
    pm, ps = seed_partial(mu_M, mu_Mstar)
    n, k, d, dstar = pm.n, pm.k, pm.d, pm.dstar
    r = n - d - dstar + 2
    exps = [dual_exponent(i, k, dstar) for i in range(r + 1)]
    # (side, j): side "M" rows use P_i directly, side "M*" rows use P*_i = T^e_i P_{r-i}
    rows = [("M", j) for j in range(dstar - 1)] + [("M", n)]
    rows += [("M*", j) for j in range(d - 1)] + [("M*", n)]
    assert len(rows) == d + dstar

    def system_at(t: int):
        A, b = [], []
        for side, j in rows:
            row = [Fraction(0)] * (r + 1)
            if side == "M":
                for i in range(r + 1):
                    row[i] += basis_coeff(n, d + i, j)(t)
                rhs = pm.known[j](t)
            else:
                for i in range(r + 1):
                    row[r - i] += basis_coeff(n, dstar + i, j)(t) * Fraction(t) ** exps[i]
                rhs = ps.known[j](t)
            A.append(row)
            b.append(rhs)
        return A, b

    bound = k + r
    rank, points, sols = _solve_pointwise(system_at, r + 1, bound + 2)
    report = ReconstructionReport("zeta", "underdetermined", n, k, d, dstar,
                                  len(rows), r + 1, rank, points)
    if rank < r + 1:
        return report
    P = _interpolate_unknowns(points, sols, [bound] * (r + 1))
    report.zeta = ZetaPoly(n, k, d, dstar, SPoly(tuple(P)))
    report.chi = chi_from_zeta(report.zeta)
    try:
        report.chi_star = chi_dual(report.chi)
    except ArithmeticError as exc:
        raise ReconstructionError(f"recovered chi has no polynomial dual: {exc}") from None
    _verify(report.chi, report.chi_star, pm, ps)
    report.outcome = "unique"
    return report


def reconstruct(mu_M: MobiusPoly, mu_Mstar: MobiusPoly, method: str = "linear") -> ReconstructionReport:
    if method == "linear":
        return reconstruct_linear(mu_M, mu_Mstar)
    if method == "zeta":
        return reconstruct_zeta(mu_M, mu_Mstar)
    raise ValueError(f"unknown method {method!r}")


__all__ = [
    "PartialChi", "ReconstructionError", "ReconstructionReport", "ZetaError",
    "bound_holds", "dstar_from_mobius", "reconstruct", "reconstruct_linear",
    "reconstruct_zeta", "seed_partial",
]
