"""Duality for coboundary polynomials: the S -> (S+T-1)/(S-1) transform and
its coefficient-wise (MacWilliams-type) form."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exactpoly import ONE, ZERO, PolyT, SPoly
from .invariants import CoboundaryPoly


class DualityError(ArithmeticError):
    pass


def _binomial_powers(n: int, shift: PolyT) -> list[list[PolyT]]:
    """rows[i][a] = coefficient of S^a in (S + shift)^i, for i = 0..n."""
    powers = [ONE]
    for _ in range(n):
        powers.append(powers[-1] * shift)
    return [[powers[i - a].scale(comb(i, a)) for a in range(i + 1)] for i in range(n + 1)]


def chi_dual(chi: CoboundaryPoly) -> CoboundaryPoly:
    """chi*(S, T) = (S-1)^n T^-k chi((S+T-1)/(S-1), T), expanded exactly.

    Raises DualityError if negative powers of T survive, which cannot happen
    for the coboundary polynomial of a matroid.
    """
    n, k = chi.n, chi.k
    plus = _binomial_powers(n, PolyT([-1, 1]))   # (S + T - 1)^i
    minus = _binomial_powers(n, PolyT([-1]))     # (S - 1)^j
    out = [ZERO] * (n + 1)
    for i, c in enumerate(chi.chi):
        if c.is_zero():
            continue
        for a, pa in enumerate(plus[i]):
            ca = c * pa
            for b, mb in enumerate(minus[n - i]):
                out[a + b] = out[a + b] + ca * mb
    out = [c.shift(-k) for c in out]
    bad = [i for i, c in enumerate(out) if not c.is_polynomial()]
    if bad:
        raise DualityError(f"negative powers of T remain in chi*_{bad[0]}: {out[bad[0]]}")
    return CoboundaryPoly(n, n - k, SPoly(tuple(out)))


@dataclass(frozen=True)
class DualIdentity:
    """T^(v-k) sum_i left[i] chi_i(T) = sum_i right[i] chi*_i(T), integer weights."""

    v: int
    t_power: int
    left: dict[int, int]
    right: dict[int, int]

    def residual(self, chi: SPoly, chi_star: SPoly) -> PolyT:
        lhs = ZERO
        for i, c in self.left.items():
            lhs = lhs + chi[i].scale(c)
        rhs = ZERO
        for i, c in self.right.items():
            rhs = rhs + chi_star[i].scale(c)
        return lhs.shift(self.t_power) - rhs


def dual_identity_equations(n: int, k: int) -> list[DualIdentity]:
    """The n+1 coefficient relations between chi_M and chi_{M*}, one per v = 0..n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return [
        DualIdentity(
            v=v,
            t_power=v - k,
            left={i: comb(i, v) for i in range(v, n + 1)},
            right={i: comb(i, n - v) for i in range(n - v, n + 1)},
        )
        for v in range(n + 1)
    ]


@dataclass(frozen=True)
class DualityReport:
    ok: bool
    checked: int
    first_failure: int | None = None
    residual: PolyT | None = None

    def line(self) -> str:
        if self.ok:
            return f"all {self.checked} dual identities hold"
        return f"dual identity v={self.first_failure} fails (residual {self.residual})"


def check_dual_identities(chi: CoboundaryPoly, chi_star: CoboundaryPoly) -> DualityReport:
    if chi.n != chi_star.n or chi_star.k != chi.n - chi.k:
        raise ValueError("parameters of chi and chi* do not match (n, k) / (n, n-k)")
    eqs = dual_identity_equations(chi.n, chi.k)
    for eq in eqs:
        res = eq.residual(chi.chi, chi_star.chi)
        if not res.is_zero():
            return DualityReport(False, len(eqs), eq.v, res)
    return DualityReport(True, len(eqs))
