"""Two-variable zeta polynomial: coordinates of chi on the uniform basis X_{n,d}, ..., X_{n,d+r}."""
from __future__ import annotations

from dataclasses import dataclass

from .exactpoly import ZERO, PolyError, PolyT, SPoly
from .invariants import CoboundaryPoly, uniform_coboundary_coeff


class ZetaError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ZetaPoly:
    """P(Q, T) = sum_i P[i](T) Q^i attached to parameters (n, k, d, d*)."""

    n: int
    k: int
    d: int
    dstar: int
    P: SPoly

    def __post_init__(self):
        if not isinstance(self.P, SPoly):
            object.__setattr__(self, "P", SPoly(tuple(self.P)))
        if len(self.P) != self.r + 1:
            raise ValueError(f"zeta polynomial needs r+1 = {self.r + 1} coefficients")

    @property
    def r(self) -> int:
        return self.n - self.d - self.dstar + 2

    @property
    def q_degree(self) -> int:
        return self.P.degree

    @property
    def laurent(self) -> list[int]:
        """Indices i whose P_i carries negative powers of T."""
        return [i for i, p in enumerate(self.P) if not p.is_polynomial()]

    def is_one(self) -> bool:
        return self.r == 0 and self.P[0] == 1

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "dstar": self.dstar, "r": self.r,
                "P": [p.to_json() for p in self.P], "laurent": self.laurent}

    def render(self) -> str:
        lines = [f"r={self.r}"] + [f"P_{i} = {p.render()}" for i, p in enumerate(self.P)]
        if self.laurent:
            lines.append(f"laurent coefficients at {self.laurent}")
        return "\n".join(lines)


def basis_coeff(n: int, d: int, j: int) -> PolyT:
    """X_{n,d,j}: coefficient of S^j in the uniform basis element X_{n,d}."""
    if not 1 <= d <= n + 1:
        raise ZetaError(f"uniform basis element X_{{{n},{d}}} does not exist")
    return uniform_coboundary_coeff(n, d, j)


def zeta_from_chi(chi: CoboundaryPoly, d: int, dstar: int) -> ZetaPoly:
    """Solve chi_j = sum_i P_i X_{n,d+i,j} for P_0..P_r.

    Rows j = n-d, n-d-1, ..., d*-1 are triangular (X_{n,d+i,j} vanishes for
    j > n-d-i, and its diagonal entry is C(n,j)(T-1)), so they fix P; every
    other row is then checked.
    """
    n = chi.n
    r = n - d - dstar + 2
    if r < 0:
        raise ZetaError(f"d + d* = {d + dstar} exceeds n + 2 = {n + 2}")
    P: list[PolyT] = []
    for i in range(r + 1):
        j = n - d - i
        acc = chi[j]
        for l, p in enumerate(P):
            acc = acc - p * basis_coeff(n, d + l, j)
        try:
            P.append(acc / basis_coeff(n, d + i, j))
        except PolyError as exc:
            raise ZetaError(f"P_{i} is not a polynomial in T: {exc}") from None
    for j in range(n + 1):
        got = ZERO
        for i, p in enumerate(P):
            got = got + p * basis_coeff(n, d + i, j)
        if got != chi[j]:
            raise ZetaError(f"uniform-basis identity fails at S^{j}")
    return ZetaPoly(n, chi.k, d, dstar, SPoly(tuple(P)))


def chi_from_zeta(P: ZetaPoly) -> CoboundaryPoly:
    n = P.n
    chi = []
    for j in range(n + 1):
        c = ZERO
        for i, p in enumerate(P.P):
            if not p.is_zero():
                c = c + p * basis_coeff(n, P.d + i, j)
        chi.append(c)
    return CoboundaryPoly(n, P.k, SPoly(tuple(chi)))


def dual_exponent(i: int, k: int, dstar: int) -> int:
    """Power of T in P*_i = T^(i - k - 1 + d*) P_{r-i}."""
    return i - k - 1 + dstar


def zeta_dual(P: ZetaPoly) -> ZetaPoly:
    r = P.r
    out = tuple(P.P[r - i].shift(dual_exponent(i, P.k, P.dstar)) for i in range(r + 1))
    return ZetaPoly(P.n, P.n - P.k, P.dstar, P.d, SPoly(out))
