"""Coboundary, Moebius, Tutte and extended weight enumerator polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .exactpoly import ONE, ZERO, PolyT, SPoly
from .fields import FieldSpec
from .lattice import GeometricLattice
from .matroid import Matrix, Matroid, popcounts

ENUM_LIMIT = 1 << 24
TUTTE_MAX_N = 24


@dataclass(frozen=True)
class CoboundaryPoly:
    """chi(S, T) = sum_i chi[i](T) S^i for a matroid of size n and rank k."""

    n: int
    k: int
    chi: SPoly

    def __post_init__(self):
        if not isinstance(self.chi, SPoly):
            object.__setattr__(self, "chi", SPoly(tuple(self.chi)))
        if len(self.chi) != self.n + 1:
            raise ValueError(f"coboundary polynomial needs n+1 = {self.n + 1} coefficients")

    def __getitem__(self, i: int) -> PolyT:
        return self.chi[i]

    def weights(self) -> WeightDistribution:
        return WeightDistribution(self.n, tuple(self.chi[self.n - w] for w in range(self.n + 1)))

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "chi": [c.to_json() for c in self.chi]}

    def render(self, name: str = "chi") -> str:
        return "\n".join(f"{name}_{i} = {c.render()}" for i, c in enumerate(self.chi))


@dataclass(frozen=True)
class MobiusPoly:
    """mu(S, T) = sum_i mu[i](T) S^i, degree k in S."""

    n: int
    k: int
    mu: SPoly

    def __post_init__(self):
        if not isinstance(self.mu, SPoly):
            object.__setattr__(self, "mu", SPoly(tuple(self.mu)))
        if len(self.mu) != self.k + 1:
            raise ValueError(f"Moebius polynomial needs k+1 = {self.k + 1} coefficients")

    def __getitem__(self, i: int) -> PolyT:
        return self.mu[i]

    def flat_count(self, i: int) -> int:
        """Coefficient of S^i T^(k-i): the number of rank-i flats."""
        c = self.mu[i].coeff(self.k - i)
        if c.denominator != 1:
            raise ValueError("non-integral Whitney number")
        return int(c)

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "mu": [c.to_json() for c in self.mu]}

    @classmethod
    def from_json(cls, data: dict) -> MobiusPoly:
        return cls(int(data["n"]), int(data["k"]), SPoly(tuple(PolyT.from_json(c) for c in data["mu"])))

    def render(self, name: str = "mu") -> str:
        return "\n".join(f"{name}_{i} = {c.render()}" for i, c in enumerate(self.mu))


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    A: tuple[PolyT, ...]

    def at(self, t: int) -> list[int]:
        return [int(a(t)) for a in self.A]


def _grouped_sum(L: GeometricLattice, groups: np.ndarray, ngroups: int) -> list[PolyT]:
    out = []
    for g in range(ngroups):
        rows = groups == g
        if not rows.any():
            out.append(ZERO)
            continue
        colsum = L.mu[rows].sum(axis=0)
        terms: dict[int, int] = {}
        for s in range(L.k + 1):
            v = int(colsum[L.ranks == s].sum())
            if v:
                terms[L.k - s] = v
        out.append(PolyT.from_dict(terms))
    return out


def _lattice(M: Matroid | GeometricLattice) -> GeometricLattice:
    return M if isinstance(M, GeometricLattice) else GeometricLattice(M)


def coboundary(M: Matroid | GeometricLattice) -> CoboundaryPoly:
    """Double Moebius sum with weight S^|x| T^(k - r(y)); atoms are singletons."""
    L = _lattice(M)
    return CoboundaryPoly(L.n, L.k, SPoly(tuple(_grouped_sum(L, L.sizes, L.n + 1))))


def mobius_poly(M: Matroid | GeometricLattice) -> MobiusPoly:
    L = _lattice(M)
    return MobiusPoly(L.n, L.k, SPoly(tuple(_grouped_sum(L, L.ranks, L.k + 1))))


def uniform_coboundary_coeff(n: int, d: int, j: int) -> PolyT:
    """Coefficient of S^j in the coboundary polynomial of U(n-d+1, n)."""
    if j == n:
        return ONE
    top = n - j - d
    if top < 0:
        return ZERO
    inner = PolyT.from_dict({top - t: (-1) ** t * comb(n - j - 1, t) for t in range(top + 1)})
    return (inner * PolyT([-1, 1])).scale(comb(n, j))


def uniform_coboundary(n: int, d: int) -> CoboundaryPoly:
    """Closed form for the uniform matroid of rank n-d+1 on n elements.

    Defined for every 2 <= d <= n (the case d = n+1 is the rank-0 matroid,
    also accepted since the basis expansions need it formally).
    """
    if not 1 <= d <= n + 1:
        raise ValueError(f"need 1 <= d <= n+1, got n={n}, d={d}")
    return CoboundaryPoly(n, n - d + 1, SPoly(tuple(uniform_coboundary_coeff(n, d, j) for j in range(n + 1))))


# Tutte polynomial


@dataclass(frozen=True)
class TuttePoly:
    """Integer bivariate polynomial, stored as {(i, j): coefficient of x^i y^j}."""

    coeffs: dict

    def __call__(self, x, y):
        return sum(c * x ** i * y ** j for (i, j), c in self.coeffs.items())

    def swap(self) -> TuttePoly:
        return TuttePoly({(j, i): c for (i, j), c in self.coeffs.items()})

    def render(self) -> str:
        parts = []
        for (i, j), c in sorted(self.coeffs.items()):
            mono = "*".join(s for s in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}")) if s)
            parts.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts) or "0"


def tutte(M: Matroid) -> TuttePoly:
    """Corank-nullity expansion over all 2^n subsets."""
    if M.n > TUTTE_MAX_N:
        raise ValueError(f"Tutte enumeration limited to n <= {TUTTE_MAX_N}")
    tab = M.rank_table
    k = int(tab[-1])
    corank = k - tab
    nullity = popcounts(M.n) - tab
    counts: dict[tuple[int, int], int] = {}
    pairs, mult = np.unique(np.stack([corank, nullity], axis=1), axis=0, return_counts=True)
    for (a, b), c in zip(pairs.tolist(), mult.tolist()):
        counts[(a, b)] = c
    out: dict[tuple[int, int], int] = {}
    for (a, b), c in counts.items():
        # (x-1)^a (y-1)^b
        for i in range(a + 1):
            for j in range(b + 1):
                v = c * comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
                out[(i, j)] = out.get((i, j), 0) + v
    return TuttePoly({key: v for key, v in out.items() if v})


def count_bases(M: Matroid) -> int:
    tab = M.rank_table
    pc = popcounts(M.n)
    k = int(tab[-1])
    return int(np.count_nonzero((pc == k) & (tab == k)))


# brute-force codeword enumeration


def bruteforce_weights(mat: Matrix, field: FieldSpec | None = None, chunk: int = 1 << 16) -> list[int]:
    """Count codewords of each Hamming weight in the code spanned by ``mat``'s rows over ``field``."""
    field = field or FieldSpec(mat.q)
    if field.p != mat.q:
        raise ValueError("field characteristic differs from matrix field")
    q, k, n = field.order, mat.k, mat.n
    if q ** k > ENUM_LIMIT:
        raise ValueError(f"{q}^{k} codewords exceed the enumeration limit 2^24")
    G = np.array(mat.rows, dtype=np.int64)
    counts = np.zeros(n + 1, dtype=np.int64)
    total = q ** k
    if field.m > 1:
        mul, add = field.mul_table, field.add_table
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = np.stack([(idx // q ** i) % q for i in range(k)], axis=1)
        if field.m == 1:
            words = (msgs @ G) % q
        else:
            words = np.zeros((len(idx), n), dtype=np.int64)
            for i in range(k):
                words = add[words, mul[msgs[:, i][:, None], G[i][None, :]]]
        counts += np.bincount(np.count_nonzero(words, axis=1), minlength=n + 1)
    return [int(c) for c in counts]

