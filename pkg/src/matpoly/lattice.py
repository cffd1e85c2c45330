"""Lattice of flats of a simple matroid, with its Moebius function."""
from __future__ import annotations

from functools import cached_property

import numpy as np

from .matroid import Matroid, MatroidError, popcount, simplicity_violation


class LatticeError(MatroidError):
    pass


class GeometricLattice:
    """Flats of a simple matroid, sorted by (rank, bitmask).

    The full Moebius table is computed eagerly, so instances are read-only
    after construction.
    """

    def __init__(self, M: Matroid):
        bad = simplicity_violation(M)
        if bad is not None:
            raise LatticeError(f"matroid is not simple: {bad}")
        self.n = M.n
        self.k = M.k
        strata = _enumerate_flats(M)
        self.flats: list[int] = [f for layer in strata for f in layer]
        self.ranks = np.array([r for r, layer in enumerate(strata) for _ in layer], dtype=np.int64)
        self.sizes = np.array([popcount(f) for f in self.flats], dtype=np.int64)
        self.index = {f: i for i, f in enumerate(self.flats)}
        self.counts = tuple(len(layer) for layer in strata)
        self.mu = _mobius_matrix(self.flats, self.n)

    def __len__(self) -> int:
        return len(self.flats)

    @property
    def bottom(self) -> int:
        return self.flats[0]

    @property
    def top(self) -> int:
        return self.flats[-1]

    def rank_of(self, flat: int) -> int:
        return int(self.ranks[self._ord(flat)])

    def _ord(self, flat: int) -> int:
        try:
            return self.index[flat]
        except KeyError:
            raise LatticeError(f"{flat:#b} is not a flat") from None

    def mobius(self, x: int, y: int) -> int:
        if x & ~y:
            raise LatticeError("mobius(x, y) needs x <= y")
        return int(self.mu[self._ord(x), self._ord(y)])

    def whitney(self, i: int, j: int) -> int:
        """Sum of mu(x, y) over r(x) = i, r(y) = k - j."""
        xs = self.ranks == i
        ys = self.ranks == self.k - j
        return int(self.mu[np.ix_(xs, ys)].sum())

    @cached_property
    def hyperplanes(self) -> list[int]:
        return [f for f, r in zip(self.flats, self.ranks) if r == self.k - 1]

    def covers(self, x: int) -> list[int]:
        r = self.rank_of(x)
        return [f for f, rr in zip(self.flats, self.ranks) if rr == r + 1 and f & x == x]


def _enumerate_flats(M: Matroid) -> list[list[int]]:
    if M.n <= 22:
        _ = M.rank_table
    bottom = M.closure(0)
    strata = [[bottom]]
    for _ in range(M.k):
        nxt: set[int] = set()
        for f in strata[-1]:
            for e in range(M.n):
                if not f >> e & 1:
                    nxt.add(M.closure(f | (1 << e)))
        strata.append(sorted(nxt))
    return strata


def _mobius_matrix(flats: list[int], n: int) -> np.ndarray:
    """mu as a dense matrix, by mu(x, y) = -sum_{x <= z < y} mu(x, z).

    Flats are rank-sorted, so every z < y precedes y and each column only
    depends on earlier columns. int64 is exact here: |mu| stays far below
    2^63 for the n this code can enumerate.
    """
    m = len(flats)
    arr = np.array([int(f) for f in flats], dtype=np.int64)
    leq = (arr[:, None] & arr[None, :]) == arr[:, None]
    dtype = np.int64 if n <= 40 else object
    mu = np.zeros((m, m), dtype=dtype)
    for j in range(m):
        below = np.flatnonzero(leq[:j, j])
        col = -mu[:, below].sum(axis=1) if below.size else np.zeros(m, dtype=dtype)
        col[j] = 1
        mu[:, j] = col
    return mu


def build_lattice(M: Matroid) -> GeometricLattice:
    return GeometricLattice(M)
