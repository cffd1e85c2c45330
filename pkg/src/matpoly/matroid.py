"""Matroids given by rank oracles over bitmask subsets of {0, ..., n-1}."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Sequence, Union

import numpy as np

from .fields import FieldSpec, is_prime

MAX_N = 62
TABLE_MAX_N = 22  # rank tables hold 2^n entries


class MatroidError(ValueError):
    pass


def popcount(x: int) -> int:
    return bin(x).count("1")


def members(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def to_mask(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << e
    return m


def popcounts(n: int) -> np.ndarray:
    pc = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        pc[1 << i: 1 << (i + 1)] = pc[: 1 << i] + 1
    return pc


@dataclass(frozen=True)
class Matrix:
    """A k x n matrix over the prime field F_q, stored row-major."""

    q: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.q):
            raise MatroidError(f"field size {self.q} is not prime")
        rows = tuple(tuple(int(x) % self.q for x in r) for r in self.rows)
        if not rows or not rows[0]:
            raise MatroidError("matrix dimensions must be positive")
        if any(len(r) != len(rows[0]) for r in rows):
            raise MatroidError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def to_text(self) -> str:
        lines = [f"{self.q} {self.k} {self.n}"]
        lines += [" ".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Matrix:
        lines = [ln.split() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln[0].startswith("#")]
        if not lines or len(lines[0]) != 3:
            raise MatroidError("header line must read 'q k n'")
        q, k, n = (int(x) for x in lines[0])
        body = lines[1:]
        if len(body) != k:
            raise MatroidError(f"expected {k} matrix rows, found {len(body)}")
        rows = []
        for ln in body:
            if len(ln) != n:
                raise MatroidError(f"expected {n} entries per row, found {len(ln)}")
            vals = [int(x) for x in ln]
            if any(not 0 <= v < q for v in vals):
                raise MatroidError(f"entries must lie in [0, {q})")
            rows.append(tuple(vals))
        return cls(q, tuple(rows))

    @classmethod
    def load(cls, path: str | Path) -> Matrix:
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


def rank_over(field: FieldSpec, vectors: Sequence[Sequence[int]]) -> int:
    """Rank of a list of vectors over ``field`` by Gaussian elimination."""
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][c])
        rows[rank] = [field.mul(inv, x) for x in rows[rank]]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def matrix_rank(mat: Matrix, cols: int | Sequence[int], field: FieldSpec | None = None) -> int:
    """Rank of the selected columns (bitmask or index list) of ``mat``.

    ``field`` defaults to F_q; passing an extension of F_q reads the same
    matrix over the larger field.
    """
    idx = members(cols) if isinstance(cols, int) else list(cols)
    if any(not 0 <= j < mat.n for j in idx):
        raise IndexError("column index out of range")
    if not idx:
        return 0
    field = field or FieldSpec(mat.q)
    if field.p != mat.q:
        raise MatroidError("field characteristic differs from matrix field")
    return rank_over(field, [mat.column(j) for j in idx])


class Matroid:
    """Base class: subclasses implement ``_rank(mask)``."""

    n: int

    def _rank(self, mask: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def k(self) -> int:
        return self.rank(self.full)

    def rank(self, mask: int) -> int:
        tab = self.__dict__.get("rank_table")
        if tab is not None:
            return int(tab[mask])
        return self._rank(mask)

    @cached_property
    def rank_table(self) -> np.ndarray:
        """r(A) for every bitmask A, as an int64 array of length 2^n."""
        if self.n > TABLE_MAX_N:
            raise MatroidError(f"rank table needs n <= {TABLE_MAX_N}")
        return self._build_table()

    def _build_table(self) -> np.ndarray:
        return np.array([self._rank(a) for a in range(1 << self.n)], dtype=np.int64)

    def closure(self, mask: int) -> int:
        r = self.rank(mask)
        out = mask
        for e in range(self.n):
            bit = 1 << e
            if not mask & bit and self.rank(mask | bit) == r:
                out |= bit
        return out

    def is_flat(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def dual(self) -> Matroid:
        return DualMatroid(self)


class RepresentableMatroid(Matroid):
    def __init__(self, matrix: Matrix):
        self.matrix = matrix
        self.n = matrix.n
        if self.n > MAX_N:
            raise MatroidError(f"n <= {MAX_N} required")
        self._field = FieldSpec(matrix.q)
        self._cols = [matrix.column(j) for j in range(self.n)]

    def _rank(self, mask: int) -> int:
        return rank_over(self._field, [self._cols[j] for j in members(mask)])

    def _build_table(self) -> np.ndarray:
        # Incremental echelon bases: A = B + {lowest element}.
        p = self.matrix.q
        size = 1 << self.n
        table = np.zeros(size, dtype=np.int64)
        bases: list[tuple] = [()] * size
        for a in range(1, size):
            low = a & -a
            rest = a ^ low
            v = list(self._cols[low.bit_length() - 1])
            basis = bases[rest]
            for piv, vec in basis:
                c = v[piv]
                if c:
                    v = [(x - c * y) % p for x, y in zip(v, vec)]
            piv = next((i for i, x in enumerate(v) if x), None)
            if piv is None:
                bases[a] = basis
                table[a] = table[rest]
            else:
                inv = pow(v[piv], p - 2, p)
                bases[a] = basis + ((piv, [x * inv % p for x in v]),)
                table[a] = table[rest] + 1
        return table

    def __repr__(self) -> str:
        return f"RepresentableMatroid(q={self.matrix.q}, k={self.matrix.k}, n={self.n})"


class UniformMatroid(Matroid):
    def __init__(self, k: int, n: int):
        if not 0 <= k <= n:
            raise MatroidError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
        if n > MAX_N:
            raise MatroidError(f"n <= {MAX_N} required")
        self.n = n
        self._k = k

    def _rank(self, mask: int) -> int:
        return min(popcount(mask), self._k)

    def _build_table(self) -> np.ndarray:
        return np.minimum(popcounts(self.n), self._k)

    def __repr__(self) -> str:
        return f"UniformMatroid({self._k}, {self.n})"


class DualMatroid(Matroid):
    """r*(A) = |A| + r(E \\ A) - r(E)."""

    def __init__(self, base: Matroid):
        self.base = base
        self.n = base.n

    def _rank(self, mask: int) -> int:
        return popcount(mask) + self.base.rank(self.full ^ mask) - self.base.k

    def _build_table(self) -> np.ndarray:
        tab = self.base.rank_table
        return popcounts(self.n) + tab[::-1] - self.base.k

    def dual(self) -> Matroid:
        return DualMatroid(self)

    def __repr__(self) -> str:
        return f"DualMatroid({self.base!r})"


class ExplicitMatroid(Matroid):
    """Matroid given by a full table of ranks; axioms are not checked on load."""

    def __init__(self, n: int, ranks: Sequence[int]):
        if len(ranks) != 1 << n:
            raise MatroidError(f"need 2^{n} = {1 << n} rank values, got {len(ranks)}")
        self.n = n
        self.__dict__["rank_table"] = np.asarray(ranks, dtype=np.int64)

    def _rank(self, mask: int) -> int:
        return int(self.rank_table[mask])

    @classmethod
    def from_text(cls, text: str) -> ExplicitMatroid:
        toks: list[str] = []
        for ln in text.splitlines():
            if ln.strip().startswith("#"):
                continue
            toks.extend(ln.split())
        if not toks:
            raise MatroidError("empty rank file")
        n = int(toks[0])
        return cls(n, [int(t) for t in toks[1:]])

    def to_text(self) -> str:
        vals = [str(int(x)) for x in self.rank_table]
        return f"{self.n}\n" + "\n".join(" ".join(vals[i:i + 16]) for i in range(0, len(vals), 16)) + "\n"

    def __repr__(self) -> str:
        return f"ExplicitMatroid(n={self.n})"


MatroidSource = Union[Matrix, tuple, Matroid]


def make_matroid(source: MatroidSource, *, dual: bool = False) -> Matroid:
    """Build a matroid from a Matrix, a ``(k, n)`` uniform pair, or dualize a Matroid."""
    if isinstance(source, Matrix):
        m: Matroid = RepresentableMatroid(source)
    elif isinstance(source, tuple):
        k, n = source
        m = UniformMatroid(k, n)
    elif isinstance(source, Matroid):
        m = source
    else:
        raise TypeError(f"cannot build a matroid from {type(source).__name__}")
    return m.dual() if dual else m


def load_matroid(path: str | Path) -> Matroid:
    """Matrix files start with a 'q k n' header; explicit-rank files with a single 'n'."""
    text = Path(path).read_text(encoding="utf-8")
    for ln in text.splitlines():
        parts = ln.split()
        if parts and not parts[0].startswith("#"):
            if len(parts) == 3:
                return RepresentableMatroid(Matrix.from_text(text))
            return ExplicitMatroid.from_text(text)
    raise MatroidError(f"{path}: no content")


# parameters

INF = math.inf


@dataclass(frozen=True)
class MatroidParams:
    n: int
    k: int
    d: float  # int, or math.inf when undefined
    dstar: float
    simple: bool
    cosimple: bool

    def line(self) -> str:
        def fmt(x):
            return "inf" if x == INF else str(int(x))
        return (f"n={self.n} k={self.k} d={fmt(self.d)} d*={fmt(self.dstar)} "
                f"simple={str(self.simple).lower()} cosimple={str(self.cosimple).lower()}")

    def as_dict(self) -> dict:
        def fmt(x):
            return None if x == INF else int(x)
        return {"n": self.n, "k": self.k, "d": fmt(self.d), "dstar": fmt(self.dstar),
                "simple": self.simple, "cosimple": self.cosimple}


def _masks_of_size(n: int, s: int):
    """All bitmasks of popcount s, in increasing order (Gosper's hack)."""
    if s == 0:
        yield 0
        return
    if s > n:
        return
    v = (1 << s) - 1
    limit = 1 << n
    while v < limit:
        yield v
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r


def girth(M: Matroid, limit: int | None = None) -> float:
    """Smallest circuit size by increasing-cardinality scan; inf if independent.

    With ``limit`` the scan stops after that cardinality and returns inf.
    """
    top = M.n if limit is None else min(limit, M.n)
    for s in range(1, top + 1):
        for a in _masks_of_size(M.n, s):
            if M.rank(a) < s:
                return s
    return INF


def cogirth(M: Matroid, limit: int | None = None) -> float:
    """Smallest cocircuit size: smallest C whose complement does not span."""
    k = M.k
    top = M.n if limit is None else min(limit, M.n)
    for s in range(1, top + 1):
        for c in _masks_of_size(M.n, s):
            if M.rank(M.full ^ c) < k:
                return s
    return INF


def params(M: Matroid) -> MatroidParams:
    k = M.k
    n = M.n
    dstar = girth(M)
    d = cogirth(M)
    if k == 0:
        d = INF
    if k == n:
        dstar = INF
    simple = k not in (0, n) and dstar > 2
    cosimple = k not in (0, n) and d > 2
    return MatroidParams(n, k, d, dstar, simple, cosimple)


def simplicity_violation(M: Matroid) -> str | None:
    """Describe a loop or parallel pair, or None if M is simple."""
    for e in range(M.n):
        if M.rank(1 << e) == 0:
            return f"element {e} is a loop"
    for e in range(M.n):
        for f in range(e + 1, M.n):
            if M.rank((1 << e) | (1 << f)) < 2:
                return f"elements {e} and {f} are parallel"
    return None


def rank_axiom_violations(M: Matroid) -> list[str]:
    """Check the rank axioms exhaustively over all subsets via their local forms.

    Local forms: r(empty) = 0; r(A) <= r(A+e) <= r(A) + 1; and
    r(A+e) + r(A+f) >= r(A+e+f) + r(A), which together are equivalent to
    boundedness, monotonicity and submodularity.
    """
    tab = M.rank_table
    n = M.n
    masks = np.arange(1 << n)
    out = []
    if tab[0] != 0:
        out.append("empty set: r(empty) != 0")
    if np.any(tab < 0) or np.any(tab > popcounts(n)):
        out.append("rank bounds: 0 <= r(A) <= |A| violated")
    for e in range(n):
        sel = masks[(masks >> e) & 1 == 0]
        inc = tab[sel | (1 << e)] - tab[sel]
        if np.any(inc < 0):
            a = int(sel[np.argmax(inc < 0)])
            out.append(f"monotonicity: r({members(a)} + {e}) < r({members(a)})")
            break
        if np.any(inc > 1):
            a = int(sel[np.argmax(inc > 1)])
            out.append(f"unit increase: adding {e} to {members(a)} raises rank by more than 1")
            break
    done = False
    for e in range(n):
        for f in range(e + 1, n):
            sel = masks[((masks >> e) & 1 == 0) & ((masks >> f) & 1 == 0)]
            lhs = tab[sel | (1 << e)] + tab[sel | (1 << f)]
            rhs = tab[sel | (1 << e) | (1 << f)] + tab[sel]
            bad = lhs < rhs
            if np.any(bad):
                a = int(sel[np.argmax(bad)])
                out.append(f"submodularity: fails for A={members(a)}, e={e}, f={f}")
                done = True
                break
        if done:
            break
    return out
