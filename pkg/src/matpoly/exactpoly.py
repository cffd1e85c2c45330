"""Exact univariate (Laurent) polynomials in T over the rationals, plus the
interpolation and linear-solve routines everything else is built on."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]


class PolyError(ArithmeticError):
    pass


class InconsistentSystem(PolyError):
    """Raised when a linear system has no solution."""


def _frac(x: Number) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PolyT:
    """Laurent polynomial ``sum c_i T^(offset + i)`` with Fraction coefficients.

    Instances are immutable and kept canonical: no zero coefficients at either
    end, and the zero polynomial has no coefficients and offset 0.
    """

    __slots__ = ("coeffs", "offset")

    def __init__(self, coeffs: Iterable[Number] = (), offset: int = 0):
        cs = [_frac(c) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo] == 0:
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.coeffs: tuple[Fraction, ...] = ()
            self.offset = 0
        else:
            self.coeffs = tuple(cs[lo:hi])
            self.offset = offset + lo

    # constructors

    @classmethod
    def const(cls, c: Number) -> PolyT:
        return cls([c])

    @classmethod
    def monomial(cls, exp: int, c: Number = 1) -> PolyT:
        return cls([c], exp)

    @classmethod
    def from_dict(cls, terms: dict[int, Number]) -> PolyT:
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    # structure

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Highest exponent; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return self.offset + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        return self.offset if self.coeffs else 0

    def is_polynomial(self) -> bool:
        return self.valuation >= 0

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def coeff(self, exp: int) -> Fraction:
        i = exp - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def dense(self) -> list[Fraction]:
        """Ascending coefficients from T^0; requires a genuine polynomial."""
        if not self.is_polynomial():
            raise PolyError(f"negative powers of T present: {self}")
        return [Fraction(0)] * self.offset + list(self.coeffs)

    def terms(self) -> dict[int, Fraction]:
        return {self.offset + i: c for i, c in enumerate(self.coeffs) if c}

    # arithmetic

    def __add__(self, other: PolyT | Number) -> PolyT:
        other = _lift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.offset, other.offset)
        hi = max(self.degree, other.degree)
        out = [Fraction(0)] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.offset - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.offset - lo + i] += c
        return PolyT(out, lo)

    __radd__ = __add__

    def __neg__(self) -> PolyT:
        return PolyT([-c for c in self.coeffs], self.offset)

    def __sub__(self, other: PolyT | Number) -> PolyT:
        return self + (-_lift(other))

    def __rsub__(self, other: Number) -> PolyT:
        return _lift(other) - self

    def __mul__(self, other: PolyT | Number) -> PolyT:
        if not isinstance(other, PolyT):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return PolyT()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyT(out, self.offset + other.offset)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> PolyT:
        if e < 0:
            if len(self.coeffs) != 1:
                raise PolyError("only monomials have negative powers")
            return PolyT([1 / self.coeffs[0] ** (-e)], self.offset * e)
        out = PolyT.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: Number) -> PolyT:
        c = _frac(c)
        return PolyT([c * x for x in self.coeffs], self.offset)

    def __truediv__(self, c: Number) -> PolyT:
        if isinstance(c, PolyT):
            q, r = self.divmod(c)
            if not r.is_zero():
                raise PolyError(f"{self} is not divisible by {c}")
            return q
        c = _frac(c)
        if c == 0:
            raise ZeroDivisionError("division of PolyT by zero")
        return self.scale(1 / c)

    def shift(self, m: int) -> PolyT:
        """Multiply by T^m (m may be negative)."""
        return PolyT(self.coeffs, self.offset + m)

    def taylor_shift(self, c: Number) -> PolyT:
        """Return P(T + c)."""
        out = PolyT()
        lin = PolyT([c, 1])
        for e, a in self.terms().items():
            if e < 0 and c != 0:
                raise PolyError("cannot shift the argument of a Laurent polynomial")
            out = out + (lin ** e).scale(a)
        return out

    def divmod(self, other: PolyT) -> tuple[PolyT, PolyT]:
        """Euclidean division of genuine polynomials."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = self.dense()
        den = other.dense()
        while den and den[-1] == 0:
            den.pop()
        q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
        lead = den[-1]
        for i in range(len(num) - len(den), -1, -1):
            f = num[i + len(den) - 1] / lead
            q[i] = f
            if f:
                for j, d in enumerate(den):
                    num[i + j] -= f * d
        return PolyT(q), PolyT(num)

    def __call__(self, t: Number) -> Fraction:
        t = _frac(t)
        if not self.coeffs:
            return Fraction(0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc * t ** self.offset

    # comparison / hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyT.const(other)
        if not isinstance(other, PolyT):
            return NotImplemented
        return self.coeffs == other.coeffs and self.offset == other.offset

    def __hash__(self) -> int:
        return hash((self.coeffs, self.offset))

    # rendering

    def __repr__(self) -> str:
        return f"PolyT({self.render()!r})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Canonical text, ascending powers: ``3 + -4*T + T^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.terms().items()):
            cs = str(c)
            if e == 0:
                parts.append(cs)
            else:
                mono = "T" if e == 1 else f"T^{e}"
                parts.append(mono if c == 1 else ("-" + mono if c == -1 else f"{cs}*{mono}"))
        return " + ".join(parts)

    def to_json(self) -> list[str]:
        """Dense coefficient strings from T^0; Laurent polys as ``{"offset", "coeffs"}``."""
        if self.is_polynomial():
            return [str(c) for c in self.dense()]
        return {"offset": self.offset, "coeffs": [str(c) for c in self.coeffs]}  # type: ignore[return-value]

    @classmethod
    def from_json(cls, data) -> PolyT:
        if isinstance(data, dict):
            return cls([Fraction(c) for c in data["coeffs"]], int(data["offset"]))
        return cls([Fraction(c) for c in data])


def _lift(x: PolyT | Number) -> PolyT:
    return x if isinstance(x, PolyT) else PolyT.const(x)


T = PolyT([0, 1])
ONE = PolyT.const(1)
ZERO = PolyT()


@dataclass(frozen=True)
class SPoly:
    """Coefficient sequence of PolyT indexed by a power of an outer variable (S or Q)."""

    coeffs: tuple[PolyT, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_lift(c) for c in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> PolyT:
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Largest index with a nonzero coefficient; -1 when all vanish."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return -1

    def total(self) -> PolyT:
        """Evaluation at outer variable = 1."""
        out = ZERO
        for c in self.coeffs:
            out = out + c
        return out


# interpolation / exact linear algebra


def interpolate(points: Sequence[tuple[Number, Number]], degree_bound: int) -> PolyT:
    """Unique polynomial of degree <= degree_bound through ``points``.

    Uses the first ``degree_bound + 1`` points for Newton interpolation and
    checks the rest; raises PolyError on duplicates, too few points, or data
    that need a higher degree.
    """
    pts = [(_frac(t), _frac(v)) for t, v in points]
    xs = [t for t, _ in pts]
    if len(set(xs)) != len(xs):
        raise PolyError("duplicate abscissae")
    m = degree_bound + 1
    if len(pts) < m:
        raise PolyError(f"need {m} points for degree bound {degree_bound}, got {len(pts)}")
    base = pts[:m]
    # divided differences
    coef = [v for _, v in base]
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (base[i][0] - base[i - j][0])
    poly = PolyT.const(coef[-1]) if m else ZERO
    for i in range(m - 2, -1, -1):
        poly = poly * PolyT([-base[i][0], 1]) + coef[i]
    for t, v in pts[m:]:
        if poly(t) != v:
            raise PolyError(f"degree bound {degree_bound} exceeded (mismatch at T={t})")
    return poly


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of ``solve_exact``; ``solution`` is set only when unique."""

    rank: int
    n_unknowns: int
    solution: tuple[Fraction, ...] | None

    @property
    def kernel_dim(self) -> int:
        return self.n_unknowns - self.rank

    @property
    def unique(self) -> bool:
        return self.solution is not None


def row_reduce(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q on the first ``ncols`` columns (in place)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def solve_exact(A: Sequence[Sequence[Number]], b: Sequence[Number]) -> LinearSolution:
    """Solve ``A x = b`` exactly over Q.

    Raises InconsistentSystem if no solution exists. Otherwise reports the
    rank, and the solution when it is unique.
    """
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    if len(b) != nrows:
        raise ValueError("row count of A and length of b differ")
    rows = [[_frac(x) for x in row] + [_frac(bi)] for row, bi in zip(A, b)]
    rows, pivots = row_reduce(rows, ncols)
    rank = len(pivots)
    for row in rows[rank:]:
        if row[-1] != 0:
            raise InconsistentSystem(f"inconsistent system (rank {rank})")
    if rank < ncols:
        return LinearSolution(rank, ncols, None)
    x = tuple(rows[i][-1] for i in range(ncols))
    # belt and braces: the reduction is exact, but every equation is rechecked
    for row, bi in zip(A, b):
        if sum(_frac(a) * xi for a, xi in zip(row, x)) != _frac(bi):
            raise InconsistentSystem("residual equation violated")
    return LinearSolution(rank, ncols, x)


def matrix_rank_q(A: Sequence[Sequence[Number]]) -> int:
    if not A:
        return 0
    rows = [[_frac(x) for x in row] for row in A]
    return len(row_reduce(rows, len(rows[0]))[1])
