"""Prime fields and their small extensions F_{p^m}.

Elements of F_{p^m} are encoded as integers in [0, p^m) whose base-p digits are
the coefficients (constant term first) of a polynomial reduced modulo the
field's monic irreducible. The prime field F_p sits inside as 0..p-1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _polymod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of a by the monic polynomial mod (coefficient lists, constant first)."""
    a = [x % p for x in a]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    a = a[:dm] if len(a) > dm else a
    while a and a[-1] == 0:
        a.pop()
    return a


def _monics(p: int, deg: int):
    for tail in itertools.product(range(p), repeat=deg):
        yield list(reversed(tail)) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(poly) - 1
    for dd in range(1, deg // 2 + 1):
        for div in _monics(p, dd):
            if not _polymod(poly, div, p):
                return False
    return True


def least_irreducible(p: int, m: int) -> list[int]:
    """Lexicographically least monic irreducible of degree m (leading digits first)."""
    for tail in itertools.product(range(p), repeat=m):
        cand = list(reversed(tail)) + [1]
        if is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible of degree {m} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    p: int
    m: int = 1
    modulus: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError("extension degree must be >= 1")
        if self.m == 1:
            if self.modulus is not None:
                raise ValueError("prime fields carry no modulus")
            return
        mod = self.modulus
        if mod is None:
            mod = tuple(least_irreducible(self.p, self.m))
            object.__setattr__(self, "modulus", mod)
        if len(mod) != self.m + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree m")
        if not is_irreducible(list(mod), self.p):
            raise ValueError(f"modulus {mod} is reducible over F_{self.p}")

    @property
    def order(self) -> int:
        return self.p ** self.m

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        v = 0
        for c in reversed(digits):
            v = v * self.p + c
        return v

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.order
        a = np.arange(q)
        out = np.zeros((q, q), dtype=np.int64)
        place = 1
        for _ in range(self.m):
            da = (a // place) % self.p
            out += ((da[:, None] + da[None, :]) % self.p) * place
            place *= self.p
        return out

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.order
        if self.m == 1:
            a = np.arange(q)
            return (a[:, None] * a[None, :]) % self.p
        out = np.zeros((q, q), dtype=np.int64)
        digits = [self._digits(a) for a in range(q)]
        mod = list(self.modulus)
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * self.m - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] += x * y
                red = _polymod(prod, mod, self.p)
                out[a, b] = out[b, a] = self._encode(red + [0] * (self.m - len(red)))
        return out

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([int(np.argmax(self.add_table[a] == 0)) for a in range(self.order)])

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.order, dtype=np.int64)
        for a in range(1, self.order):
            inv[a] = int(np.argmax(self.mul_table[a] == 1))
        return inv

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return int(self.mul_table[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return int(self.inv_table[a])
