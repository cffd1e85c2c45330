"""Deterministic matroid corpus used by the verification suite and scripts."""
from __future__ import annotations

from dataclasses import dataclass

from .matroid import Matrix, Matroid, RepresentableMatroid, UniformMatroid, params
from .search import sample_matrix, trial_rng

FANO = Matrix(2, ((1, 0, 0, 1, 1, 0, 1),
                  (0, 1, 0, 1, 0, 1, 1),
                  (0, 0, 1, 0, 1, 1, 1)))

# U(2,4) over F_5: columns e1, e2, e1+e2, e1+2e2
U24_F5 = Matrix(5, ((1, 0, 1, 1),
                    (0, 1, 1, 2)))

CORPUS_SEED = 20120601
FIELDS = (2, 3, 5, 7)


@dataclass(frozen=True)
class Entry:
    name: str
    matroid: Matroid


def uniform_family(max_n: int = 10) -> list[Entry]:
    """U(k, n) for 2 <= k <= n-2, n <= max_n: simple with simple dual."""
    return [Entry(f"U({k},{n})", UniformMatroid(k, n))
            for n in range(4, max_n + 1) for k in range(2, n - 1)]


def random_representable(count: int, max_n: int = 10, seed: int = CORPUS_SEED) -> list[Entry]:
    """First ``count`` random matrices that give a simple matroid with simple dual.

    Field, rank and size are drawn per attempt, so the set mixes MDS and
    non-MDS matroids over F_2, F_3, F_5, F_7.
    """
    out: list[Entry] = []
    i = 0
    while len(out) < count:
        rng = trial_rng(seed, i)
        q = int(rng.choice(FIELDS))
        n = int(rng.integers(5, max_n + 1))
        k = int(rng.integers(2, n - 1))
        mat = sample_matrix(rng, q, k, n)
        M = RepresentableMatroid(mat)
        p = params(M)
        if p.k == k and p.simple and p.cosimple:
            out.append(Entry(f"rand{i}[q={q},k={k},n={n}]", M))
        i += 1
    return out


def standard_corpus(random_count: int = 50) -> list[Entry]:
    return (uniform_family()
            + [Entry("Fano", RepresentableMatroid(FANO)), Entry("Fano*", RepresentableMatroid(FANO).dual())]
            + random_representable(random_count))
