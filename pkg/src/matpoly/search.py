"""Random search for matroids with equal (mu_M, mu_M*) but different chi_M."""
from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .invariants import coboundary, mobius_poly
from .lattice import GeometricLattice
from .matroid import Matrix, RepresentableMatroid, cogirth, girth
from .fields import is_prime

log = logging.getLogger(__name__)


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchConfig:
    q: int = 7
    k: int = 5
    n: int = 10
    d: int = 3
    dstar: int = 3
    trials: int = 260
    seed: int = 0
    out: str | None = None
    max_attempts: int | None = None  # default 1000 * trials
    resume: bool = False
    record_timing: bool = False
    threads: int = 1

    def validate(self) -> None:
        if not is_prime(self.q):
            raise SearchError(f"q={self.q} is not prime")
        if not 0 < self.k < self.n:
            raise SearchError("need 0 < k < n")
        if self.d < 3 or self.dstar < 3:
            raise SearchError("d and d* must be at least 3 (simple matroid with simple dual)")
        if self.d > self.n - self.k + 1 or self.dstar > self.k + 1:
            raise SearchError(f"unreachable parameters: need d <= {self.n - self.k + 1}, d* <= {self.k + 1}")
        if self.trials < 0:
            raise SearchError("trials must be non-negative")

    @property
    def attempt_cap(self) -> int:
        return self.max_attempts if self.max_attempts is not None else 1000 * max(self.trials, 1)

    def public(self) -> dict:
        return {key: getattr(self, key) for key in ("q", "k", "n", "d", "dstar", "trials", "seed")}


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream per (seed, trial index)."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def sample_matrix(rng: np.random.Generator, q: int, k: int, n: int) -> Matrix:
    entries = rng.integers(0, q, size=(k, n))
    return Matrix(q, tuple(tuple(int(x) for x in row) for row in entries))


def fingerprint(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class TrialRecord:
    trial: int
    seed: int
    q: int
    matrix: list
    n: int
    k: int
    d: int
    dstar: int
    fp_mu: str
    fp_mu_star: str
    fp_chi: str
    wall_time: float | None = None

    def to_json(self) -> str:
        data = asdict(self)
        if data["wall_time"] is None:
            del data["wall_time"]
        return json.dumps(data, sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> TrialRecord:
        return cls(**json.loads(line))

    def matroid(self) -> RepresentableMatroid:
        return RepresentableMatroid(Matrix(self.q, tuple(tuple(r) for r in self.matrix)))


def polynomial_fingerprints(M) -> tuple[str, str, str]:
    """sha256 of the canonical text of mu_M, mu_M*, chi_M."""
    L = GeometricLattice(M)
    Ld = GeometricLattice(M.dual())
    return (fingerprint(mobius_poly(L).render()),
            fingerprint(mobius_poly(Ld).render()),
            fingerprint(coboundary(L).render()))


def passes_filter(M, k: int, d: int, dstar: int) -> bool:
    """Rank k, smallest circuit exactly dstar, smallest cocircuit exactly d."""
    if M.k != k:
        return False
    if girth(M, limit=dstar) != dstar:
        return False
    return cogirth(M, limit=d) == d


def evaluate_trial(cfg: SearchConfig, index: int) -> TrialRecord | None:
    start = time.perf_counter()
    mat = sample_matrix(trial_rng(cfg.seed, index), cfg.q, cfg.k, cfg.n)
    M = RepresentableMatroid(mat)
    if not passes_filter(M, cfg.k, cfg.d, cfg.dstar):
        return None
    fp_mu, fp_mu_star, fp_chi = polynomial_fingerprints(M)
    wall = round(time.perf_counter() - start, 6) if cfg.record_timing else None
    return TrialRecord(index, cfg.seed, cfg.q, [list(r) for r in mat.rows], cfg.n, cfg.k,
                       cfg.d, cfg.dstar, fp_mu, fp_mu_star, fp_chi, wall)


@dataclass
class CounterexampleGroup:
    fp_mu: str
    fp_mu_star: str
    classes: dict[str, list[int]]  # chi fingerprint -> trial indices

    def as_dict(self) -> dict:
        return {"fp_mu": self.fp_mu, "fp_mu_star": self.fp_mu_star,
                "chi_classes": [self.classes[key] for key in sorted(self.classes)]}


def group_records(records) -> dict[tuple[str, str], dict[str, list[int]]]:
    cells: dict[tuple[str, str], dict[str, list[int]]] = {}
    for rec in records:
        cell = cells.setdefault((rec.fp_mu, rec.fp_mu_star), {})
        cell.setdefault(rec.fp_chi, []).append(rec.trial)
    return cells


def detect_counterexamples(records) -> list[CounterexampleGroup]:
    """Cells of equal (mu, mu*) fingerprints that hold two or more chi fingerprints."""
    return [CounterexampleGroup(m, ms, classes)
            for (m, ms), classes in sorted(group_records(records).items())
            if len(classes) >= 2]


def reverify(group: CounterexampleGroup, records) -> bool:
    """Recompute every member's fingerprints from its stored matrix."""
    by_trial = {r.trial: r for r in records}
    seen_chi = set()
    for chi_fp, trials in group.classes.items():
        for t in trials:
            rec = by_trial[t]
            fps = polynomial_fingerprints(rec.matroid())
            if fps != (group.fp_mu, group.fp_mu_star, chi_fp):
                log.error("trial %d fingerprints do not survive recomputation", t)
                return False
            seen_chi.add(fps[2])
    return len(seen_chi) >= 2


@dataclass
class SearchSummary:
    config: dict
    attempted: int
    accepted: int
    groups: int
    counterexamples: list[dict] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return bool(self.counterexamples)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)


def _load_existing(cfg: SearchConfig) -> list[TrialRecord]:
    path = Path(cfg.out)
    records = [TrialRecord.from_json(ln) for ln in path.read_text().splitlines() if ln.strip()]
    for rec in records:
        if (rec.q, rec.k, rec.n, rec.d, rec.dstar, rec.seed) != (cfg.q, cfg.k, cfg.n, cfg.d, cfg.dstar, cfg.seed):
            raise SearchError(f"{path}: existing record {rec.trial} was produced by a different config")
    return records


def _thread_count(cfg: SearchConfig) -> int:
    env = os.environ.get("MATPOLY_THREADS")
    n = cfg.threads if env is None else int(env)
    if n == 0:
        return os.cpu_count() or 1
    return max(n, 1)


def _evaluate_batch(args):
    cfg, indices = args
    return [evaluate_trial(cfg, i) for i in indices]


def _stream(cfg: SearchConfig, start: int, workers: int):
    """Yield (index, record-or-None) in index order."""
    stop = cfg.attempt_cap
    if workers <= 1:
        for i in range(start, stop):
            yield i, evaluate_trial(cfg, i)
        return
    batch = 16
    with ProcessPoolExecutor(workers) as pool:
        next_idx = start
        while next_idx < stop:
            chunks = []
            for _ in range(workers * 4):
                if next_idx >= stop:
                    break
                chunks.append((cfg, list(range(next_idx, min(next_idx + batch, stop)))))
                next_idx += batch
            for (_, idxs), recs in zip(chunks, pool.map(_evaluate_batch, chunks)):
                yield from zip(idxs, recs)


def run_search(cfg: SearchConfig) -> SearchSummary:
    cfg.validate()
    records: list[TrialRecord] = []
    start = 0
    if cfg.out and cfg.resume and Path(cfg.out).exists():
        records = _load_existing(cfg)[: cfg.trials]
        start = records[-1].trial + 1 if records else 0
        log.info("resuming after %d records at attempt %d", len(records), start)
    elif cfg.out:
        Path(cfg.out).write_text("")
    attempted = start
    sink = open(cfg.out, "a", encoding="utf-8") if cfg.out else None
    try:
        if len(records) < cfg.trials:
            for i, rec in _stream(cfg, start, _thread_count(cfg)):
                attempted = i + 1
                if rec is None:
                    continue
                records.append(rec)
                if sink:
                    sink.write(rec.to_json() + "\n")
                    sink.flush()
                if len(records) >= cfg.trials:
                    break
            else:
                raise SearchError(
                    f"only {len(records)} of {cfg.trials} samples passed the filter "
                    f"(q={cfg.q}, k={cfg.k}, n={cfg.n}, d={cfg.d}, d*={cfg.dstar}) "
                    f"after {cfg.attempt_cap} attempts")
    finally:
        if sink:
            sink.close()
    groups = detect_counterexamples(records)
    confirmed = [g.as_dict() for g in groups if reverify(g, records)]
    return SearchSummary(cfg.public(), attempted, len(records),
                         len(group_records(records)), confirmed)
