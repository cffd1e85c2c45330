import dataclasses
import json

import pytest

from matpoly import search as S
from matpoly.matroid import Matrix, params
from matpoly.search import (SearchConfig, SearchError, TrialRecord, detect_counterexamples, group_records,
                            passes_filter, polynomial_fingerprints, reverify, run_search, sample_matrix,
                            trial_rng)


def test_golden_sample(data_dir):
    want = Matrix.load(data_dir / "golden_seed42_trial0.txt")
    assert sample_matrix(trial_rng(42, 0), 7, 5, 10) == want


def test_tiny_sample():
    m = sample_matrix(trial_rng(3, 0), 2, 1, 1)
    assert m.k == 1 and m.n == 1 and m.rows[0][0] in (0, 1)


def test_streams_differ():
    a = sample_matrix(trial_rng(42, 0), 7, 5, 10)
    b = sample_matrix(trial_rng(42, 1), 7, 5, 10)
    c = sample_matrix(trial_rng(43, 0), 7, 5, 10)
    assert len({a, b, c}) == 3


def test_config_validation():
    for bad in (dict(q=6), dict(k=0), dict(d=2), dict(d=7), dict(dstar=7), dict(trials=-1)):
        with pytest.raises(SearchError):
            SearchConfig(**bad).validate()


def test_trials_zero():
    s = run_search(SearchConfig(trials=0))
    assert (s.attempted, s.accepted, s.groups, s.counterexamples) == (0, 0, 0, [])


def test_small_u24_search(tmp_path):
    out = tmp_path / "u24.jsonl"
    s = run_search(SearchConfig(q=5, k=2, n=4, d=3, dstar=3, trials=10, seed=1, out=str(out)))
    assert s.accepted == 10 and s.groups == 1 and not s.found
    recs = [TrialRecord.from_json(ln) for ln in out.read_text().splitlines()]
    assert len(recs) == 10
    for r in recs:
        p = params(r.matroid())
        assert (p.n, p.k, p.d, p.dstar) == (4, 2, 3, 3)


def test_filter_rechecked_from_records(tmp_path):
    out = tmp_path / "r.jsonl"
    cfg = SearchConfig(q=7, k=3, n=7, d=3, dstar=3, trials=15, seed=5, out=str(out))
    run_search(cfg)
    for ln in out.read_text().splitlines():
        r = TrialRecord.from_json(ln)
        M = r.matroid()
        p = params(M)
        assert p.simple and p.cosimple and (p.k, p.d, p.dstar) == (3, 3, 3)
        assert passes_filter(M, 3, 3, 3)
        assert polynomial_fingerprints(M) == (r.fp_mu, r.fp_mu_star, r.fp_chi)


def test_deterministic_output(tmp_path):
    base = dict(q=7, k=3, n=7, d=3, dstar=3, trials=12, seed=11)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    sa = run_search(SearchConfig(**base, out=str(a)))
    sb = run_search(SearchConfig(**base, out=str(b)))
    assert a.read_bytes() == b.read_bytes()
    assert sa.to_json() == sb.to_json()
    assert "wall_time" not in a.read_text()


def test_record_timing_is_opt_in(tmp_path):
    out = tmp_path / "t.jsonl"
    run_search(SearchConfig(q=7, k=3, n=7, d=3, dstar=3, trials=2, seed=1, out=str(out), record_timing=True))
    assert all("wall_time" in json.loads(ln) for ln in out.read_text().splitlines())


def test_resume_matches_fresh_run(tmp_path):
    base = dict(q=7, k=3, n=7, d=3, dstar=3, seed=2)
    fresh, part = tmp_path / "fresh.jsonl", tmp_path / "part.jsonl"
    run_search(SearchConfig(**base, trials=10, out=str(fresh)))
    run_search(SearchConfig(**base, trials=4, out=str(part)))
    s = run_search(SearchConfig(**base, trials=10, out=str(part), resume=True))
    assert part.read_bytes() == fresh.read_bytes()
    assert s.accepted == 10
    with pytest.raises(SearchError, match="different config"):
        run_search(SearchConfig(**{**base, "seed": 3}, trials=10, out=str(part), resume=True))


def test_attempt_cap():
    # U(2,4) has no binary representation, so nothing ever passes
    with pytest.raises(SearchError, match="after 200 attempts"):
        run_search(SearchConfig(q=2, k=2, n=4, d=3, dstar=3, trials=3, max_attempts=200))


def test_threads_match_serial(tmp_path, monkeypatch):
    base = dict(q=7, k=3, n=7, d=3, dstar=3, trials=20, seed=4)
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run_search(SearchConfig(**base, out=str(a)))
    monkeypatch.setenv("MATPOLY_THREADS", "2")
    run_search(SearchConfig(**base, out=str(b)))
    assert a.read_bytes() == b.read_bytes()


def _records(n=4):
    cfg = SearchConfig(q=7, k=3, n=7, d=3, dstar=3, seed=9)
    recs, i = [], 0
    while len(recs) < n:
        r = S.evaluate_trial(cfg, i)
        if r:
            recs.append(r)
        i += 1
    return recs


def test_duplicate_records_single_class():
    r = _records(1)[0]
    twin = dataclasses.replace(r, trial=r.trial + 1000)
    cells = group_records([r, twin])
    assert len(cells) == 1 and len(next(iter(cells.values()))) == 1
    assert detect_counterexamples([r, twin]) == []


def test_tampered_record_flagged_and_rejected():
    recs = _records(2)
    a = recs[0]
    fake = dataclasses.replace(a, trial=999, fp_chi="0" * 64)
    groups = detect_counterexamples([a, fake])
    assert len(groups) == 1  # the detector sees two chi classes
    assert not reverify(groups[0], [a, fake])  # recomputation exposes the forgery


def test_mu_twins_never_grouped(twins):
    A, B = twins
    pa, pb = params(A), params(B)
    assert pa.d != pb.d and pa.dstar == pb.dstar
    fa, fb = polynomial_fingerprints(A), polynomial_fingerprints(B)
    assert fa[0] == fb[0]  # same mu_M
    assert fa[1] != fb[1]  # different mu_M*
    recs = [TrialRecord(i, 0, 7, [list(r) for r in M.matrix.rows], 9, 3, 0, 3, *fp)
            for i, (M, fp) in enumerate(((A, fa), (B, fb)))]
    assert len(group_records(recs)) == 2 and detect_counterexamples(recs) == []


def test_discovery_path(monkeypatch):
    """With a fingerprint that ignores chi's true value, groups must surface and survive reverify."""
    def fake(M):
        return ("mu", "mu*", "chi-" + str(sum(sum(r) for r in M.matrix.rows) % 2))
    monkeypatch.setattr(S, "polynomial_fingerprints", fake)
    s = run_search(SearchConfig(q=7, k=3, n=7, d=3, dstar=3, trials=8, seed=1))
    assert s.found and len(s.counterexamples) == 1
    assert sorted(len(c) for c in s.counterexamples[0]["chi_classes"]) != [8]
