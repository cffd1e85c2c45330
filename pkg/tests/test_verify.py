from matpoly.matroid import ExplicitMatroid, RepresentableMatroid, UniformMatroid
from matpoly.search import passes_filter, sample_matrix, trial_rng
from matpoly.verify import Check, run_checks


def test_fano_all_pass(fano):
    checks = run_checks(fano)
    assert all(c.ok for c in checks), [c.line() for c in checks if not c.ok]
    names = {c.name for c in checks}
    assert {"reconstruction (linear)", "reconstruction (zeta)", "codeword oracle over F_4"} <= names


def test_twins_pass(twins):
    for M in twins:
        assert all(c.ok for c in run_checks(M, oracle_extensions=(1,)))


def test_bound_violation_skips_reconstruction():
    i = 0
    while not passes_filter(M := RepresentableMatroid(sample_matrix(trial_rng(0, i), 7, 5, 10)), 5, 3, 3):
        i += 1
    checks = run_checks(M, oracle_extensions=(1,))
    assert all(c.ok for c in checks)
    skip = [c for c in checks if c.name == "reconstruction"]
    assert skip and skip[0].detail == "skipped: 2(d+d*)=12 < n+3=13"


def test_non_simple_stops_early():
    checks = run_checks(UniformMatroid(1, 3))
    assert checks[-1] == Check("M simple", False, "elements 0 and 1 are parallel")


def test_broken_axioms_stop_first():
    checks = run_checks(ExplicitMatroid(2, [0, 0, 0, 1]))
    assert len(checks) == 1 and not checks[0].ok and "submodularity" in checks[0].detail
    assert checks[0].line().startswith("FAIL rank axioms: submodularity")
