from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from matpoly.duality import DualIdentity, DualityError, check_dual_identities, chi_dual, dual_identity_equations
from matpoly.exactpoly import PolyT, SPoly
from matpoly.invariants import CoboundaryPoly, coboundary, uniform_coboundary
from matpoly.matroid import UniformMatroid, params

from oracles import sympy_chi_dual

P = PolyT
# Frozen from symbolic substitution S -> (S+T-1)/(S-1) of the Fano coboundary polynomial.
FANO_DUAL_CHI = [P([13, -28, 21, -7, 1]), P([-42, 77, -42, 7]), P([42, -63, 21]), P([-7, 7]), P([-7, 7]),
                 P(), P(), P([1])]


def test_u24_self_dual(u24):
    chi = coboundary(u24)
    assert chi_dual(chi) == chi


def test_fano_dual(fano):
    chi = coboundary(fano)
    cs = chi_dual(chi)
    assert list(cs.chi) == FANO_DUAL_CHI and cs.k == 4
    assert cs == coboundary(fano.dual())
    assert chi_dual(cs) == chi


def test_frozen_dual_matches_sympy(fano):
    assert sympy_chi_dual(list(coboundary(fano).chi), 7, 3) == FANO_DUAL_CHI


def test_identities_examples(u24, fano):
    c = coboundary(u24)
    assert check_dual_identities(c, c).ok
    f = coboundary(fano)
    rep = check_dual_identities(f, chi_dual(f))
    assert rep.ok and rep.checked == 8


def test_identities_detect_mismatch(fano):
    # a wrong partner with the right (n, n-k): the uniform closed form U(4,7)
    rep = check_dual_identities(coboundary(fano), coboundary(UniformMatroid(4, 7)))
    assert not rep.ok and rep.first_failure == 3
    assert "v=3" in rep.line()


def test_identity_weights():
    eqs = dual_identity_equations(4, 2)
    assert len(eqs) == 5
    assert eqs[1].left == {1: 1, 2: 2, 3: 3, 4: 4}
    assert eqs[1].right == {3: 1, 4: 4}
    assert [e.t_power for e in eqs] == [-2, -1, 0, 1, 2]


def test_unweighted_right_side_fails(fano):
    """The right-hand sum needs C(i, n-v) weights; plain sums break for 0 < v < n."""
    chi = coboundary(fano)
    cs = chi_dual(chi)
    for v in range(8):
        plain = DualIdentity(v, v - 3, {i: comb(i, v) for i in range(v, 8)}, {i: 1 for i in range(7 - v, 8)})
        assert plain.residual(chi.chi, cs.chi).is_zero() == (v in (0, 7))


def test_negative_powers_raise():
    bogus = CoboundaryPoly(2, 2, SPoly((P([0, 1]), P(), P([1]))))
    with pytest.raises(DualityError):
        chi_dual(bogus)


def test_corpus_duality(corpus):
    for e in corpus:
        chi = coboundary(e.matroid)
        cs = coboundary(e.matroid.dual())
        assert chi_dual(chi) == cs, e.name
        assert chi_dual(cs) == chi, e.name
        assert check_dual_identities(chi, cs).ok, e.name


def test_sympy_oracle_on_sample(corpus):
    for e in corpus[-3:]:
        chi = coboundary(e.matroid)
        assert sympy_chi_dual(list(chi.chi), chi.n, chi.k) == list(chi_dual(chi).chi), e.name


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 12), st.data())
def test_uniform_duality(n, data):
    k = data.draw(st.integers(1, n - 1))
    chi = uniform_coboundary(n, n - k + 1)
    cs = chi_dual(chi)
    assert cs == uniform_coboundary(n, k + 1)
    assert check_dual_identities(chi, cs).ok
    if 2 <= k <= n - 2:
        assert params(UniformMatroid(k, n)).d == n - k + 1
