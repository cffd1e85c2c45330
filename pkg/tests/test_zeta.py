from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from matpoly.duality import chi_dual
from matpoly.exactpoly import PolyT, SPoly
from matpoly.invariants import coboundary, uniform_coboundary
from matpoly.matroid import UniformMatroid, params
from matpoly.zeta import ZetaError, ZetaPoly, basis_coeff, chi_from_zeta, dual_exponent, zeta_dual, zeta_from_chi

from oracles import sympy_zeta

F = Fraction
# Frozen from a sympy solve of the basis system over Q(T), basis taken from uniform lattices.
FANO_P = [PolyT([F(1, 5)]), PolyT([F(4, 5), F(-1, 5)]), PolyT([0, F(1, 5)])]


def test_fano_zeta(fano):
    Z = zeta_from_chi(coboundary(fano), 4, 3)
    assert Z.r == 2 and Z.q_degree == 2
    assert list(Z.P) == FANO_P
    assert chi_from_zeta(Z) == coboundary(fano)
    assert Z.to_json()["P"][1] == ["4/5", "-1/5"]


def test_frozen_matches_sympy(fano):
    got = sympy_zeta(coboundary(fano).chi, 7, 4, 3)
    assert [str(g) for g in got] == ["1/5", "-(T - 4)/5", "T/5"]


def test_fano_dual_paths(fano):
    Z = zeta_from_chi(coboundary(fano), 4, 3)
    direct = zeta_from_chi(chi_dual(coboundary(fano)), 3, 4)
    assert zeta_dual(Z) == direct
    assert zeta_dual(zeta_dual(Z)) == Z
    assert not zeta_dual(Z).laurent


@pytest.mark.parametrize("k,n", [(k, n) for n in range(4, 11) for k in range(2, n - 1)])
def test_uniform_zeta_is_one(k, n):
    Z = zeta_from_chi(coboundary(UniformMatroid(k, n)), n - k + 1, k + 1)
    assert Z.is_one() and Z.r == 0


def test_chi_from_zeta_examples(u24):
    one = ZetaPoly(4, 2, 3, 3, SPoly((PolyT([1]),)))
    assert chi_from_zeta(one) == coboundary(u24)
    zero = ZetaPoly(7, 3, 4, 3, SPoly((PolyT(), PolyT(), PolyT())))
    assert all(c.is_zero() for c in chi_from_zeta(zero).chi)


def test_basis_coeff_range():
    assert basis_coeff(5, 6, 0) == 0 and basis_coeff(5, 6, 5) == 1
    with pytest.raises(ZetaError):
        basis_coeff(5, 7, 0)


def test_inconsistent_chi_rejected(fano):
    chi = coboundary(fano)
    bad = type(chi)(7, 3, SPoly(tuple(c + (1 if j == 1 else 0) for j, c in enumerate(chi.chi))))
    with pytest.raises(ZetaError):
        zeta_from_chi(bad, 4, 3)
    with pytest.raises(ZetaError):
        zeta_from_chi(chi, 6, 5)


def test_dual_exponent():
    assert [dual_exponent(i, 3, 3) for i in range(3)] == [-1, 0, 1]


def test_corpus_zeta_laws(corpus):
    for e in corpus:
        p = params(e.matroid)
        n, d, ds = p.n, int(p.d), int(p.dstar)
        chi = coboundary(e.matroid)
        Z = zeta_from_chi(chi, d, ds)
        assert Z.q_degree == n - d - ds + 2, e.name
        assert chi_from_zeta(Z) == chi, e.name
        assert zeta_dual(Z) == zeta_from_chi(chi_dual(chi), ds, d), e.name
        assert zeta_dual(zeta_dual(Z)) == Z, e.name


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 14), st.data())
def test_mds_closed_form_gives_one(n, data):
    d = data.draw(st.integers(2, n))
    k = n - d + 1
    Z = zeta_from_chi(uniform_coboundary(n, d), d, k + 1)
    assert Z.is_one()
