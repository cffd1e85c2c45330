import pytest

from matpoly.exactpoly import ONE, PolyT, SPoly
from matpoly.invariants import MobiusPoly, coboundary, mobius_poly
from matpoly.matroid import RepresentableMatroid, UniformMatroid, params
from matpoly.reconstruct import (ReconstructionError, bound_holds, dstar_from_mobius, reconstruct,
                                 reconstruct_linear, reconstruct_zeta, seed_partial)
from matpoly.search import passes_filter, sample_matrix, trial_rng


def _pair(M):
    return mobius_poly(M), mobius_poly(M.dual())


@pytest.fixture(scope="module")
def search_sample():
    """First q=7, k=5, n=10, d=d*=3 sample from the seed-0 stream."""
    for i in range(1000):
        M = RepresentableMatroid(sample_matrix(trial_rng(0, i), 7, 5, 10))
        if passes_filter(M, 5, 3, 3):
            return M
    raise AssertionError("no sample passed the filter")


@pytest.mark.parametrize("M,want", [(UniformMatroid(2, 4), 3), (UniformMatroid(3, 6), 4)])
def test_dstar_from_mobius_uniform(M, want):
    assert dstar_from_mobius(mobius_poly(M), M.n) == want


def test_dstar_from_mobius_fano(fano):
    assert dstar_from_mobius(mobius_poly(fano), 7) == 3


def test_dstar_rejects_excess_flats():
    mu = MobiusPoly(4, 2, SPoly((PolyT([3, -4, 1]), PolyT([-5, 5]), ONE)))
    with pytest.raises(ReconstructionError, match="exceed"):
        dstar_from_mobius(mu)


def test_seeding_examples(u24, fano):
    pm, ps = seed_partial(*_pair(u24))
    assert pm.unknown == [] and ps.unknown == []
    pm, ps = seed_partial(*_pair(fano))
    assert pm.unknown == [2, 3] and ps.unknown == [3, 4]
    assert pm.known[7] == 1 and ps.known[7] == 1
    chi = coboundary(fano)
    assert all(chi[i] == v for i, v in pm.known.items())


def test_fano_linear(fano):
    rep = reconstruct_linear(*_pair(fano))
    assert rep.outcome == "unique"
    assert (rep.n_equations, rep.n_unknowns, rep.rank) == (8, 4, 4)
    assert rep.chi == coboundary(fano)
    assert rep.chi_star == coboundary(fano.dual())
    assert rep.advisory is None


def test_fano_zeta(fano):
    rep = reconstruct_zeta(*_pair(fano))
    assert rep.outcome == "unique"
    assert (rep.n_equations, rep.n_unknowns) == (7, 3)
    assert rep.chi == coboundary(fano) == reconstruct(*_pair(fano), method="linear").chi


@pytest.mark.parametrize("k,n", [(2, 4), (3, 7), (4, 9), (5, 10)])
def test_uniform_pairs(k, n):
    M = UniformMatroid(k, n)
    lin = reconstruct_linear(*_pair(M))
    assert lin.outcome == "unique" and lin.n_unknowns == 0 and lin.chi == coboundary(M)
    zet = reconstruct_zeta(*_pair(M))
    assert zet.outcome == "unique" and zet.zeta.is_one()


def test_bound_violating_search_sample(search_sample):
    p = params(search_sample)
    assert (p.n, p.d, p.dstar) == (10, 3, 3) and not bound_holds(10, 3, 3)
    lin = reconstruct_linear(*_pair(search_sample))
    assert lin.outcome == "underdetermined"
    assert (lin.n_equations, lin.n_unknowns, lin.rank, lin.kernel_dim) == (11, 12, 11, 1)
    assert lin.advisory.startswith("infeasible-bound")
    zet = reconstruct_zeta(*_pair(search_sample))
    assert zet.outcome == "underdetermined"
    assert (zet.n_equations, zet.n_unknowns, zet.rank) == (6, 7, 6)
    assert zet.n_equations < zet.n_unknowns


def test_inconsistent_inputs(fano):
    mu, mus = _pair(fano)
    # perturb the T^0 coefficient of mu_0: changes a seeded value only
    bad = MobiusPoly(7, 3, SPoly((mu[0] + 1,) + tuple(mu.mu)[1:]))
    with pytest.raises(ReconstructionError):
        reconstruct_linear(bad, mus)
    with pytest.raises(ReconstructionError):
        reconstruct_zeta(bad, mus)


def test_mismatched_sizes(fano, u24):
    with pytest.raises(ReconstructionError):
        reconstruct_linear(mobius_poly(fano), mobius_poly(u24))
    with pytest.raises(ValueError):
        reconstruct(*_pair(fano), method="magic")


def test_corpus_reconstruction(corpus):
    for e in corpus:
        M = e.matroid
        p = params(M)
        n, d, ds = p.n, int(p.d), int(p.dstar)
        lin, zet = reconstruct_linear(*_pair(M)), reconstruct_zeta(*_pair(M))
        assert (lin.n_unknowns, lin.n_equations) == (2 * (n - d - ds + 2), n + 1)
        assert (zet.n_unknowns, zet.n_equations) == (n - d - ds + 3, d + ds)
        assert (lin.outcome == "unique") == (zet.outcome == "unique"), e.name
        if bound_holds(n, d, ds):
            assert lin.outcome == "unique" and lin.chi == coboundary(M), e.name
        if zet.outcome == "unique":
            assert zet.chi == lin.chi, e.name
