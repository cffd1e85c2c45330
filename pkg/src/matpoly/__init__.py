"""Exact coboundary, Moebius, Tutte and zeta polynomials of matroids, and
reconstruction of the coboundary polynomial from the Moebius polynomials of
a matroid and its dual."""
from .duality import check_dual_identities, chi_dual, dual_identity_equations
from .exactpoly import PolyT, SPoly, interpolate, solve_exact
from .fields import FieldSpec
from .invariants import (CoboundaryPoly, MobiusPoly, bruteforce_weights, coboundary, mobius_poly,
                         tutte, uniform_coboundary)
from .lattice import GeometricLattice, build_lattice
from .matroid import (ExplicitMatroid, Matrix, Matroid, RepresentableMatroid, UniformMatroid,
                      load_matroid, make_matroid, matrix_rank, params)
from .reconstruct import dstar_from_mobius, reconstruct_linear, reconstruct_zeta, seed_partial
from .search import SearchConfig, detect_counterexamples, run_search, sample_matrix
from .zeta import ZetaPoly, chi_from_zeta, zeta_dual, zeta_from_chi

__version__ = "0.1.0"
