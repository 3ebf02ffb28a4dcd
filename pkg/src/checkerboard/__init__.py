"""Dirac propagator components from checkerboard path sums on a rational
spacetime lattice.

The package computes the four retarded-propagator components of the
1+1-dimensional Dirac equation three independent ways: exact path sums on
a quadratically spaced lattice (elementary symmetric polynomials, exact
integer coefficients), a uniform-lattice baseline, and the closed Bessel
forms they converge to. Exact-rational tooling for the underlying dense
rational spacetime and its boost subgroup rounds out the library, and a
finite-difference check confirms the closed forms solve the Dirac system.
"""

from .bessel import SeriesResult, bessel_j0, bessel_j1
from .dirac import (Region, ResidualReport, Spinor, assemble, dirac_residual,
                    independence_determinant, residual_rows)
from .errors import (CheckerboardError, DomainError, InvalidParameterError,
                     OutOfRangeError, ResourceLimitError,
                     UndefinedVelocityError)
from .kernels import BACKEND, j0_values, j1_values
from .linear import (LinearSpec, linear_component, linear_converge,
                     linear_matrix, linear_parts, split_counts)
from .paths import (DEFAULT_ENUMERATION_CAP, AmplitudePolynomial, BendRecord,
                    Direction, LatticePath, bend_records, count_paths,
                    enumerate_paths, path_amplitude, sector_sum_bruteforce,
                    total_path_count)
from .propagator import (COMPONENT_ORDER, ConvergenceRow, LatticeSpec,
                         PropagatorMatrix, SymmetricTable, closed_matrix,
                         convergence_sweep, elem_sym_table, exact_component,
                         exact_matrix, exact_parts, gamma_of, pq_identity_check,
                         psi_mp_term, series_psi_mp)
from .spacetime import (BoostMatrix, LightConePoint, MembershipWitness,
                        SpacetimePoint, apply_boost, boost, compose,
                        format_rational, from_lightcone, is_member, make_point,
                        matrix_product, parse_rational, rational_square_root,
                        spectrum_membership, to_lightcone, velocity,
                        velocity_spectrum)

__version__ = "0.1.0"

__all__ = [
    "AmplitudePolynomial", "BACKEND", "BendRecord", "BoostMatrix",
    "CheckerboardError", "COMPONENT_ORDER", "ConvergenceRow",
    "DEFAULT_ENUMERATION_CAP", "Direction", "DomainError",
    "InvalidParameterError", "LatticePath", "LatticeSpec", "LightConePoint",
    "LinearSpec", "MembershipWitness", "OutOfRangeError", "PropagatorMatrix",
    "Region", "ResidualReport", "ResourceLimitError", "SeriesResult",
    "SpacetimePoint", "Spinor", "SymmetricTable", "UndefinedVelocityError",
    "apply_boost", "assemble", "bend_records", "bessel_j0", "bessel_j1",
    "boost", "closed_matrix", "compose", "convergence_sweep", "count_paths",
    "dirac_residual", "elem_sym_table", "enumerate_paths", "exact_component",
    "exact_matrix", "exact_parts", "format_rational", "from_lightcone",
    "gamma_of", "independence_determinant", "is_member", "j0_values",
    "j1_values", "linear_component", "linear_converge", "linear_matrix",
    "linear_parts", "make_point", "matrix_product", "parse_rational",
    "path_amplitude", "pq_identity_check", "psi_mp_term",
    "rational_square_root", "residual_rows", "sector_sum_bruteforce",
    "series_psi_mp", "spectrum_membership", "split_counts", "to_lightcone",
    "total_path_count", "velocity", "velocity_spectrum",
]
