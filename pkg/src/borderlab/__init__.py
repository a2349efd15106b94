"""Distinguished ideals in border basis schemes: tangent spaces, elementary
component certificates, efficiency tests and a plausibility scanner."""

from .deformations import (
    DeltaFamily,
    GenericityReport,
    delta_double_prime_sets,
    delta_prime_sets,
    genericity_verdict,
    independence_check,
    s_tangent_vectors,
    z_tangent_vectors,
)
from .efficiency import exact_efficiency, lex_groebner_basis, theta_efficiency
from .ideals import (
    BorderPrebasis,
    DistinguishedIdeal,
    build_distinguished_ideal,
    ideal_from_generators,
    partial_derivative,
)
from .linalg import SparseMatrix, kernel_basis_rational, rank_exact, rank_mod_p
from .order_ideals import OrderIdeal, ShapeParams, lex_segment_complement, order_ideal_from_shape
from .plausibility import genericity_is_plausible, plausible_scan, shape_counts
from .polynomials import Polynomial, parse_polynomial
from .syzygies import build_sigma, linear_syzygy_basis, predicted_syzygy_count
from .tangent import tangent_relations, tangent_space_dimension

__version__ = "0.1.0"

__all__ = [
    "BorderPrebasis",
    "DeltaFamily",
    "DistinguishedIdeal",
    "GenericityReport",
    "OrderIdeal",
    "Polynomial",
    "ShapeParams",
    "SparseMatrix",
    "build_distinguished_ideal",
    "build_sigma",
    "delta_double_prime_sets",
    "delta_prime_sets",
    "exact_efficiency",
    "genericity_is_plausible",
    "genericity_verdict",
    "ideal_from_generators",
    "independence_check",
    "kernel_basis_rational",
    "lex_groebner_basis",
    "lex_segment_complement",
    "linear_syzygy_basis",
    "order_ideal_from_shape",
    "parse_polynomial",
    "partial_derivative",
    "plausible_scan",
    "predicted_syzygy_count",
    "rank_exact",
    "rank_mod_p",
    "s_tangent_vectors",
    "shape_counts",
    "tangent_relations",
    "tangent_space_dimension",
    "theta_efficiency",
    "z_tangent_vectors",
]
