"""Exact Hecke-neighbor graphs for rank-n bundles over the projective line."""

from .chambers import CHAMBER_TABLES, expected_neighbors
from .field import FieldCtx, FieldElem, make_field
from .grassmann import (DeltaMatrix, enumerate_delta_matrices,
                        gaussian_binomial, schubert_indices)
from .hecke import (Edge, HeckeParams, InterpolationError, InvariantError,
                    NeighborFn, check_delta_constraint, delta_k,
                    format_poly, hecke_inverse, hecke_operator,
                    interpolate_multiplicities, neighbor_multiplicities,
                    neighbors, op_algebra, parse_shape, phi_n_inverse_neighbors,
                    poly_eval, shape_vertex, sheaf_degrees,
                    subset_twist_support)
from .laurent import LaurentMat, LaurentPoly, is_glr_unit, mat_adjugate, mat_det, mat_mul
from .reduction import (ReductionError, ReductionWitness, Vertex,
                        birkhoff_reduce, splitting_type_cohomology)

__version__ = "0.1.0"

__all__ = [
    "CHAMBER_TABLES", "DeltaMatrix", "Edge", "FieldCtx", "FieldElem",
    "HeckeParams", "InterpolationError", "InvariantError", "LaurentMat",
    "LaurentPoly", "NeighborFn", "ReductionError", "ReductionWitness",
    "Vertex", "birkhoff_reduce", "check_delta_constraint", "delta_k",
    "enumerate_delta_matrices", "expected_neighbors", "format_poly",
    "gaussian_binomial", "hecke_inverse", "hecke_operator",
    "interpolate_multiplicities", "is_glr_unit", "make_field",
    "mat_adjugate", "mat_det", "mat_mul", "neighbor_multiplicities",
    "neighbors", "op_algebra", "parse_shape", "phi_n_inverse_neighbors",
    "poly_eval", "schubert_indices", "shape_vertex", "sheaf_degrees",
    "splitting_type_cohomology", "subset_twist_support",
]
