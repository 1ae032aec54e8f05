"""Skew constacyclic codes over F_q[v]/(v^3 - v) and the quantum codes they give."""

from .field import GF, FieldElement, FieldError, conway_polynomial
from .skewpoly import SkewPoly, parse_poly, right_divmod, right_divides, skew_reciprocal
from .ring import RingElement, idempotents, parse_ring_element
from .code import LinearCode, RCode, from_skew_generator, dual, contains
from .gray import GrayMatrix, gray_code, gray_map, preset
from .distance import DistanceCertificate, min_distance, min_distance_columns, min_distance_exhaustive
from .quantum import QuantumCodeRecord, css_parameters, dual_containing, r_dual_containing, search

__all__ = [
    "GF", "FieldElement", "FieldError", "conway_polynomial",
    "SkewPoly", "parse_poly", "right_divmod", "right_divides", "skew_reciprocal",
    "RingElement", "idempotents", "parse_ring_element",
    "LinearCode", "RCode", "from_skew_generator", "dual", "contains",
    "GrayMatrix", "gray_code", "gray_map", "preset",
    "DistanceCertificate", "min_distance", "min_distance_columns", "min_distance_exhaustive",
    "QuantumCodeRecord", "css_parameters", "dual_containing", "r_dual_containing", "search",
]
__version__ = "0.1.0"
