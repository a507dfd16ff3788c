"""Binomial ideals of linear codes over F_q, their deglex Groebner bases, and complete decoding."""

from .code import LinearCode, new_code
from .crossing import Monomial, TermOrder, down, up
from .decode import decode, minimal_support_codewords, test_set_check
from .field import FieldSpec, build_field, default_field
from .gbasis import GroebnerBasis, compute_reduced_gb, is_groebner, reduce, verify_theorem1
from .ideal import Binomial, assemble_generators

__all__ = [
    "Binomial", "FieldSpec", "GroebnerBasis", "LinearCode", "Monomial", "TermOrder",
    "assemble_generators", "build_field", "compute_reduced_gb", "decode", "default_field",
    "down", "is_groebner", "minimal_support_codewords", "new_code", "reduce",
    "test_set_check", "up", "verify_theorem1",
]
