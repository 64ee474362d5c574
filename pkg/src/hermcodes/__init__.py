"""Dual Hermitian codes and the geometry of their small-weight supports."""

from .code import CodeSpec, hermitian_code, parity_check_matrix
from .field import FieldElement, FieldSpec, gf, hermitian_field

__all__ = [
    "CodeSpec",
    "FieldElement",
    "FieldSpec",
    "gf",
    "hermitian_code",
    "hermitian_field",
    "parity_check_matrix",
]
