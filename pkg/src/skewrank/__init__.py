"""Exact tools for skew-symmetric matrix spaces of constant rank."""

from .forms import Form, binary_gcd, parse_form, variables
from .skew import SkewPolyMatrix, pfaffian

__version__ = "0.1.0"

__all__ = [
    "Form",
    "SkewPolyMatrix",
    "binary_gcd",
    "parse_form",
    "pfaffian",
    "variables",
]
