"""Exact oscillator representations of sl(n), o(2n), o(2n+1) and sp(2n) on polynomial spaces."""

from .errors import (DegreeEscape, InputNotHarmonic, InvalidParams, NonTerminating, NotAWeightVector,
                     NotInAlgebra, OscrepError, ParseError, PatternMismatch, RegimeViolation,
                     SideConditionViolation, SingularConstant, UniverseMismatch)
from .reps import Family, Matrix, RepParams, rho, spanning_set
from .linalg import SliceKey, SubspaceBasis, bilinear_form, kernel_on_slice, slice_enumerate
from .weyl import Polynomial, Ring, WeylOperator, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "DegreeEscape", "Family", "InputNotHarmonic", "InvalidParams", "Matrix", "NonTerminating",
    "NotAWeightVector", "NotInAlgebra", "OscrepError", "ParseError", "PatternMismatch", "Polynomial",
    "RegimeViolation", "RepParams", "Ring", "SideConditionViolation", "SingularConstant", "SliceKey",
    "SubspaceBasis", "UniverseMismatch", "WeylOperator", "bilinear_form", "kernel_on_slice", "parse_polynomial",
    "rho", "slice_enumerate", "spanning_set",
]
