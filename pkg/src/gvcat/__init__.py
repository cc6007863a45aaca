"""Finite Grothendieck-Verdier categories: exhaustive checks and constructions."""

from .core import (
    FinCategory, Functor, MorId, NatFamily, StructureError, TheoremViolation, ValidationReport,
    validate_category,
)
from .monoidal import BraidingData, MonoidalData, validate_braiding, validate_monoidal
from .duality import GVData, dualizing_from_K, find_dualizing, yoneda_solve
from .fileformat import CategoryFile, ParseError, parse, serialize

__version__ = "0.1.0"

__all__ = [
    "FinCategory", "Functor", "MorId", "NatFamily", "StructureError", "TheoremViolation",
    "ValidationReport", "validate_category", "BraidingData", "MonoidalData", "validate_braiding",
    "validate_monoidal", "GVData", "dualizing_from_K", "find_dualizing", "yoneda_solve",
    "CategoryFile", "ParseError", "parse", "serialize",
]
