"""umbral-tsh - exact umbral calculus for Lévy processes."""

from .checks import IdentityCheck, compare
from .exceptions import (
    ConstantTermError,
    DegenerateUmbraError,
    IndeterminateCollisionError,
    ParameterError,
    TruncationOrderError,
    UmbralError,
    UnknownNameError,
)
from .multivar import MultiUmbra, family_multi, q_poly_multi
from .tsh import classical, q_poly, umbral
from .umbral import Umbra, special

__version__ = "0.1.0"
__author__ = "Mathieu Crilout"
__email__ = "mathieu.crilout@gmail.com"

__all__ = [
    "Umbra",
    "MultiUmbra",
    "special",
    "q_poly",
    "q_poly_multi",
    "umbral",
    "classical",
    "family_multi",
    "IdentityCheck",
    "compare",
    "UmbralError",
    "TruncationOrderError",
    "ConstantTermError",
    "DegenerateUmbraError",
    "IndeterminateCollisionError",
    "ParameterError",
    "UnknownNameError",
]
