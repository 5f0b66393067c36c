"""Exact weight combinatorics for classical Lie superalgebras at infinity."""

from .errors import SuperweightError
from .weights import Parity, ShiftedWeight, Weight, parse_weight, rho, shift, unshift

__all__ = ["SuperweightError", "Parity", "ShiftedWeight", "Weight", "parse_weight", "rho", "shift", "unshift"]
__version__ = "0.1.0"
