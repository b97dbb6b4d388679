"""Tableau correspondences for strict plane partitions and marked matrices."""

from .knuth import MarkedMatrix, bump, eqbump, knuth_backward, knuth_encode, knuth_forward
from .pi import InvalidPair, pi_backward, pi_forward, pi_statistics
from .tableaux import InvalidTableau, MarkedShiftedTableau, MarkedValue, ShiftedTableau, enumerate_markings

__all__ = [
    "InvalidPair",
    "InvalidTableau",
    "MarkedMatrix",
    "MarkedShiftedTableau",
    "MarkedValue",
    "ShiftedTableau",
    "bump",
    "enumerate_markings",
    "eqbump",
    "knuth_backward",
    "knuth_encode",
    "knuth_forward",
    "pi_backward",
    "pi_forward",
    "pi_statistics",
]
