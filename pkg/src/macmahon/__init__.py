"""Exact plane-partition statistics, boxed generating-function identities and shifted bijections."""

from .algebra import BinomialProduct, Poly, QTSeries, TruncatedSeries
from .components import a_poly, analyze, k_via_rhombi
from .genfun import f_factor, f_pi, local_factor, verify
from .partitions import FrobeniusCoords, Partition, PlanePartition, enumerate_pp, enumerate_spp

__all__ = [
    "BinomialProduct",
    "FrobeniusCoords",
    "Partition",
    "PlanePartition",
    "Poly",
    "QTSeries",
    "TruncatedSeries",
    "a_poly",
    "analyze",
    "enumerate_pp",
    "enumerate_spp",
    "f_factor",
    "f_pi",
    "k_via_rhombi",
    "local_factor",
    "verify",
]
