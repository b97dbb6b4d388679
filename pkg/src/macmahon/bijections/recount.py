"""Three independent counts of strict plane partitions weighted by 2^k x^trace s^weight."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import Poly, TruncatedSeries
from ..genfun import lhs_shifted, rhs_shifted
from ..partitions import enumerate_spp
from .knuth import MarkedMatrix, knuth_backward
from .pi import pi_forward
from .tableaux import enumerate_markings


@dataclass(frozen=True)
class Recount:
    direct: TruncatedSeries
    via_markings: TruncatedSeries
    via_knuth: TruncatedSeries
    product: TruncatedSeries
    preimages_distinct: bool

    @property
    def ok(self) -> bool:
        return (self.preimages_distinct
                and self.direct == self.via_markings == self.via_knuth == self.product)


def _add(acc: list[Poly], degree: int, trace: int, count: int = 1) -> None:
    acc[degree] = acc[degree] + Poly.monomial(trace, count, "x")


def _matrix_degree(A: MarkedMatrix) -> tuple[int, int]:
    """(sum of |a_ij|, sum of (i + j - 1) |a_ij|)."""
    total = hook = 0
    for i in range(1, A.num_rows + 1):
        for j in range(1, A.num_cols + 1):
            total += A.magnitude(i, j)
            hook += (i + j - 1) * A.magnitude(i, j)
    return total, hook


def recount_shifted(r: int, c: int, N: int) -> Recount:
    """Count via connected components, via tableau markings, and via marked matrices.

    The last route marks each Pi-image pair in every admissible way, pulls it
    back to a marked matrix and weights the matrix by its own entries, so it
    also checks that no two marked pairs share a preimage.
    """
    zero = Poly((), "x")
    markings = [zero] * (N + 1)
    matrices = [zero] * (N + 1)
    seen: set[MarkedMatrix] = set()
    distinct = True
    for pp in enumerate_spp(r, c, N):
        S, T = pi_forward(pp)
        marked_S = list(enumerate_markings(S))
        marked_T = list(enumerate_markings(T, forbid_diagonal_marks=True))
        _add(markings, pp.weight, pp.trace, len(marked_S) * len(marked_T))
        for S_marked in marked_S:
            for T_marked in marked_T:
                A = knuth_backward(S_marked, T_marked, r, c)
                distinct = distinct and A not in seen
                seen.add(A)
                trace, degree = _matrix_degree(A)
                _add(matrices, degree, trace)
    return Recount(
        direct=lhs_shifted(r, c, N),
        via_markings=TruncatedSeries(tuple(markings)),
        via_knuth=TruncatedSeries(tuple(matrices)),
        product=rhs_shifted(r, c, N),
        preimages_distinct=distinct,
    )
