"""Strict plane partitions and pairs of unmarked shifted tableaux.

Slice the plane partition at each height ``d``: ``mu_d`` is the set of cells
with entry ``>= d``.  The ``d``-th diagonal of ``S`` lists the Frobenius
``p`` coordinates of ``mu_d`` and that of ``T`` the ``q`` coordinates.  Both
tableaux have the main diagonal of the plane partition as their shape.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..partitions import (
    FrobeniusCoords,
    InvalidPartition,
    Partition,
    PlanePartition,
    frobenius,
    from_frobenius,
    is_strict,
)
from .tableaux import InvalidTableau, ShiftedTableau


class InvalidPair(ValueError):
    pass


def slices(pp: PlanePartition) -> list[Partition]:
    top = max((row[0] for row in pp.rows), default=0)
    return [Partition(tuple(n for n in (sum(1 for v in row if v >= d) for row in pp.rows) if n))
            for d in range(1, top + 1)]


def _tableau_from_diagonals(diags: list[tuple[int, ...]]) -> ShiftedTableau:
    length = max((len(dg) for dg in diags), default=0)
    rows = [tuple(dg[a] for dg in diags if len(dg) > a) for a in range(length)]
    return ShiftedTableau(tuple(rows))


def pi_forward(pp: PlanePartition) -> tuple[ShiftedTableau, ShiftedTableau]:
    if not is_strict(pp):
        raise ValueError("the plane partition is not strict")
    coords = [frobenius(mu) for mu in slices(pp)]
    return _tableau_from_diagonals([c.p for c in coords]), _tableau_from_diagonals([c.q for c in coords])


def pi_backward(S: ShiftedTableau, T: ShiftedTableau) -> PlanePartition:
    if S.shape != T.shape:
        raise InvalidPair(f"shapes differ: {S.shape} and {T.shape}")
    height = len(S.rows[0]) if S.rows else 0
    mus = []
    for d in range(1, height + 1):
        try:
            mus.append(from_frobenius(FrobeniusCoords(S.diagonal(d), T.diagonal(d))))
        except InvalidPartition as exc:
            raise InvalidPair(f"diagonal {d}: {exc}") from None
    for d in range(1, len(mus)):
        if not mus[d - 1].contains(mus[d]):
            raise InvalidPair(f"slice {d + 1} is not contained in slice {d}")
    rows = []
    for i in range(1, len(mus[0]) + 1 if mus else 1):
        rows.append(tuple(sum(1 for mu in mus if mu[i] >= j) for j in range(1, mus[0][i] + 1)))
    # nested slices need not give strict diagonals; the round trip settles it
    try:
        pp = PlanePartition(tuple(rows))
        image = pi_forward(pp)
    except ValueError as exc:
        raise InvalidPair(str(exc)) from None
    if image != (S, T):
        raise InvalidPair("the slices do not come from a strict plane partition")
    return pp


@dataclass(frozen=True)
class PiStatistics:
    weight: int
    trace: int
    k: int
    size_s: int
    size_t: int
    size_shape: int
    k_s: int
    k_t: int
    length: int


def pi_statistics(S: ShiftedTableau, T: ShiftedTableau) -> PiStatistics:
    """Statistics of the plane partition read off the tableau pair."""
    size_shape = S.shape.weight
    return PiStatistics(
        weight=S.weight + T.weight - size_shape,
        trace=size_shape,
        k=S.k + T.k - S.length,
        size_s=S.weight,
        size_t=T.weight,
        size_shape=size_shape,
        k_s=S.k,
        k_t=T.k,
        length=S.length,
    )
