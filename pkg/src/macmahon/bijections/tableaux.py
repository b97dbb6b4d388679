"""Shifted tableaux, marked values and the markings of a tableau.

Row ``i`` (1-based) of a shifted tableau is indented by ``i - 1``, so its
stored entries sit at columns ``i, i+1, ...`` and its first entry lies on
the main diagonal.  Tableaux are nonincreasing along rows and columns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

from ..partitions import Partition

Cell = tuple[int, int]


class InvalidTableau(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class MarkedValue:
    """Element of 1 < 1' < 2 < 2' < ...; a marked value exceeds the unmarked one of equal magnitude."""

    magnitude: int
    marked: bool = False

    def __post_init__(self):
        if not isinstance(self.magnitude, int) or self.magnitude < 1:
            raise ValueError(f"magnitude must be a positive integer, got {self.magnitude!r}")

    def __lt__(self, other: "MarkedValue") -> bool:
        return (self.magnitude, self.marked) < (other.magnitude, other.marked)

    def unmarked(self) -> "MarkedValue":
        return MarkedValue(self.magnitude)

    def with_mark(self, marked: bool) -> "MarkedValue":
        return MarkedValue(self.magnitude, marked)

    @classmethod
    def parse(cls, text: str) -> "MarkedValue":
        text = text.strip()
        marked = text.endswith("'")
        return cls(int(text.rstrip("'")), marked)

    def __str__(self):
        return f"{self.magnitude}'" if self.marked else str(self.magnitude)

    def __repr__(self):
        return f"MarkedValue({self})"


def _check_shape(rows) -> None:
    for a, row in enumerate(rows):
        if not row:
            raise InvalidTableau(f"row {a + 1} is empty")
        if a and len(row) >= len(rows[a - 1]):
            raise InvalidTableau(f"row lengths must be strictly decreasing, row {a + 1} has {len(row)}")


def _cell_map(rows) -> dict[Cell, object]:
    return {(a, a + t): v for a, row in enumerate(rows, start=1) for t, v in enumerate(row, start=0)}


def _neighbour_pairs(cells) -> Iterator[tuple[Cell, Cell, str]]:
    """Pairs (cell, neighbour, direction) with the neighbour right of or below the cell."""
    for (a, b) in cells:
        if (a, b + 1) in cells:
            yield (a, b), (a, b + 1), "row"
        if (a + 1, b) in cells:
            yield (a, b), (a + 1, b), "column"


class _Shifted:
    rows: tuple[tuple, ...]

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    @property
    def length(self) -> int:
        return len(self.rows)

    @property
    def num_cells(self) -> int:
        return sum(len(row) for row in self.rows)

    def cells(self) -> Iterator[Cell]:
        for a, row in enumerate(self.rows, start=1):
            for b in range(a, a + len(row)):
                yield (a, b)

    def __call__(self, a: int, b: int):
        if 1 <= a <= len(self.rows) and 0 <= b - a < len(self.rows[a - 1]):
            return self.rows[a - 1][b - a]
        return None

    def diagonal(self, d: int) -> tuple:
        """Entries on cells ``(a, a + d - 1)``; ``d = 1`` is the main diagonal."""
        out = []
        for a, row in enumerate(self.rows, start=1):
            if d - 1 < len(row):
                out.append(row[d - 1])
        return tuple(out)

    def __str__(self):
        return "\n".join("   " * a + " ".join(f"{str(v):>2}" for v in row) for a, row in enumerate(self.rows))


@dataclass(frozen=True)
class ShiftedTableau(_Shifted):
    """Positive integers on a strict shifted shape; rows and columns weakly decreasing,
    diagonals strictly decreasing (no constant 2x2 square, including the corner at the diagonal)."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_shape(rows)
        cells = _cell_map(rows)
        for cell, v in cells.items():
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidTableau(f"entry {v!r} at {cell} is not a positive integer")
        for cell, nb, direction in _neighbour_pairs(cells):
            if cells[nb] > cells[cell]:
                raise InvalidTableau(f"{direction} increases from {cell} to {nb}")
        for (a, b), v in cells.items():
            if cells.get((a + 1, b + 1)) == v:
                raise InvalidTableau(f"constant 2x2 square at {(a, b)}")

    @classmethod
    def from_rows(cls, rows) -> "ShiftedTableau":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def weight(self) -> int:
        return sum(sum(row) for row in self.rows)

    @property
    def max(self) -> int:
        return max((row[0] for row in self.rows), default=0)

    def border_components(self) -> list[tuple[Cell, ...]]:
        """Maximal edge-connected sets of equal entries, ordered by their topmost-leftmost cell."""
        cells = _cell_map(self.rows)
        seen: set[Cell] = set()
        out = []
        for start in sorted(cells):
            if start in seen:
                continue
            seen.add(start)
            stack, group = [start], []
            while stack:
                a, b = stack.pop()
                group.append((a, b))
                for nb in ((a - 1, b), (a + 1, b), (a, b - 1), (a, b + 1)):
                    if nb in cells and nb not in seen and cells[nb] == cells[start]:
                        seen.add(nb)
                        stack.append(nb)
            out.append(tuple(sorted(group)))
        return out

    @property
    def k(self) -> int:
        return len(self.border_components())


@dataclass(frozen=True)
class MarkedShiftedTableau(_Shifted):
    """Marked values on a strict shifted shape, nonincreasing along rows and columns.

    Among equal neighbours an unmarked value may repeat only along a row and a
    marked value only along a column.
    """

    rows: tuple[tuple[MarkedValue, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _check_shape(rows)
        cells = _cell_map(rows)
        for cell, v in cells.items():
            if not isinstance(v, MarkedValue):
                raise InvalidTableau(f"entry {v!r} at {cell} is not a marked value")
        for cell, nb, direction in _neighbour_pairs(cells):
            v, w = cells[cell], cells[nb]
            if w > v:
                raise InvalidTableau(f"{direction} increases from {cell} to {nb}")
            if w == v and v.marked == (direction == "row"):
                kind = "marked" if v.marked else "unmarked"
                raise InvalidTableau(f"{kind} value {v} repeats along a {direction} at {cell}")

    @classmethod
    def from_rows(cls, rows) -> "MarkedShiftedTableau":
        return cls(tuple(tuple(v if isinstance(v, MarkedValue) else MarkedValue.parse(str(v)) for v in row)
                         for row in rows))

    def unmark(self) -> ShiftedTableau:
        return ShiftedTableau(tuple(tuple(v.magnitude for v in row) for row in self.rows))

    @property
    def weight(self) -> int:
        return sum(v.magnitude for row in self.rows for v in row)

    @property
    def diagonal_unmarked(self) -> bool:
        return not any(row[0].marked for row in self.rows)

    def count(self, magnitude: int) -> int:
        return sum(1 for row in self.rows for v in row if v.magnitude == magnitude)


def enumerate_markings(S: ShiftedTableau, forbid_diagonal_marks: bool = False) -> Iterator[MarkedShiftedTableau]:
    """All marked tableaux that unmark to ``S``.

    Within a border component a cell with an equal neighbour below must be
    marked and one with an equal neighbour to its left must stay unmarked;
    only the component's bottom-left cell is free.  A free cell on the main
    diagonal is held unmarked when ``forbid_diagonal_marks`` is set.
    """
    forced: dict[Cell, bool] = {}
    free: list[Cell] = []
    for group in S.border_components():
        members = set(group)
        for a, b in group:
            if (a + 1, b) in members:
                forced[(a, b)] = True
            elif (a, b - 1) in members:
                forced[(a, b)] = False
            elif forbid_diagonal_marks and a == b:
                forced[(a, b)] = False
            else:
                free.append((a, b))
    for choice in itertools.product((False, True), repeat=len(free)):
        marks = {**forced, **dict(zip(free, choice))}
        yield MarkedShiftedTableau(tuple(
            tuple(MarkedValue(v, marks[(a, a + t)]) for t, v in enumerate(row))
            for a, row in enumerate(S.rows, start=1)
        ))
