"""Partitions, plane partitions and their diagonal-sequence view.

A plane partition is stored as a grid of rows over its support Young
diagram.  The two-sided sequence of diagonal partitions is a derived view:
``diagonals(pp)[k]`` is the partition read along cells ``(i, j)`` with
``j - i == k``.  All coordinates exposed to users are 1-based, row first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

DEFAULT_MAX_ITEMS = 1_000_000
MAX_ITEMS_ENV = "MACMAHON_MAX_ITEMS"


class InvalidPartition(ValueError):
    pass


class InvalidPlanePartition(ValueError):
    """Raised with the first violated invariant and its 1-based cell."""

    def __init__(self, message: str, cell: tuple[int, int] | None = None):
        self.cell = cell
        if cell is not None:
            message = f"{message} at cell {cell}"
        super().__init__(message)


class EnumerationCapError(RuntimeError):
    pass


def max_items_cap() -> int:
    value = os.environ.get(MAX_ITEMS_ENV)
    if value is None:
        return DEFAULT_MAX_ITEMS
    cap = int(value)
    if cap <= 0:
        raise ValueError(f"{MAX_ITEMS_ENV} must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for idx, part in enumerate(parts):
            if not isinstance(part, int) or part < 1:
                raise InvalidPartition(f"part {idx + 1} is {part!r}, expected a positive integer")
            if idx and part > parts[idx - 1]:
                raise InvalidPartition(f"parts increase at position {idx + 1}")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "Partition":
        """Build a partition, dropping trailing zeros."""
        return cls(tuple(v for v in values if v != 0))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part access; missing parts read as 0."""
        if i < 1:
            raise IndexError(i)
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[i] >= other[i] for i in range(1, len(other) + 1))

    def distinct_parts(self) -> int:
        return len(set(self.parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """True iff ``inner`` is contained in ``outer`` and outer/inner has at most one box per column."""
    if not outer.contains(inner):
        return False
    # interlacing: outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    return all(inner[i] >= outer[i + 1] for i in range(1, len(outer) + 1))


@dataclass(frozen=True)
class FrobeniusCoords:
    """Frobenius coordinates with the +1 convention: p_i = l_i - i + 1, q_i = l'_i - i + 1."""

    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        if len(self.p) != len(self.q):
            raise InvalidPartition(f"Frobenius coordinates of unequal length {len(self.p)} and {len(self.q)}")
        for name, seq in (("p", self.p), ("q", self.q)):
            if any(v < 1 for v in seq):
                raise InvalidPartition(f"Frobenius {name} must be positive, got {seq}")
            if any(a <= b for a, b in zip(seq, seq[1:])):
                raise InvalidPartition(f"Frobenius {name} must be strictly decreasing, got {seq}")

    @property
    def d(self) -> int:
        return len(self.p)


def frobenius(lam: Partition) -> FrobeniusCoords:
    conj = lam.conjugate()
    d = sum(1 for i in range(1, len(lam) + 1) if lam[i] >= i)
    return FrobeniusCoords(
        tuple(lam[i] - i + 1 for i in range(1, d + 1)),
        tuple(conj[i] - i + 1 for i in range(1, d + 1)),
    )


def from_frobenius(fc: FrobeniusCoords) -> Partition:
    d = fc.d
    if d == 0:
        return Partition()
    # rows 1..d come from p; rows below the diagonal square come from q
    rows = [fc.p[i - 1] + i - 1 for i in range(1, d + 1)]
    below = [0] * fc.q[0]
    for i in range(1, d + 1):
        # column i has length q_i + i - 1; it covers rows d+1..q_i+i-1
        for row in range(d + 1, fc.q[i - 1] + i):
            below[row - 1] += 1
    rows.extend(v for v in below[d:] if v)
    return Partition(tuple(rows))


@dataclass(frozen=True)
class PlanePartition:
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        for i, row in enumerate(rows, start=1):
            if i > 1 and len(row) > len(rows[i - 2]):
                raise InvalidPlanePartition("support is not a Young diagram (row longer than the one above)", (i, len(rows[i - 2]) + 1))
            for j, v in enumerate(row, start=1):
                if not isinstance(v, int) or v < 1:
                    raise InvalidPlanePartition(f"entry {v!r} is not a positive integer", (i, j))
                if j > 1 and v > row[j - 2]:
                    raise InvalidPlanePartition("row increases", (i, j))
                if i > 1 and v > rows[i - 2][j - 1]:
                    raise InvalidPlanePartition("column increases", (i, j))

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "PlanePartition":
        return cls(tuple(tuple(r) for r in rows))

    def __call__(self, i: int, j: int) -> int:
        """Entry at 1-based cell (i, j); 0 outside the support."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return 0

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self.rows, start=1):
            for j in range(1, len(row) + 1):
                yield i, j

    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def weight(self) -> int:
        return sum(map(sum, self.rows))

    @property
    def trace(self) -> int:
        return sum(self(i, i) for i in range(1, len(self.rows) + 1))

    def transpose(self) -> "PlanePartition":
        return PlanePartition(tuple(
            tuple(self.rows[i][j] for i in range(len(self.rows)) if j < len(self.rows[i]))
            for j in range(self.num_cols)
        ))

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"


def weight(pp: PlanePartition) -> int:
    return pp.weight


def trace(pp: PlanePartition) -> int:
    return pp.trace


def diagonals(pp: PlanePartition) -> dict[int, Partition]:
    """Diagonal partitions lambda^k for k = -(rows-1) .. cols-1, keyed by k."""
    out = {}
    for k in range(-(pp.num_rows - 1), pp.num_cols):
        i, j = (1 - k, 1) if k < 0 else (1, 1 + k)
        parts = []
        while pp(i, j):
            parts.append(pp(i, j))
            i += 1
            j += 1
        out[k] = Partition(tuple(parts))
    return out


def assemble(seq: Mapping[int, Partition]) -> dict[tuple[int, int], int]:
    """Place a two-sided sequence of partitions on the grid (no validation)."""
    cells = {}
    for k, lam in seq.items():
        for t, v in enumerate(lam.parts, start=1):
            cells[(t - k, t) if k < 0 else (t, t + k)] = v
    return cells


def grid_is_plane_partition(cells: Mapping[tuple[int, int], int]) -> bool:
    """Check a sparse grid: Young-diagram support, entries weakly decreasing along rows and columns."""
    for (i, j), v in cells.items():
        if i < 1 or j < 1:
            return False
        if i > 1 and cells.get((i - 1, j), 0) < v:
            return False
        if j > 1 and cells.get((i, j - 1), 0) < v:
            return False
    return True


def satisfies_diagonal_condition(seq: Mapping[int, Partition]) -> bool:
    """Containment chain ... c l^-1 c l^0 > l^1 > ... with every
    consecutive skew a horizontal strip."""
    if not seq:
        return True
    lo, hi = min(seq), max(seq)
    lo, hi = min(lo, 0), max(hi, 0)
    empty = Partition()
    for n in range(lo, hi + 2):
        prev, cur = seq.get(n - 1, empty), seq.get(n, empty)
        if n <= 0:
            if not is_horizontal_strip(cur, prev):
                return False
        elif not is_horizontal_strip(prev, cur):
            return False
    return True


def from_diagonals(seq: Mapping[int, Partition]) -> PlanePartition:
    if not satisfies_diagonal_condition(seq):
        raise InvalidPlanePartition("diagonal sequence violates the containment/horizontal-strip condition")
    cells = assemble(seq)
    if not cells:
        return PlanePartition()
    nrows = max(i for i, _ in cells)
    rows = []
    for i in range(1, nrows + 1):
        rows.append(tuple(cells[(i, j)] for j in range(1, 1 + sum(1 for (a, _) in cells if a == i))))
    return PlanePartition(tuple(rows))


def is_strict(pp: PlanePartition) -> bool:
    return all(lam.is_strict() for lam in diagonals(pp).values())


def _decreasing_rows(n: int, bound: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Nonempty weakly decreasing rows of sum exactly n with row[k] <= bound[k]."""
    def rec(pos, left, cap):
        if left == 0:
            yield ()
            return
        if pos == len(bound):
            return
        for v in range(min(left, cap, bound[pos]), 0, -1):
            for rest in rec(pos + 1, left - v, v):
                yield (v,) + rest
    if n > 0:
        yield from rec(0, n, n)


def _plane_partitions_of(n: int, r: int, c: int) -> list[PlanePartition]:
    out = []

    def rec(left, bound, rows_left, acc):
        if left == 0:
            out.append(PlanePartition(tuple(acc)))
            return
        if rows_left == 0 or sum(bound) * rows_left < left:
            return
        for take in range(min(left, sum(bound)), 0, -1):
            for row in _decreasing_rows(take, bound):
                acc.append(row)
                rec(left - take, row, rows_left - 1, acc)
                acc.pop()

    rec(n, (n,) * c, r, [])
    out.sort(key=lambda pp: pp.rows, reverse=True)
    return out


def enumerate_pp(r: int, c: int, max_weight: int, *, cap: int | None = None) -> Iterator[PlanePartition]:
    """All plane partitions with at most r rows, c columns and weight <= max_weight.

    Order is by weight, then descending lexicographic order of the row tuples.
    """
    if r < 1 or c < 1 or max_weight < 0:
        raise ValueError(f"need r, c >= 1 and max_weight >= 0, got {(r, c, max_weight)}")
    cap = max_items_cap() if cap is None else cap
    count = 0
    for n in range(max_weight + 1):
        for pp in _plane_partitions_of(n, r, c):
            count += 1
            if count > cap:
                raise EnumerationCapError(f"more than {cap} plane partitions in a {r}x{c} box of weight <= {max_weight}")
            yield pp


def enumerate_spp(r: int, c: int, max_weight: int, *, cap: int | None = None) -> Iterator[PlanePartition]:
    for pp in enumerate_pp(r, c, max_weight, cap=cap):
        if is_strict(pp):
            yield pp
