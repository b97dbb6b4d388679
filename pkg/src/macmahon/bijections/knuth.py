"""Shifted Knuth correspondence between marked matrices and pairs of marked shifted tableaux.

Encoding: read ``i`` from ``r`` down to 1 and ``j`` from ``c`` down to 1 and
emit ``|a_ij|`` copies of the pair ``i / j``, marking the first copy of ``j``
when ``a_ij`` is marked.  The bottom letters are inserted into ``S`` in that
order; ``T`` records ``i`` at each new cell.

Insertion of ``x`` (see docs/shifted_knuth.md):

* Row phase.  Rows are scanned from the top.  Unmarked ``x`` uses BUMP
  (leftmost entry ``< x``), marked ``x`` uses EQBUMP (leftmost entry ``<= x``).
  A bumped entry moves on to the next row; if no entry qualifies, ``x`` is
  appended to the row.
* When the bumped entry sat on the main diagonal of row ``k``, insertion
  switches to columns, starting at column ``k + 1`` and moving right.  If ``x``
  and the bumped diagonal entry are the same marked value, both become
  unmarked.
* Column phase, reading each column top-down.  Unmarked ``x`` uses EQBUMP and
  marked ``x`` uses BUMP.
* The new cell of ``T`` is marked exactly when insertion ended in the column
  phase.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .pi import InvalidPair
from .tableaux import MarkedShiftedTableau, MarkedValue

Entry = MarkedValue | int


@dataclass(frozen=True)
class MarkedMatrix:
    """An ``r x c`` grid whose entries are 0 or a :class:`MarkedValue`."""

    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(len(row) != len(rows[0]) for row in rows) or not rows[0]:
            raise ValueError("a marked matrix needs a nonempty rectangular grid")
        for i, row in enumerate(rows, start=1):
            for j, a in enumerate(row, start=1):
                if not (isinstance(a, MarkedValue) or (a == 0 and not isinstance(a, bool))):
                    raise ValueError(f"entry at {(i, j)} must be 0 or a marked value, got {a!r}")

    @classmethod
    def zero(cls, r: int, c: int) -> "MarkedMatrix":
        return cls(tuple((0,) * c for _ in range(r)))

    @classmethod
    def parse(cls, rows: Sequence[Sequence[object]]) -> "MarkedMatrix":
        """Rows of ``0``, ints or strings such as ``"2'"``."""
        return cls(tuple(tuple(0 if str(a) == "0" else a if isinstance(a, MarkedValue) else MarkedValue.parse(str(a))
                               for a in row) for row in rows))

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return len(self.rows[0])

    def magnitude(self, i: int, j: int) -> int:
        a = self.rows[i - 1][j - 1]
        return a.magnitude if a else 0

    def total(self) -> int:
        return sum(self.magnitude(i, j) for i in range(1, self.num_rows + 1) for j in range(1, self.num_cols + 1))

    def __str__(self):
        return "\n".join(" ".join(f"{str(a):>2}" for a in row) for row in self.rows)


@dataclass(frozen=True)
class TwoLineArray:
    top: tuple[int, ...]
    bottom: tuple[MarkedValue, ...]

    def __len__(self):
        return len(self.top)

    def __str__(self):
        return " ".join(f"{v:>2}" for v in self.top) + "\n" + " ".join(f"{str(v):>2}" for v in self.bottom)


def knuth_encode(A: MarkedMatrix) -> TwoLineArray:
    top, bottom = [], []
    for i in range(A.num_rows, 0, -1):
        for j in range(A.num_cols, 0, -1):
            a = A.rows[i - 1][j - 1]
            if not a:
                continue
            for copy in range(a.magnitude):
                top.append(i)
                bottom.append(MarkedValue(j, a.marked and copy == 0))
    return TwoLineArray(tuple(top), tuple(bottom))


def _leftmost(line: Sequence[MarkedValue], x: MarkedValue, inclusive: bool) -> int | None:
    for idx, y in enumerate(line):
        if y < x or (inclusive and y == x):
            return idx
    return None


def bump(row: Sequence[MarkedValue], x: MarkedValue) -> tuple[tuple[MarkedValue, ...], MarkedValue | None]:
    """Replace the leftmost entry ``< x`` with ``x``, or append ``x``; returns ``(row, bumped)``."""
    return _replace(row, x, inclusive=False)


def eqbump(row: Sequence[MarkedValue], x: MarkedValue) -> tuple[tuple[MarkedValue, ...], MarkedValue | None]:
    """Replace the leftmost entry ``<= x`` with ``x``, or append ``x``; returns ``(row, bumped)``."""
    return _replace(row, x, inclusive=True)


def _replace(row, x, inclusive):
    idx = _leftmost(row, x, inclusive)
    if idx is None:
        return tuple(row) + (x,), None
    out = list(row)
    bumped, out[idx] = out[idx], x
    return tuple(out), bumped


@dataclass(frozen=True)
class InsertionStep:
    """One bump: ``value`` entered at ``cell`` (1-based, shifted coordinates), pushing out ``bumped``."""

    mode: str
    cell: tuple[int, int]
    value: MarkedValue
    bumped: MarkedValue | None


@dataclass(frozen=True)
class Insertion:
    letter: tuple[int, MarkedValue]
    steps: tuple[InsertionStep, ...]
    new_cell: tuple[int, int]
    column_phase: bool


def _column(S: list[list[MarkedValue]], j: int) -> list[MarkedValue]:
    # 0-based column j meets row a at position j - a
    out = []
    for a, row in enumerate(S):
        if a > j or j - a >= len(row):
            break
        out.append(row[j - a])
    return out


def _insert(S: list[list[MarkedValue]], x: MarkedValue) -> tuple[tuple[int, int], bool, list[InsertionStep]]:
    """Insert ``x`` into ``S`` in place; returns the new 0-based cell, the phase flag and the steps."""
    steps = []
    k = 0
    while True:
        if k == len(S):
            S.append([x])
            steps.append(InsertionStep("row", (k + 1, k + 1), x, None))
            return (k, k), False, steps
        row = S[k]
        p = _leftmost(row, x, inclusive=x.marked)
        if p is None:
            row.append(x)
            steps.append(InsertionStep("row", (k + 1, k + len(row)), x, None))
            return (k, k + len(row) - 1), False, steps
        y, row[p] = row[p], x
        steps.append(InsertionStep("row", (k + 1, k + p + 1), x, y))
        if p == 0:
            if x == y and x.marked:
                row[0] = y = x.unmarked()
            x = y
            break
        x = y
        k += 1

    j = k + 1
    while True:
        col = _column(S, j)
        p = _leftmost(col, x, inclusive=not x.marked)
        if p is None:
            a = len(col)
            if a == len(S):
                S.append([])
            S[a].append(x)
            steps.append(InsertionStep("column", (a + 1, j + 1), x, None))
            return (a, j), True, steps
        y, S[p][j - p] = S[p][j - p], x
        steps.append(InsertionStep("column", (p + 1, j + 1), x, y))
        x = y
        j += 1


def knuth_insertions(A: MarkedMatrix) -> tuple[MarkedShiftedTableau, MarkedShiftedTableau, list[Insertion]]:
    S: list[list[MarkedValue]] = []
    T: list[list[MarkedValue]] = []
    log = []
    E = knuth_encode(A)
    for i, x in zip(E.top, E.bottom):
        (a, b), column_phase, steps = _insert(S, x)
        if a == len(T):
            T.append([])
        T[a].append(MarkedValue(i, column_phase))
        log.append(Insertion((i, x), tuple(steps), (a + 1, b + 1), column_phase))
    return MarkedShiftedTableau(tuple(map(tuple, S))), MarkedShiftedTableau(tuple(map(tuple, T))), log


def knuth_forward(A: MarkedMatrix) -> tuple[MarkedShiftedTableau, MarkedShiftedTableau]:
    S, T, _ = knuth_insertions(A)
    return S, T


def _pushes_out_in_row(z: MarkedValue, x: MarkedValue) -> bool:
    """Whether row insertion of ``x`` could have displaced ``z``."""
    return x < z if not z.marked else x <= z


def _pushes_out_in_column(z: MarkedValue, x: MarkedValue) -> bool:
    return x <= z if not z.marked else x < z


def _uninsert(S: list[list[MarkedValue]], a: int, column_phase: bool) -> MarkedValue:
    """Remove the last cell of 0-based row ``a`` and run insertion backwards."""
    row = S[a]
    b = a + len(row) - 1
    x = row.pop()
    if not row:
        S.pop()
    if column_phase:
        j = b
        while True:
            j -= 1
            if j < 0:
                raise InvalidPair("column reversal ran past the first column")
            hits = [p for p, z in enumerate(_column(S, j)) if _pushes_out_in_column(z, x)]
            if not hits:
                raise InvalidPair(f"no entry of column {j + 1} can be reverse-bumped")
            p = hits[-1]
            z = S[p][j - p]
            if p == j:
                # diagonal entry: switch back to rows
                if z == x and not z.marked:
                    x = z.with_mark(True)
                    S[p][0] = x
                else:
                    S[p][0], x = x, z
                a = p
                break
            S[p][j - p], x = x, z
    for k in range(a - 1, -1, -1):
        row = S[k]
        hits = [t for t, z in enumerate(row) if _pushes_out_in_row(z, x)]
        if not hits:
            raise InvalidPair(f"no entry of row {k + 1} can be reverse-bumped")
        t = hits[-1]
        row[t], x = x, row[t]
    return x


def knuth_backward(S: MarkedShiftedTableau, T: MarkedShiftedTableau,
                   rows: int | None = None, cols: int | None = None) -> MarkedMatrix:
    """Inverse of :func:`knuth_forward`; ``rows`` and ``cols`` default to the largest magnitudes."""
    if S.shape != T.shape:
        raise InvalidPair(f"shapes differ: {S.shape} and {T.shape}")
    if not T.diagonal_unmarked:
        raise InvalidPair("the recording tableau has a marked diagonal entry")
    r = rows if rows is not None else max((v.magnitude for row in T.rows for v in row), default=1)
    c = cols if cols is not None else max((v.magnitude for row in S.rows for v in row), default=1)
    S_rows = [list(row) for row in S.rows]
    T_rows = [list(row) for row in T.rows]
    letters = []
    while T_rows:
        cells = [(a, t, v) for a, row in enumerate(T_rows) for t, v in enumerate(row)]
        low = min(v.magnitude for _, _, v in cells)
        candidates = [cell for cell in cells if cell[2].magnitude == low]
        unmarked = [cell for cell in candidates if not cell[2].marked]
        # the latest cell recorded with the smallest letter
        if unmarked:
            a, t, v = max(unmarked, key=lambda cell: cell[0] + cell[1])
        else:
            a, t, v = max(candidates, key=lambda cell: cell[0])
        if t != len(T_rows[a]) - 1:
            raise InvalidPair("the recording tableau does not end its row at the latest cell")
        T_rows[a].pop()
        if not T_rows[a]:
            T_rows.pop()
        letters.append((low, _uninsert(S_rows, a, v.marked)))
    letters.reverse()

    grid: list[list[Entry]] = [[0] * c for _ in range(r)]
    previous = None
    for i, x in letters:
        j = x.magnitude
        if i > r or j > c:
            raise InvalidPair(f"letter {i}/{x} lies outside a {r}x{c} matrix")
        key = (-i, -j)
        if previous is not None and key < previous:
            raise InvalidPair("recovered letters are out of order")
        if x.marked and key == previous:
            raise InvalidPair("a marked letter is not the first copy of its pair")
        current = grid[i - 1][j - 1]
        grid[i - 1][j - 1] = MarkedValue(current.magnitude + 1, current.marked) if current else MarkedValue(1, x.marked)
        previous = key
    return MarkedMatrix(tuple(map(tuple, grid)))


def random_marked_matrix(r: int, c: int, max_magnitude: int, rng: random.Random) -> MarkedMatrix:
    choices = [0] + [MarkedValue(m, flag) for m in range(1, max_magnitude + 1) for flag in (False, True)]
    return MarkedMatrix(tuple(tuple(rng.choice(choices) for _ in range(c)) for _ in range(r)))


def all_marked_matrices(r: int, c: int, max_magnitude: int):
    choices = [0] + [MarkedValue(m, flag) for m in range(1, max_magnitude + 1) for flag in (False, True)]
    for flat in itertools.product(choices, repeat=r * c):
        yield MarkedMatrix(tuple(tuple(flat[i * c:(i + 1) * c]) for i in range(r)))

