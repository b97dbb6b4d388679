"""Connected components, levels and border components of a plane partition.

Cells are edge-adjacent (4-adjacency).  The level of a cell ``(i, j)`` in
component ``C`` is the least ``h >= 1`` with ``(i+h, j+h)`` outside ``C``; a
border component is a maximal edge-connected set of equal-level cells inside
one component.  The Hall-Littlewood weight is

    A(t) = prod over border components B of (1 - t^level(B)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import Poly
from .partitions import PlanePartition, is_strict

Cell = tuple[int, int]


@dataclass(frozen=True)
class BorderComponent:
    component: int
    level: int
    cells: tuple[Cell, ...]


@dataclass(frozen=True)
class Component:
    id: int
    value: int
    cells: tuple[Cell, ...]


@dataclass(frozen=True)
class ComponentAnalysis:
    component_id: dict[Cell, int]
    components: tuple[Component, ...]
    levels: dict[Cell, int]
    border_components: tuple[BorderComponent, ...]

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def n_profile(self) -> dict[int, tuple[int, ...]]:
        """Per component id, ``(n_1, n_2, ...)`` counting its border components by level."""
        out = {}
        for comp in self.components:
            counts = Counter(b.level for b in self.border_components if b.component == comp.id)
            top = max(counts)
            out[comp.id] = tuple(counts.get(h, 0) for h in range(1, top + 1))
        return out

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "components": [
                {
                    "value": comp.value,
                    "cells": [list(c) for c in comp.cells],
                    "border_components": [
                        {"level": b.level, "cells": [list(c) for c in b.cells]}
                        for b in self.border_components
                        if b.component == comp.id
                    ],
                }
                for comp in self.components
            ],
        }


def _flood(cells: set[Cell], key) -> list[tuple[Cell, ...]]:
    """Edge-connected classes of ``cells`` under equal ``key``, each sorted, ordered by first cell."""
    seen: set[Cell] = set()
    groups = []
    for start in sorted(cells):
        if start in seen:
            continue
        seen.add(start)
        stack, group = [start], []
        while stack:
            i, j = stack.pop()
            group.append((i, j))
            for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
                if nb in cells and nb not in seen and key(nb) == key(start):
                    seen.add(nb)
                    stack.append(nb)
        groups.append(tuple(sorted(group)))
    return groups


def analyze(pp: PlanePartition) -> ComponentAnalysis:
    support = set(pp.cells())
    comps = _flood(support, lambda c: pp(*c))
    component_id = {cell: n for n, group in enumerate(comps) for cell in group}
    components = tuple(Component(n, pp(*group[0]), group) for n, group in enumerate(comps))

    levels = {}
    for (i, j), cid in component_id.items():
        h = 1
        while component_id.get((i + h, j + h)) == cid:
            h += 1
        levels[(i, j)] = h

    border = []
    for comp in components:
        for group in _flood(set(comp.cells), levels.__getitem__):
            border.append(BorderComponent(comp.id, levels[group[0]], group))
    return ComponentAnalysis(component_id, components, levels, tuple(border))


def a_poly(pp: PlanePartition) -> Poly:
    """A(t) in dense form, with the factored form ``((h, n_h), ...)`` attached."""
    counts = Counter(b.level for b in analyze(pp).border_components)
    return Poly.from_factors(counts)


def a_at_minus_one(pp: PlanePartition) -> int:
    return a_poly(pp)(-1)


@dataclass(frozen=True)
class RhombusCount:
    b: int
    g: int
    diagonal_length: int

    @property
    def k(self) -> int:
        return self.b + self.g - self.diagonal_length


def _rhombus_components(rhombi: set[tuple[int, int]]) -> int:
    # (a, d) ~ (a, d+1): directly stacked; (a, d) ~ (a+1, d-1): one white face apart
    seen: set[tuple[int, int]] = set()
    count = 0
    for start in sorted(rhombi):
        if start in seen:
            continue
        count += 1
        seen.add(start)
        stack = [start]
        while stack:
            a, d = stack.pop()
            for nb in ((a, d + 1), (a, d - 1), (a + 1, d - 1), (a - 1, d + 1)):
                if nb in rhombi and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
    return count


def k_via_rhombi(pp: PlanePartition) -> RhombusCount:
    """Count components through the vertical faces of the 3-D diagram.

    Right column ``i`` holds a rhombus at height ``d`` in row ``a`` when
    ``pp(a, a+i-1) >= d > pp(a, a+i)``; left columns use the transpose.
    """
    if not is_strict(pp):
        raise ValueError("rhombus counting needs a strict plane partition")

    def side(entry) -> int:
        total = 0
        for i in range(1, pp.num_cols + pp.num_rows + 1):
            rhombi = set()
            for a in range(1, pp.num_rows + pp.num_cols + 1):
                top, below = entry(a, a + i - 1), entry(a, a + i)
                rhombi.update((a, d) for d in range(below + 1, top + 1))
            total += _rhombus_components(rhombi)
        return total

    b = side(pp)
    g = side(lambda a, j: pp(j, a))
    diagonal_length = sum(1 for i in range(1, pp.num_rows + 1) if pp(i, i))
    return RhombusCount(b, g, diagonal_length)
