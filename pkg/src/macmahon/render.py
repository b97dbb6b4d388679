"""Flat ASCII and SVG pictures of a plane partition with its components and levels."""

from __future__ import annotations

from .components import ComponentAnalysis, analyze
from .partitions import PlanePartition

CELL = 48
MARGIN = 12


def _grid(pp: PlanePartition, label) -> list[str]:
    width = max((len(str(label(c))) for c in pp.cells()), default=1)
    return [" ".join(f"{label((i, j)):>{width}}" for j in range(1, len(row) + 1))
            for i, row in enumerate(pp.rows, start=1)]


def ascii_render(pp: PlanePartition, analysis: ComponentAnalysis | None = None) -> str:
    """Three side-by-side grids: entries, component ids (1-based) and levels."""
    if not pp.rows:
        return ""
    analysis = analysis or analyze(pp)
    blocks = [
        ("entries", _grid(pp, lambda c: pp(*c))),
        ("components", _grid(pp, lambda c: analysis.component_id[c] + 1)),
        ("levels", _grid(pp, lambda c: analysis.levels[c])),
    ]
    widths = [max(len(title), *(len(line) for line in lines)) for title, lines in blocks]
    out = ["   ".join(title.ljust(w) for (title, _), w in zip(blocks, widths)).rstrip()]
    for n in range(len(pp.rows)):
        out.append("   ".join(lines[n].ljust(w) for (_, lines), w in zip(blocks, widths)).rstrip())
    return "\n".join(out)


def svg_render(pp: PlanePartition, analysis: ComponentAnalysis | None = None) -> str:
    """Support squares with entries and levels; border components outlined in bold."""
    analysis = analysis or analyze(pp)
    border_of = {cell: n for n, b in enumerate(analysis.border_components) for cell in b.cells}
    width = 2 * MARGIN + CELL * pp.num_cols
    height = 2 * MARGIN + CELL * pp.num_rows
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
             f'viewBox="0 0 {width} {height}">']
    for (i, j) in pp.cells():
        x, y = MARGIN + (j - 1) * CELL, MARGIN + (i - 1) * CELL
        parts.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="#f4f4f4" stroke="#bbb" stroke-width="1"/>')
        parts.append(f'<text x="{x + CELL // 2}" y="{y + CELL // 2 + 6}" font-size="18" text-anchor="middle" '
                     f'font-family="sans-serif">{pp(i, j)}</text>')
        parts.append(f'<text x="{x + CELL - 4}" y="{y + CELL - 4}" font-size="10" text-anchor="end" '
                     f'font-family="sans-serif" fill="#666">{analysis.levels[(i, j)]}</text>')
    for (i, j) in pp.cells():
        x, y = MARGIN + (j - 1) * CELL, MARGIN + (i - 1) * CELL
        own = border_of[(i, j)]
        edges = {
            (i - 1, j): (x, y, x + CELL, y),
            (i + 1, j): (x, y + CELL, x + CELL, y + CELL),
            (i, j - 1): (x, y, x, y + CELL),
            (i, j + 1): (x + CELL, y, x + CELL, y + CELL),
        }
        for nb, (x1, y1, x2, y2) in edges.items():
            if border_of.get(nb) != own:
                parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
                             f'stroke-width="3" stroke-linecap="square"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
