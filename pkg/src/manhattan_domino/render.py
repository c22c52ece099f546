"""ASCII and SVG views of a skyline and, optionally, a tiling."""
from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Optional

from .errors import CapacityError
from .skyline import Skyline
from .tiler import Orientation, Tiling

DEFAULT_RENDER_MAX_CELLS = 10**5


@dataclass(frozen=True)
class RenderStyle:
    cell_size: int = 20
    black_fill: str = "#9a9a9a"
    white_fill: str = "#f4f4f4"
    domino_fill: str = "none"
    domino_outline: str = "#202020"
    uncovered_fill: str = "#e0453a"
    # ascii glyphs
    h_left: str = "<"
    h_right: str = ">"
    v_top: str = "^"
    v_bottom: str = "v"
    uncovered: str = "!"
    black: str = "#"
    white: str = "."
    baseline: str = "="

    def __post_init__(self):
        if self.cell_size <= 0:
            raise ValueError("cell_size must be positive")


def _check_bound(sk: Skyline, max_cells: int) -> None:
    if sk.cell_count > max_cells:
        raise CapacityError(f"{sk.cell_count} cells exceed the render bound of {max_cells}")


def render_ascii(
    sk: Skyline,
    t: Optional[Tiling] = None,
    style: RenderStyle = RenderStyle(),
    max_cells: int = DEFAULT_RENDER_MAX_CELLS,
) -> str:
    """Top row first, one glyph per cell, a baseline under column 0..n-1.

    Without a tiling the cells show their colour; with one, dominoes are
    drawn as ``<>`` or ``^``/``v`` pairs and uncovered cells as ``!``.
    """
    _check_bound(sk, max_cells)
    heights = sk.tolist()
    top = max(heights, default=0)
    grid = [[" "] * len(heights) for _ in range(top)]
    for col, h in enumerate(heights):
        for row in range(h):
            grid[row][col] = style.black if (col + row) % 2 == 0 else style.white
    if t is not None:
        for dom in t.dominoes:
            (c0, r0), (c1, r1) = dom.cells()
            if dom.orient is Orientation.HORIZONTAL:
                grid[r0][c0], grid[r1][c1] = style.h_left, style.h_right
            else:
                grid[r0][c0], grid[r1][c1] = style.v_bottom, style.v_top
        for col, row in t.uncovered:
            grid[row][col] = style.uncovered
    lines = ["".join(row).rstrip() for row in reversed(grid)]
    lines.append(style.baseline * len(heights))
    return "\n".join(lines) + "\n"


def render_svg(
    sk: Skyline,
    t: Optional[Tiling] = None,
    style: RenderStyle = RenderStyle(),
    max_cells: int = DEFAULT_RENDER_MAX_CELLS,
) -> str:
    """Standalone SVG with row 0 drawn at the bottom."""
    _check_bound(sk, max_cells)
    heights = sk.tolist()
    s = style.cell_size
    width = len(heights) * s
    height = max(heights, default=0) * s

    def y(row: int, rows: int = 1) -> int:
        return height - (row + rows) * s

    root = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    cells = ET.SubElement(root, "g", {"class": "cells"})
    for col, h in enumerate(heights):
        for row in range(h):
            fill = style.black_fill if (col + row) % 2 == 0 else style.white_fill
            ET.SubElement(cells, "rect", x=str(col * s), y=str(y(row)), width=str(s),
                          height=str(s), fill=fill)
    if t is not None:
        doms = ET.SubElement(root, "g", {"class": "dominoes"})
        inset = max(1, s // 10)
        for dom in t.dominoes:
            col, row = dom.anchor
            horizontal = dom.orient is Orientation.HORIZONTAL
            w, hh = (2 * s, s) if horizontal else (s, 2 * s)
            ET.SubElement(
                doms, "rect",
                x=str(col * s + inset), y=str(y(row, 1 if horizontal else 2) + inset),
                width=str(w - 2 * inset), height=str(hh - 2 * inset),
                fill=style.domino_fill, stroke=style.domino_outline,
                **{"stroke-width": str(max(1, s // 10))},
            )
        marks = ET.SubElement(root, "g", {"class": "uncovered"})
        for col, row in t.uncovered:
            ET.SubElement(marks, "rect", x=str(col * s), y=str(y(row)), width=str(s),
                          height=str(s), fill=style.uncovered_fill, opacity="0.8")
    return ET.tostring(root, encoding="unicode") + "\n"
