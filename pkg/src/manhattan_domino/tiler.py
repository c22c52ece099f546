"""Explicit optimal partial tilings.

Each matched pair of dominant columns is planed: every column between
them is cut down to a common even level and the removed strip is covered
with dominoes. Whatever remains is filled with vertical dominoes, which
leaves one cell uncovered per odd column.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .errors import InternalInvariantError
from .flownet import build_network
from .greedy import greedy_stack
from .skyline import Cell, Skyline


class Orientation(enum.Enum):
    HORIZONTAL = "H"
    VERTICAL = "V"


H = Orientation.HORIZONTAL
V = Orientation.VERTICAL


class Domino(NamedTuple):
    anchor: Cell  # lower cell (vertical) or left cell (horizontal)
    orient: Orientation

    @classmethod
    def at(cls, col: int, row: int, orient: Orientation) -> "Domino":
        return cls(Cell(col, row), orient)

    def cells(self) -> tuple[Cell, Cell]:
        col, row = self.anchor
        if self.orient is H:
            return self.anchor, Cell(col + 1, row)
        return self.anchor, Cell(col, row + 1)

    def __repr__(self) -> str:
        return f"{self.orient.value}({self.anchor.col},{self.anchor.row})"


@dataclass(frozen=True)
class PlaningStep:
    left_col: int
    right_col: int
    level: int
    emitted: tuple[Domino, ...]


@dataclass
class Tiling:
    dominoes: list[Domino]
    uncovered: list[Cell]
    steps: list[PlaningStep] = field(default_factory=list)

    @property
    def d(self) -> int:
        return len(self.uncovered)


def _check_pair(cur: list[int], p: int, q: int) -> None:
    if not (0 <= p < q < len(cur)):
        raise InternalInvariantError(f"bad pair ({p}, {q}) for {len(cur)} columns")
    if (q - p) % 2 == 0:
        raise InternalInvariantError(f"pair ({p}, {q}) joins columns of the same colour")
    if cur[p] % 2 == 0 or cur[q] % 2 == 0:
        raise InternalInvariantError(
            f"pair ({p}, {q}) has even endpoint heights {cur[p]}, {cur[q]}"
        )
    for k in range(p + 1, q):
        if cur[k] % 2 or cur[k] < 2:
            raise InternalInvariantError(
                f"pair ({p}, {q}): interior column {k} has height {cur[k]}"
            )


def planing_level(cur, p: int, q: int) -> int:
    """Common even height the columns p..q are planed down to."""
    cur = list(cur)
    _check_pair(cur, p, q)
    a = min(cur[p] - 1, cur[q] - 1)
    for k in range(p + 1, q):
        a = min(a, cur[k] - 2)
    if a < 0 or a % 2:
        raise InternalInvariantError(f"pair ({p}, {q}): level {a}")
    return a


def tile_strip(cur, p: int, q: int, a: int) -> list[Domino]:
    """Dominoes covering ``{(k, r) : p <= k <= q, a <= r < cur[k]}``.

    Row ``a`` is tiled horizontally across p..q, row ``a+1`` horizontally
    across the interior, and the rest of every column vertically.
    """
    cur = list(cur)
    if a != planing_level(cur, p, q):
        raise InternalInvariantError(f"pair ({p}, {q}): level {a} is not the planing level")
    out = [Domino.at(k, a, H) for k in range(p, q, 2)]
    out += [Domino.at(k, a + 1, H) for k in range(p + 1, q - 1, 2)]
    out += [Domino.at(p, r, V) for r in range(a + 1, cur[p] - 1, 2)]
    for k in range(p + 1, q):
        out += [Domino.at(k, r, V) for r in range(a + 2, cur[k] - 1, 2)]
    out += [Domino.at(q, r, V) for r in range(a + 1, cur[q] - 1, 2)]
    return out


def vertical_fill(cur) -> tuple[list[Domino], list[Cell]]:
    dominoes, uncovered = [], []
    for col, h in enumerate(cur):
        dominoes += [Domino.at(col, r, V) for r in range(0, h - 1, 2)]
        if h % 2:
            uncovered.append(Cell(col, h - 1))
    return dominoes, uncovered


def planing_steps(sk: Skyline) -> Iterator[tuple[PlaningStep, list[int]]]:
    """Plane the greedy pairs in match order, yielding each step with the
    residual heights right after it.

    The stack solver matches innermost pairs first, so every interior
    column has already been planed to an even height when its enclosing
    pair comes up.
    """
    net = build_network(sk)
    plan = greedy_stack(net)
    cur = sk.tolist()
    for i, j in plan.pairs:
        p, q = net.cols[i], net.cols[j]
        try:
            a = planing_level(cur, p, q)
        except InternalInvariantError as exc:
            raise InternalInvariantError(f"{exc}; current heights {cur}") from None
        step = PlaningStep(p, q, a, tuple(tile_strip(cur, p, q, a)))
        for k in range(p, q + 1):
            cur[k] = a
        yield step, list(cur)


def build_tiling(sk: Skyline) -> Tiling:
    steps, dominoes = [], []
    cur = sk.tolist()
    for step, cur in planing_steps(sk):
        steps.append(step)
        dominoes.extend(step.emitted)
    rest, uncovered = vertical_fill(cur)
    return Tiling(dominoes + rest, uncovered, steps)


@dataclass
class ValidationReport:
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate_tiling(sk: Skyline, t: Tiling) -> ValidationReport:
    """Containment, disjointness, cell-count identity and the uncovered set."""
    problems = []
    covered: dict[Cell, Domino] = {}
    for dom in t.dominoes:
        for cell in dom.cells():
            if not sk.contains(*cell):
                problems.append(f"containment: {dom!r} covers {tuple(cell)} outside the polyomino")
            if cell in covered:
                problems.append(f"disjointness: {dom!r} overlaps {covered[cell]!r} at {tuple(cell)}")
            else:
                covered[cell] = dom
    if 2 * len(t.dominoes) + len(t.uncovered) != sk.cell_count:
        problems.append(
            f"count: 2*{len(t.dominoes)} + {len(t.uncovered)} != {sk.cell_count} cells"
        )
    free = {c for c in sk.cells() if c not in covered}
    listed = set(t.uncovered)
    if len(listed) != len(t.uncovered):
        problems.append("uncovered: duplicate cells listed")
    for c in sorted(listed - free):
        problems.append(f"uncovered: {tuple(c)} is listed but covered or outside")
    for c in sorted(free - listed):
        problems.append(f"uncovered: {tuple(c)} is free but not listed")
    return ValidationReport(problems)
