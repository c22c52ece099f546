"""Hall-witness certificates for the deficiency.

A minimum cut of the flow network is turned into a set of column zones;
the black cells inside the zones form a set H whose neighbourhood is too
small, and ``|H| - |N(H)|`` is exactly the number of black cells any
tiling must leave uncovered.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .flownet import FlowNetwork, build_network
from .greedy import ArcFlow, greedy_stack
from .reference import cell_neighbours, d_oracle, max_flow_reference
from .skyline import Cell, Skyline, dominant_columns, imbalance


@dataclass(frozen=True)
class CutEdge:
    kind: str  # "source", "sink" or "gap"
    tail: Optional[int]  # vertex index, None for the source
    head: Optional[int]  # vertex index, None for the sink
    tail_col: Optional[int]
    head_col: Optional[int]
    capacity: int


@dataclass(frozen=True)
class CutSet:
    edges: tuple[CutEdge, ...]
    source_side: tuple[bool, ...]  # per vertex

    @property
    def capacity(self) -> int:
        return sum(e.capacity for e in self.edges)


def _residual_reach(net: FlowNetwork, flow: ArcFlow) -> tuple[list[bool], bool]:
    n = len(net)
    seen = [False] * n
    todo = [i for i, c in enumerate(net.cols) if not c & 1 and flow.terminal[i] == 0]
    for i in todo:
        seen[i] = True
    sink_reached = False
    while todo:
        u = todo.pop()
        if net.cols[u] & 1 and flow.terminal[u] == 0:
            sink_reached = True
        if u + 1 < n and not seen[u + 1]:
            if net.caps[u] - flow.lr[u] + flow.rl[u] > 0:
                seen[u + 1] = True
                todo.append(u + 1)
        if u > 0 and not seen[u - 1]:
            g = u - 1
            if net.caps[g] - flow.rl[g] + flow.lr[g] > 0:
                seen[u - 1] = True
                todo.append(u - 1)
    return seen, sink_reached


def min_cut(net: FlowNetwork, flow: ArcFlow) -> CutSet:
    """Cut whose source side is everything reachable in the residual network."""
    errors = flow.feasibility_errors(net)
    if errors:
        raise ValueError("infeasible flow: " + "; ".join(errors))
    side, sink_reached = _residual_reach(net, flow)
    if sink_reached:
        raise ValueError("flow is not maximum: the sink is reachable in the residual network")
    cols = net.cols
    edges = []
    for i, col in enumerate(cols):
        if not col & 1 and not side[i]:
            edges.append(CutEdge("source", None, i, None, col, 1))
        elif col & 1 and side[i]:
            edges.append(CutEdge("sink", i, None, col, None, 1))
    for g, cap in enumerate(net.caps):
        if side[g] and not side[g + 1]:
            edges.append(CutEdge("gap", g, g + 1, cols[g], cols[g + 1], cap))
        elif side[g + 1] and not side[g]:
            edges.append(CutEdge("gap", g + 1, g, cols[g + 1], cols[g], cap))
    cut = CutSet(tuple(edges), tuple(side))
    if cut.capacity != flow.value(net):
        raise ValueError(f"cut capacity {cut.capacity} != flow value {flow.value(net)}")
    return cut


def bottlenecks(sk: Skyline, cut: CutSet) -> list[int]:
    """Leftmost column of minimum height inside every cut gap, ascending.

    Source and sink arcs do not bound a zone and contribute nothing.
    """
    h = sk.heights
    out = []
    for e in cut.edges:
        if e.kind != "gap":
            continue
        lo, hi = sorted((e.tail_col, e.head_col))
        out.append(lo + int(np.argmin(h[lo : hi + 1])))
    return sorted(out)


@dataclass
class DeficiencyCertificate:
    bottlenecks_raw: list[int]
    bottlenecks_adj: list[int]
    zones: list[tuple[int, int]]
    witness_black: int
    witness_nbhd: int
    colors_inverted: bool
    cut_capacity: int = 0
    flow_value: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def witness_deficiency(self) -> int:
        return self.witness_black - self.witness_nbhd


def _zones(adjusted: list[int], n: int) -> list[tuple[int, int]]:
    # zones alternate with the cut: [0..g1], [g2..g3], ..., open-ended when
    # an even number of boundaries leaves the last run on the zone side
    bounds = [0] + adjusted
    if len(adjusted) % 2 == 0:
        bounds.append(n - 1)
    return [(bounds[k], bounds[k + 1]) for k in range(0, len(bounds) - 1, 2)]


def witness_cells(sk: Skyline, zones, colors_inverted: bool) -> set[Cell]:
    """Cells of the zone colour (black, or white when inverted) inside the zones."""
    parity = 1 if colors_inverted else 0
    heights = sk.tolist()
    cells = set()
    for lo, hi in zones:
        for col in range(max(lo, 0), min(hi, len(heights) - 1) + 1):
            start = (col + parity) % 2
            cells.update(Cell(col, r) for r in range(start, heights[col], 2))
    return cells


def build_witness(
    sk: Skyline,
    bn: list[int],
    colors_inverted: bool = False,
    require_balanced: bool = True,
) -> DeficiencyCertificate:
    """Adjust the bottlenecks, lay out the zones and count the witness.

    A bottleneck on a column dominated by the non-zone colour moves one
    column into its zone: left when it closes a zone (odd 1-based rank),
    right when it opens one (even rank).
    """
    if require_balanced and imbalance(sk) != 0:
        raise ValueError(f"skyline is unbalanced (imbalance {imbalance(sk)}); balance it first")
    h = sk.heights
    n = len(sk)
    other = 0 if colors_inverted else 1  # column parity of the non-zone colour
    adjusted, notes = [], []
    for rank, g in enumerate(sorted(bn), start=1):
        if h[g] % 2 and g % 2 == other:
            g = g - 1 if rank % 2 else g + 1
        adjusted.append(g)
    for a, b in zip(adjusted, adjusted[1:]):
        if b < a:
            notes.append(f"adjusted bottlenecks {a} and {b} cross")
    zones = []
    for lo, hi in _zones(adjusted, n) if n else []:
        if lo > hi:
            notes.append(f"zone [{lo}, {hi}] is empty after adjustment")
        else:
            zones.append((lo, hi))
    cells = witness_cells(sk, zones, colors_inverted)
    heights = sk.tolist()
    nbhd = set()
    for col, row in cells:
        nbhd.update(cell_neighbours(heights, col, row))
    return DeficiencyCertificate(
        bottlenecks_raw=sorted(bn),
        bottlenecks_adj=adjusted,
        zones=zones,
        witness_black=len(cells),
        witness_nbhd=len(nbhd),
        colors_inverted=colors_inverted,
        notes=notes,
    )


def certify(sk: Skyline, require_balanced: bool = True) -> DeficiencyCertificate:
    """Full pipeline: network, greedy flow, minimum cut, bottlenecks, witness.

    Colours are inverted when the leftmost vertex lies on the sink side,
    so the first zone always starts at column 0.
    """
    net = build_network(sk)
    plan = greedy_stack(net, with_flow=True)
    cut = min_cut(net, plan.arc_flow)
    inverted = bool(cut.source_side) and not cut.source_side[0]
    cert = build_witness(sk, bottlenecks(sk, cut), inverted, require_balanced)
    cert.cut_capacity = cut.capacity
    cert.flow_value = plan.value
    return cert


def verify_certificate(sk: Skyline, cert: DeficiencyCertificate, hall_check: bool = True) -> bool:
    """Check the witness against an independently computed flow and matching.

    ``2(|H| - |N(H)|)`` must equal ``|I| + |J| - 2v`` with v from the
    reference max-flow, and the matching oracle's deficiency must be at
    least ``|H| - |N(H)|``. ``hall_check=False`` skips the matching oracle
    for instances beyond its scale bound.
    """
    if imbalance(sk) != 0:
        raise ValueError("certificates are only defined for balanced skylines")
    info = dominant_columns(sk)
    v = max_flow_reference(build_network(sk))
    identity = 2 * cert.witness_deficiency == info.dominant_count - 2 * v
    hall = not hall_check or d_oracle(sk) >= cert.witness_deficiency
    return identity and hall
