"""Independent oracles: generic max-flow and grid-graph matching.

Nothing here looks at the greedy solvers; the point is to have slow but
obviously correct answers to compare them against.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass

from .errors import CapacityError
from .flownet import FlowNetwork
from .skyline import Cell, Skyline

ORACLE_ENV = "MANHATTAN_DOMINO_ORACLE_MAX_CELLS"
DEFAULT_ORACLE_MAX_CELLS = 10**6


def oracle_max_cells() -> int:
    value = os.environ.get(ORACLE_ENV)
    return int(value) if value else DEFAULT_ORACLE_MAX_CELLS


def _residual_graph(net: FlowNetwork) -> tuple[list[dict[int, int]], int, int]:
    n = len(net)
    source, sink = n, n + 1
    res: list[dict[int, int]] = [dict() for _ in range(n + 2)]

    def arc(u: int, v: int, c: int) -> None:
        res[u][v] = res[u].get(v, 0) + c
        res[v].setdefault(u, 0)

    for i, col in enumerate(net.cols):
        if col & 1:
            arc(i, sink, 1)
        else:
            arc(source, i, 1)
    for g, c in enumerate(net.caps):
        arc(g, g + 1, c)
        arc(g + 1, g, c)
    return res, source, sink


def max_flow_with_cut(net: FlowNetwork) -> tuple[int, list[bool]]:
    """Edmonds-Karp. Returns the flow value and, per vertex, whether it is
    reachable from the source in the final residual network."""
    res, source, sink = _residual_graph(net)
    value = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            u = queue.popleft()
            for v, c in res[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if sink not in parent:
            return value, [i in parent for i in range(len(net))]
        # every path starts with a unit source arc, so the bottleneck is 1
        v = sink
        while v != source:
            u = parent[v]
            res[u][v] -= 1
            res[v][u] += 1
            v = u
        value += 1


def max_flow_reference(net: FlowNetwork) -> int:
    return max_flow_with_cut(net)[0]


@dataclass
class GridGraph:
    """Edge-adjacency graph of a skyline's cells, split by colour."""

    blacks: list[Cell]
    whites: list[Cell]
    adj: dict[Cell, list[Cell]]

    @property
    def edge_count(self) -> int:
        return sum(len(v) for v in self.adj.values()) // 2

    def neighbourhood(self, cells) -> set[Cell]:
        out: set[Cell] = set()
        for c in cells:
            out.update(self.adj[c])
        return out


def cell_neighbours(heights, col: int, row: int):
    """Cells sharing an edge with ``(col, row)`` inside the skyline."""
    if row > 0:
        yield Cell(col, row - 1)
    if row + 1 < heights[col]:
        yield Cell(col, row + 1)
    if col > 0 and row < heights[col - 1]:
        yield Cell(col - 1, row)
    if col + 1 < len(heights) and row < heights[col + 1]:
        yield Cell(col + 1, row)


def grid_graph(sk: Skyline, max_cells: int | None = None) -> GridGraph:
    limit = oracle_max_cells() if max_cells is None else max_cells
    if sk.cell_count > limit:
        raise CapacityError(f"{sk.cell_count} cells exceed the oracle bound of {limit}")
    heights = sk.tolist()
    blacks, whites, adj = [], [], {}
    for col, h in enumerate(heights):
        for row in range(h):
            cell = Cell(col, row)
            (blacks if (col + row) % 2 == 0 else whites).append(cell)
            adj[cell] = list(cell_neighbours(heights, col, row))
    return GridGraph(blacks, whites, adj)


def max_matching(g: GridGraph) -> int:
    """Hopcroft-Karp from the black side."""
    match_b: dict[Cell, Cell] = {}
    match_w: dict[Cell, Cell] = {}
    inf = len(g.blacks) + 1

    def bfs() -> tuple[bool, dict[Cell, int]]:
        dist = {}
        queue = deque()
        for b in g.blacks:
            if b not in match_b:
                dist[b] = 0
                queue.append(b)
        found = False
        while queue:
            b = queue.popleft()
            for w in g.adj[b]:
                nb = match_w.get(w)
                if nb is None:
                    found = True
                elif nb not in dist:
                    dist[nb] = dist[b] + 1
                    queue.append(nb)
        return found, dist

    def dfs(root: Cell, dist: dict[Cell, int]) -> bool:
        # iterative to stay clear of the recursion limit on tall skylines
        stack = [(root, iter(g.adj[root]))]
        path = []
        while stack:
            b, it = stack[-1]
            advanced = False
            for w in it:
                nb = match_w.get(w)
                if nb is None:
                    path.append((b, w))
                    for pb, pw in path:
                        match_b[pb] = pw
                        match_w[pw] = pb
                    return True
                if dist.get(nb, inf) == dist[b] + 1:
                    path.append((b, w))
                    stack.append((nb, iter(g.adj[nb])))
                    advanced = True
                    break
            if not advanced:
                dist[b] = inf
                stack.pop()
                if path:
                    path.pop()
        return False

    size = 0
    while True:
        found, dist = bfs()
        if not found:
            return size
        for b in g.blacks:
            if b not in match_b and dfs(b, dist):
                size += 1


def d_oracle(sk: Skyline, max_cells: int | None = None) -> int:
    """Uncovered cells of an optimal partial tiling, via maximum matching."""
    return sk.cell_count - 2 * max_matching(grid_graph(sk, max_cells))
