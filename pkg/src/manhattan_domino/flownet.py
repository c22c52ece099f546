"""Flow network on the odd-height columns of a skyline.

Vertices are the dominant columns in ascending order. Black-dominant
columns hang off the source, white-dominant ones feed the sink, and each
pair of consecutive vertices is joined by two opposite arcs sharing the
capacity ``ceil(X/2)``, X being the smallest height on the closed column
interval between them.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .skyline import Skyline


class Role(enum.IntEnum):
    SOURCE_SIDE = 0  # black-dominant, even column index
    SINK_SIDE = 1  # white-dominant, odd column index


@dataclass(frozen=True)
class FlowNetwork:
    """``cols[i]`` is the column of vertex i; ``caps[i]`` joins i and i+1.

    Capacity-zero gaps are kept so vertex indices stay aligned with the
    ascending order of dominant columns.
    """

    cols: tuple[int, ...]
    caps: tuple[int, ...]

    def __post_init__(self):
        if len(self.caps) != max(0, len(self.cols) - 1):
            raise ValueError("need exactly one capacity per consecutive vertex pair")

    def __len__(self) -> int:
        return len(self.cols)

    def role(self, i: int) -> Role:
        return Role(self.cols[i] & 1)

    @property
    def verts(self) -> list[tuple[int, Role]]:
        return [(c, Role(c & 1)) for c in self.cols]

    @property
    def source_count(self) -> int:
        return sum(1 for c in self.cols if not c & 1)

    @property
    def sink_count(self) -> int:
        return len(self.cols) - self.source_count

    def dump(self) -> str:
        """Debug dump: one ``col role`` line per vertex, then one ``cap`` line per gap."""
        lines = [f"{c} {'source' if not c & 1 else 'sink'}" for c in self.cols]
        lines += [str(c) for c in self.caps]
        return "\n".join(lines) + ("\n" if lines else "")


class RangeMinIndex:
    """Sparse table answering ``X(i, j) = min(heights[i..j])`` in O(1)."""

    def __init__(self, heights):
        h = np.asarray(heights, dtype=np.int64)
        self._n = int(h.size)
        self._table = [h]
        span = 1
        while 2 * span <= self._n:
            prev = self._table[-1]
            self._table.append(np.minimum(prev[:-span], prev[span:]))
            span *= 2

    def __len__(self) -> int:
        return self._n

    def query(self, i: int, j: int) -> int:
        if not (0 <= i <= j < self._n):
            raise ValueError(f"invalid interval [{i}, {j}] for {self._n} columns")
        level = (j - i + 1).bit_length() - 1
        row = self._table[level]
        return int(min(row[i], row[j - (1 << level) + 1]))


def range_min(idx: RangeMinIndex, i: int, j: int) -> int:
    return idx.query(i, j)


def build_network(sk: Skyline) -> FlowNetwork:
    """Build the network in one vectorised left-to-right pass.

    ``np.minimum.reduceat`` over the dominant positions gives the minimum
    of each half-open run ``[s_k, s_{k+1})``; folding in ``h[s_{k+1}]``
    closes the interval. Auxiliary memory is O(number of vertices).
    """
    h = sk.heights
    odd = np.flatnonzero(h & 1)
    if odd.size < 2:
        return FlowNetwork(tuple(odd.tolist()), ())
    runs = np.minimum.reduceat(h, odd)[:-1]
    x = np.minimum(runs, h[odd[1:]]).astype(np.int64)
    caps = (x + 1) // 2
    return FlowNetwork(tuple(odd.tolist()), tuple(caps.tolist()))
