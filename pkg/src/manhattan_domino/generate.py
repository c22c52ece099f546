"""Seeded random skylines."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .skyline import Skyline

DISTRIBUTIONS = ("uniform", "monotone", "bottleneck-chain")


@dataclass(frozen=True)
class InstanceSpec:
    columns: int
    max_height: int = 9
    dist: str = "uniform"
    seed: int = 0

    def __post_init__(self):
        if self.dist not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.dist!r}; pick one of {DISTRIBUTIONS}")
        if self.columns < 0 or self.max_height < 0:
            raise ValueError("columns and max_height must be non-negative")


def generate(spec: InstanceSpec) -> Skyline:
    """Heights drawn from ``numpy.random.default_rng(seed)``.

    * uniform: independent heights in ``[0, max_height]``;
    * monotone: the same draws sorted, i.e. non-decreasing;
    * bottleneck-chain: plateaus of tall columns separated by single
      columns of height 0-2, which makes cut gaps and nested matches common.
    """
    rng = np.random.default_rng(spec.seed)
    n, top = spec.columns, spec.max_height
    if spec.dist == "uniform":
        h = rng.integers(0, top + 1, size=n)
    elif spec.dist == "monotone":
        h = np.sort(rng.integers(0, top + 1, size=n))
    else:
        h = rng.integers(top // 2, top + 1, size=n)
        low = rng.integers(0, min(top, 2) + 1, size=n)
        h = np.where(rng.random(n) < 0.25, low, h)
    return Skyline(h.astype(np.int64))


def random_corpus(count: int, seed: int, max_columns: int = 40, max_height: int = 9,
                  max_cells: int | None = None) -> list[Skyline]:
    """Mixed corpus for cross-checks; instance k uses seed ``[seed, k]``.

    About one skyline in eight is monotone, one in four bottleneck-chain,
    the rest uniform (all include zero heights).
    """
    out = []
    for k in range(count):
        rng = np.random.default_rng([seed, k])
        cols = int(rng.integers(0, max_columns + 1))
        roll = rng.random()
        dist = "monotone" if roll < 0.125 else "bottleneck-chain" if roll < 0.375 else "uniform"
        sub = int(rng.integers(0, 2**63 - 1))
        sk = generate(InstanceSpec(cols, max_height, dist, sub))
        if max_cells is not None and sk.cell_count > max_cells:
            h = sk.heights
            cut = int(np.searchsorted(np.cumsum(h, dtype=np.int64), max_cells, side="right"))
            sk = Skyline(h[:cut])
        out.append(sk)
    return out
