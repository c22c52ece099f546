"""Timing harness for network construction plus the stack solver."""
from __future__ import annotations

import csv
import gc
import io
import statistics
import time
from dataclasses import dataclass, replace
from typing import Iterable

from .flownet import build_network
from .generate import InstanceSpec, generate
from .greedy import greedy_stack


@dataclass(frozen=True)
class BenchRow:
    size: int
    seconds: float

    @property
    def seconds_per_column(self) -> float:
        return self.seconds / self.size if self.size else 0.0


def time_solve(sk, reps: int = 5) -> float:
    """Median wall time of ``build_network`` + ``greedy_stack``, gc paused."""
    times = []
    enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(reps):
            t0 = time.perf_counter()
            greedy_stack(build_network(sk))
            times.append(time.perf_counter() - t0)
    finally:
        if enabled:
            gc.enable()
    return statistics.median(times)


def bench(sizes: Iterable[int], template: InstanceSpec = InstanceSpec(0), reps: int = 5) -> list[BenchRow]:
    rows = []
    for size in sizes:
        sk = generate(replace(template, columns=size))
        rows.append(BenchRow(size, time_solve(sk, reps)))
    return rows


def to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["size", "seconds", "seconds_per_column"])
    for r in rows:
        writer.writerow([r.size, f"{r.seconds:.6g}", f"{r.seconds_per_column:.6g}"])
    return buf.getvalue()
