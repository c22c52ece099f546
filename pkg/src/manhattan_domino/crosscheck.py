"""Run every solver and oracle on one instance and compare."""
from __future__ import annotations

from .flownet import build_network
from .greedy import greedy_naive, greedy_stack
from .reference import d_oracle, max_flow_reference
from .skyline import Skyline
from .tiler import build_tiling, validate_tiling


def check_instance(sk: Skyline, max_cells: int | None = None) -> dict:
    net = build_network(sk)
    stack = greedy_stack(net).value
    naive = greedy_naive(net).value
    flow = max_flow_reference(net)
    d = len(net) - 2 * stack
    d_ref = d_oracle(sk, max_cells)
    tiling = build_tiling(sk)
    report = validate_tiling(sk, tiling)
    ok = stack == naive == flow and d == d_ref == len(tiling.uncovered) and report.ok
    return {
        "heights": sk.tolist(),
        "greedy_stack": stack,
        "greedy_naive": naive,
        "max_flow": flow,
        "deficiency": d,
        "d_oracle": d_ref,
        "tiling_uncovered": len(tiling.uncovered),
        "tiling_valid": report.ok,
        "ok": ok,
    }
