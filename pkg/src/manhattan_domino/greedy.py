"""Greedy maximum flow on the dominant-column network.

``greedy_naive`` follows the tractable-pair loop literally and keeps the
full arc flow. ``greedy_stack`` gets the same value in one pass with a
stack of unmatched vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .flownet import FlowNetwork, build_network
from .skyline import Skyline


@dataclass
class ArcFlow:
    """Flow on every arc of a network.

    ``lr[g]`` / ``rl[g]`` carry gap g (between vertices g and g+1) to the
    right / to the left. ``terminal[i]`` is the flow on vertex i's source
    arc (source-side vertices) or sink arc (sink-side vertices).
    """

    lr: list[int]
    rl: list[int]
    terminal: list[int]

    @classmethod
    def zero(cls, net: FlowNetwork) -> "ArcFlow":
        gaps = len(net.caps)
        return cls([0] * gaps, [0] * gaps, [0] * len(net))

    def value(self, net: FlowNetwork) -> int:
        return sum(t for t, c in zip(self.terminal, net.cols) if not c & 1)

    def feasibility_errors(self, net: FlowNetwork) -> list[str]:
        """Capacity and conservation violations, empty when feasible."""
        errors = []
        for g, cap in enumerate(net.caps):
            if not 0 <= self.lr[g] <= cap or not 0 <= self.rl[g] <= cap:
                errors.append(f"gap {g}: flow ({self.lr[g]}, {self.rl[g]}) outside [0, {cap}]")
        for i, col in enumerate(net.cols):
            if self.terminal[i] not in (0, 1):
                errors.append(f"vertex {i}: terminal flow {self.terminal[i]}")
            inflow = outflow = 0
            if i > 0:
                inflow += self.lr[i - 1]
                outflow += self.rl[i - 1]
            if i < len(net.caps):
                inflow += self.rl[i]
                outflow += self.lr[i]
            if col & 1:
                outflow += self.terminal[i]
            else:
                inflow += self.terminal[i]
            if inflow != outflow:
                errors.append(f"vertex {i}: inflow {inflow} != outflow {outflow}")
        return errors


@dataclass
class MatchPlan:
    """Result of a greedy solve.

    ``pairs`` holds vertex indices ``(left, right)`` in match order; each
    pair is one unit of flow routed between opposite-role vertices.
    """

    value: int
    pairs: list[tuple[int, int]]
    arc_flow: Optional[ArcFlow] = None

    def column_pairs(self, net: FlowNetwork) -> list[tuple[int, int]]:
        return [(net.cols[i], net.cols[j]) for i, j in self.pairs]


def find_tractable(net: FlowNetwork, st: ArcFlow) -> Optional[tuple[int, int]]:
    """Lexicographically first pair that can take one more unit of flow.

    Besides opposite roles, unsaturated arcs in the travel direction and
    saturated interior terminals, both endpoints must still have a free
    terminal arc; otherwise the augmentation would overflow it.
    """
    cols, caps = net.cols, net.caps
    n = len(cols)
    for i in range(n):
        if st.terminal[i]:
            continue
        role = cols[i] & 1
        flow = st.rl if role else st.lr
        for j in range(i + 1, n):
            if flow[j - 1] >= caps[j - 1]:
                break
            if not st.terminal[j]:
                if cols[j] & 1 != role:
                    return i, j
                break  # an unsaturated interior vertex blocks every later j
    return None


def augment(net: FlowNetwork, st: ArcFlow, i: int, j: int) -> None:
    flow = st.rl if net.cols[i] & 1 else st.lr
    for g in range(i, j):
        flow[g] += 1
    st.terminal[i] += 1
    st.terminal[j] += 1


def greedy_naive(net: FlowNetwork) -> MatchPlan:
    """Start from the zero flow and augment the first tractable pair until none is left."""
    st = ArcFlow.zero(net)
    pairs = []
    while (pair := find_tractable(net, st)) is not None:
        augment(net, st, *pair)
        pairs.append(pair)
    return MatchPlan(len(pairs), pairs, st)


_INF = 1 << 62


def greedy_stack(net: FlowNetwork, with_flow: bool = False) -> MatchPlan:
    """One left-to-right pass over the vertices.

    The stack keeps unmatched vertices together with the directional
    residuals of the gap separating each one from the entry below it; the
    frontier residuals cover the gap from the top of the stack to the
    scan position. An arriving vertex either matches the top (opposite
    role, positive residual in the top's direction) or is pushed.
    """
    cols, caps = net.cols, net.caps
    stack_v: list[int] = []
    stack_lr: list[int] = []
    stack_rl: list[int] = []
    pairs: list[tuple[int, int]] = []
    f_lr = f_rl = _INF
    for v in range(len(cols)):
        role = cols[v] & 1
        if v:
            c = caps[v - 1]
            if c < f_lr:
                f_lr = c
            if c < f_rl:
                f_rl = c
        if stack_v:
            top = stack_v[-1]
            top_role = cols[top] & 1
            if top_role != role:
                if top_role:
                    ok = f_rl > 0
                    if ok:
                        f_rl -= 1
                else:
                    ok = f_lr > 0
                    if ok:
                        f_lr -= 1
                if ok:
                    pairs.append((top, v))
                    stack_v.pop()
                    g_lr = stack_lr.pop()
                    g_rl = stack_rl.pop()
                    if g_lr < f_lr:
                        f_lr = g_lr
                    if g_rl < f_rl:
                        f_rl = g_rl
                    continue
        stack_v.append(v)
        stack_lr.append(f_lr)
        stack_rl.append(f_rl)
        f_lr = f_rl = _INF
    plan = MatchPlan(len(pairs), pairs)
    if with_flow:
        plan.arc_flow = flow_from_pairs(net, pairs)
    return plan


def flow_from_pairs(net: FlowNetwork, pairs: list[tuple[int, int]]) -> ArcFlow:
    """Arc flow induced by routing one unit along each pair, via difference arrays."""
    gaps = len(net.caps)
    d_lr = [0] * (gaps + 1)
    d_rl = [0] * (gaps + 1)
    terminal = [0] * len(net)
    for i, j in pairs:
        d = d_rl if net.cols[i] & 1 else d_lr
        d[i] += 1
        d[j] -= 1
        terminal[i] = terminal[j] = 1
    lr, rl = [], []
    a = b = 0
    for g in range(gaps):
        a += d_lr[g]
        b += d_rl[g]
        lr.append(a)
        rl.append(b)
    return ArcFlow(lr, rl, terminal)


def deficiency(sk: Skyline) -> int:
    """Number of uncovered cells in an optimal partial tiling."""
    net = build_network(sk)
    return len(net) - 2 * greedy_stack(net).value
