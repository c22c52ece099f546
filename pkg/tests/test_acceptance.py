"""Exit criteria. Each test carries an ``acceptance`` marker; the summary
at the end of the pytest run prints one PASS/FAIL line per criterion."""
import statistics
import time

import numpy as np
import pytest

from manhattan_domino import (
    InstanceSpec,
    Role,
    Skyline,
    build_network,
    build_tiling,
    certify,
    d_oracle,
    deficiency,
    dominant_columns,
    generate,
    greedy_naive,
    greedy_stack,
    imbalance,
    max_flow_reference,
    validate_tiling,
    verify_certificate,
)
from manhattan_domino.bench import time_solve
from manhattan_domino.generate import random_corpus
from manhattan_domino.tiler import Domino, Orientation, planing_level, planing_steps, tile_strip

from conftest import FIG2, FIG4, FIG5B, FIG7

H, V = Orientation.HORIZONTAL, Orientation.VERTICAL
CORPUS_SIZE = 10_000
CORPUS_SEED = 20_240_611


@pytest.fixture(scope="module")
def corpus():
    sks = random_corpus(CORPUS_SIZE, CORPUS_SEED, max_columns=40, max_height=9)
    assert len(sks) >= 10_000
    assert all(len(s) <= 40 and max(s.tolist(), default=0) <= 9 for s in sks)
    assert sum(0 in s.tolist() for s in sks) > CORPUS_SIZE // 2
    return sks


@pytest.fixture(scope="module")
def oracle_run(corpus):
    t0 = time.perf_counter()
    pairs = [(deficiency(sk), d_oracle(sk)) for sk in corpus]
    return pairs, time.perf_counter() - t0


@pytest.mark.acceptance("AC1 Figure 3 network reproduction")
def test_ac1_fig3_network(record_property):
    net = build_network(FIG2)
    assert [c for c, r in net.verts if r is Role.SOURCE_SIDE] == [0, 2, 10, 12]
    assert [c for c, r in net.verts if r is Role.SINK_SIDE] == [3, 5, 7, 9]
    assert net.caps == (2, 2, 1, 2, 1, 1, 1)
    times = []
    for _ in range(51):
        t0 = time.perf_counter()
        build_network(FIG2)
        times.append(time.perf_counter() - t0)
    median = statistics.median(times)
    record_property("detail", f"median build {median * 1e6:.1f} us")
    assert median < 1e-3


@pytest.mark.acceptance("AC2 Figure 4 planing and tiling")
def test_ac2_fig4(record_property):
    t = build_tiling(FIG4)
    first = t.steps[0]
    assert (first.left_col, first.right_col, first.level) == (0, 3, 2)
    assert set(first.emitted) == {
        Domino.at(0, 2, H), Domino.at(2, 2, H), Domino.at(1, 3, H), Domino.at(0, 3, V)
    }
    assert len(first.emitted) == 4
    assert (len(t.dominoes), len(t.uncovered)) == (10, 1)
    assert validate_tiling(FIG4, t).ok
    record_property("detail", "4 strip dominoes, 10 total, 1 uncovered")


@pytest.mark.acceptance("AC3 Figure 5b strip layout")
def test_ac3_fig5b(record_property):
    cur = FIG5B.tolist()
    a = planing_level(cur, 4, 7)
    assert a == 2
    got = tile_strip(cur, 4, 7, a)
    # 14 removed cells, so 7 dominoes
    drawn = {
        Domino.at(4, 2, H), Domino.at(6, 2, H), Domino.at(4, 3, V), Domino.at(5, 3, H),
        Domino.at(7, 3, V), Domino.at(5, 4, V), Domino.at(4, 5, V),
    }
    assert set(got) == drawn and len(got) == len(drawn)
    record_property("detail", f"a = {a}, {len(got)} dominoes as drawn")


@pytest.mark.acceptance("AC4 Figure 7 Hall-witness certificate")
def test_ac4_fig7(record_property):
    assert d_oracle(FIG7) == 4
    cert = certify(FIG7)
    assert (cert.witness_black, cert.witness_nbhd) == (9, 7)
    assert cert.flow_value == 4 == max_flow_reference(build_network(FIG7))
    assert deficiency(FIG7) == 4
    assert verify_certificate(FIG7, cert)
    record_property("detail", "9 - 7 = 2 black-side, d = 4")


@pytest.mark.acceptance("AC5 greedy deficiency equals matching oracle")
def test_ac5_deficiency_equivalence(oracle_run, record_property):
    pairs, elapsed = oracle_run
    mismatches = sum(a != b for a, b in pairs)
    record_property("detail", f"{len(pairs)} instances, {mismatches} mismatches, {elapsed:.1f} s")
    assert mismatches == 0
    assert elapsed < 60


@pytest.mark.acceptance("AC6 solver agreement")
def test_ac6_solver_agreement(corpus, record_property):
    bad = 0
    for sk in corpus:
        net = build_network(sk)
        bad += not (greedy_naive(net).value == greedy_stack(net).value == max_flow_reference(net))
    record_property("detail", f"{len(corpus)} instances, {bad} mismatches")
    assert bad == 0


@pytest.mark.acceptance("AC7 tiling validity and optimality")
def test_ac7_tiling(corpus, oracle_run, record_property):
    pairs, _ = oracle_run
    bad = 0
    for sk, (_, d_ref) in zip(corpus, pairs):
        t = build_tiling(sk)
        bad += not (validate_tiling(sk, t).ok and len(t.uncovered) == d_ref)
    record_property("detail", f"{len(corpus)} tilings, {bad} failures")
    assert bad == 0


@pytest.mark.acceptance("AC8 planing preserves network deficiency")
def test_ac8_planing_invariant(corpus, record_property):
    checked = steps = violations = 0
    for sk in corpus[:1500]:
        net = build_network(sk)
        base = len(net) - 2 * max_flow_reference(net)
        for _, cur in planing_steps(sk):
            rebuilt = build_network(Skyline(cur))
            violations += len(rebuilt) - 2 * max_flow_reference(rebuilt) != base
            steps += 1
        checked += 1
    record_property("detail", f"{checked} instances, {steps} steps, {violations} violations")
    assert checked >= 1000 and violations == 0


@pytest.mark.acceptance("AC9 monotone balanced skylines tile perfectly")
def test_ac9_monotone(record_property):
    balanced = unbalanced = failures = 0
    seed = 0
    while balanced < 1000 or unbalanced < 1000:
        rng = np.random.default_rng([CORPUS_SEED, seed])
        seed += 1
        spec = InstanceSpec(int(rng.integers(1, 41)), 9, "monotone", int(rng.integers(2**62)))
        sk = generate(spec)
        hs = sk.tolist()
        assert hs == sorted(hs)
        gap = imbalance(sk)
        d = deficiency(sk)
        if gap == 0 and balanced < 1000:
            t = build_tiling(sk)
            failures += not (d == 0 and t.uncovered == [] and validate_tiling(sk, t).ok
                             and d_oracle(sk) == 0)
            balanced += 1
        elif gap != 0 and unbalanced < 1000:
            failures += d != abs(gap)
            unbalanced += 1
    record_property("detail", f"{balanced} balanced, {unbalanced} unbalanced, {failures} failures")
    assert failures == 0


@pytest.mark.acceptance("AC10 linear scaling of network build + stack solver")
def test_ac10_linearity(record_property):
    sizes = [250_000, 500_000, 1_000_000]
    times = [time_solve(generate(InstanceSpec(n, 9, "uniform", 1)), reps=5) for n in sizes]
    ratios = [b / a for a, b in zip(times, times[1:])]
    record_property(
        "detail",
        ", ".join(f"{n}: {t:.3f} s" for n, t in zip(sizes, times))
        + "; ratios " + ", ".join(f"{r:.2f}" for r in ratios),
    )
    assert times[-1] <= 2.0
    assert all(r <= 2.3 for r in ratios)


@pytest.mark.acceptance("AC11 parity and imbalance bounds")
def test_ac11_parity(corpus, oracle_run, record_property):
    pairs, _ = oracle_run
    bad = 0
    for sk, (d, _) in zip(corpus, pairs):
        bad += d % 2 != sk.cell_count % 2 or d < abs(imbalance(sk))
    record_property("detail", f"{len(corpus)} instances, {bad} violations")
    assert bad == 0
