"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a mismatch, 2 on bad
input (unreadable file, parse error, size bound exceeded).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .bench import bench, to_csv
from .certificate import certify, verify_certificate
from .crosscheck import check_instance
from .errors import CapacityError, ParseError
from .flownet import build_network
from .formats import certificate_payload, format_skyline, parse_input, tiling_payload
from .generate import DISTRIBUTIONS, InstanceSpec, generate, random_corpus
from .greedy import greedy_stack
from .reference import oracle_max_cells
from .render import render_ascii, render_svg
from .skyline import balance, dominant_columns, imbalance
from .tiler import build_tiling

log = logging.getLogger("manhattan_domino")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _read(path: str):
    if path == "-":
        return parse_input(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_input(fh.read())


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(", ", ": ")) + "\n")


def cmd_solve(args) -> int:
    sk = _read(args.file)
    net = build_network(sk)
    plan = greedy_stack(net)
    info = dominant_columns(sk)
    _emit({
        "columns": len(sk),
        "dominant_black": len(info.blacks),
        "dominant_white": len(info.whites),
        "flow_value": plan.value,
        "uncovered": len(net) - 2 * plan.value,
        "pairs": [list(p) for p in plan.column_pairs(net)],
    })
    return EXIT_OK


def cmd_tile(args) -> int:
    sk = _read(args.file)
    tiling = build_tiling(sk)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(sk, tiling))
    if args.png:
        from .plotting import plot_tiling
        plot_tiling(sk, tiling, args.png, title=f"d = {tiling.d}")
    if args.ascii:
        sys.stdout.write(render_ascii(sk, tiling))
    else:
        _emit(tiling_payload(tiling))
    return EXIT_OK


def cmd_render(args) -> int:
    sk = _read(args.file)
    tiling = None if args.bare else build_tiling(sk)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_svg(sk, tiling))
    if args.png:
        from .plotting import plot_tiling
        plot_tiling(sk, tiling, args.png)
    return EXIT_OK


def _check(item):
    label, sk = item
    result = check_instance(sk)
    result["source"] = label
    return result


def cmd_verify(args) -> int:
    if args.random is not None:
        corpus = random_corpus(args.random, args.seed, max_cells=args.max_cells)
        items = [(f"random[{k}]", sk) for k, sk in enumerate(corpus)]
    elif args.files:
        items = [(path, _read(path)) for path in args.files]
    else:
        raise SystemExit("verify: give FILE... or --random N")
    limit = oracle_max_cells()
    for label, sk in items:
        if sk.cell_count > limit:
            raise CapacityError(f"{label}: {sk.cell_count} cells exceed the oracle bound of {limit}")
        if args.dump_network:
            sys.stderr.write(f"# network {label}\n" + build_network(sk).dump())
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check, items, chunksize=16))
    else:
        results = [_check(item) for item in items]
    bad = 0
    for res in results:
        bad += not res["ok"]
        if args.quiet and res["ok"]:
            continue
        _emit(res)
    log.info("verified %d instance(s), %d mismatch(es)", len(results), bad)
    return EXIT_MISMATCH if bad else EXIT_OK


def cmd_certify(args) -> int:
    sk = _read(args.file)
    if imbalance(sk):
        log.warning("input has imbalance %d; certifying the balanced extension", imbalance(sk))
        sk = balance(sk)
    cert = certify(sk)
    hall = sk.cell_count <= oracle_max_cells()
    if not hall:
        log.warning("skipping the matching-oracle check: instance exceeds the oracle bound")
    for note in cert.notes:
        log.warning(note)
    _emit(certificate_payload(cert, verify_certificate(sk, cert, hall_check=hall)))
    return EXIT_OK


def cmd_gen(args) -> int:
    sk = generate(InstanceSpec(args.cols, args.max_h, args.dist, args.seed))
    sys.stdout.write(format_skyline(sk))
    return EXIT_OK


def cmd_bench(args) -> int:
    template = InstanceSpec(0, args.max_h, args.dist, args.seed)
    rows = bench(args.sizes, template, args.reps)
    text = to_csv(rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import plot_scaling
        plot_scaling(rows, args.plot)
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    return [int(float(tok)) for tok in text.replace(",", " ").split()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="manhattan-domino",
        description="Optimal partial domino tilings of Manhattan polyominoes.",
    )
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="flow value, deficiency and matched column pairs (JSON)")
    s.add_argument("file", help="skyline file, '-' for stdin")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("tile", help="explicit optimal partial tiling (JSON)")
    s.add_argument("file")
    s.add_argument("--svg", metavar="OUT")
    s.add_argument("--png", metavar="OUT", help="matplotlib figure of the tiling")
    s.add_argument("--ascii", action="store_true", help="print ASCII art instead of JSON")
    s.set_defaults(func=cmd_tile)

    s = sub.add_parser("verify", help="cross-check solvers against the oracles")
    s.add_argument("files", nargs="*", metavar="FILE")
    s.add_argument("--random", type=int, metavar="N")
    s.add_argument("--max-cells", type=int, default=None, metavar="M")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--dump-network", action="store_true", help="network dumps on stderr")
    s.add_argument("-q", "--quiet", action="store_true", help="print mismatches only")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("certify", help="Hall-witness certificate (JSON)")
    s.add_argument("file")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("gen", help="print a seeded random skyline")
    s.add_argument("--cols", type=int, required=True)
    s.add_argument("--max-h", type=int, default=9)
    s.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="time network build + stack solver (CSV)")
    s.add_argument("--sizes", type=_sizes, default=[250_000, 500_000, 1_000_000])
    s.add_argument("--reps", type=int, default=5)
    s.add_argument("--max-h", type=int, default=9)
    s.add_argument("--dist", choices=DISTRIBUTIONS, default="uniform")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", metavar="CSV")
    s.add_argument("--plot", metavar="PNG", help="scaling figure next to the CSV")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("render", help="draw a skyline and its tiling")
    s.add_argument("file")
    s.add_argument("--svg", metavar="OUT", required=True)
    s.add_argument("--png", metavar="OUT")
    s.add_argument("--bare", action="store_true", help="cells only, no tiling")
    s.set_defaults(func=cmd_render)
    return p


def _setup_logging(verbose: bool) -> None:
    # bind to the current stderr on every call so redirected streams are honoured
    for h in list(log.handlers):
        log.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.INFO if verbose else logging.WARNING)
    log.propagate = False


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)
    try:
        return args.func(args)
    except (ParseError, CapacityError, OSError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
