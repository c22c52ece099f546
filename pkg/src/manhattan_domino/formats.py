"""Skyline text format and the JSON payloads emitted by the CLI."""
from __future__ import annotations

import re

from .errors import ParseError
from .skyline import MAX_HEIGHT, Skyline

_TOKEN = re.compile(r"[^\s,]+")


def parse_input(text: str) -> Skyline:
    """Parse whitespace/comma separated heights; ``#`` starts a comment."""
    heights = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        for m in _TOKEN.finditer(body):
            tok = m.group()
            col = m.start() + 1
            if not tok.isdigit() or not tok.isascii():
                what = "negative height" if tok.startswith("-") else "not a non-negative integer"
                raise ParseError(f"{what}: {tok!r}", lineno, col)
            value = int(tok)
            if value > MAX_HEIGHT:
                raise ParseError(f"height {value} exceeds {MAX_HEIGHT}", lineno, col)
            heights.append(value)
    return Skyline(heights)


def format_skyline(sk: Skyline) -> str:
    return " ".join(map(str, sk.tolist())) + "\n"


def tiling_payload(tiling) -> dict:
    return {
        "dominoes": [
            {"x": d.anchor.col, "y": d.anchor.row, "o": d.orient.value} for d in tiling.dominoes
        ],
        "uncovered": [[c.col, c.row] for c in tiling.uncovered],
        "d": len(tiling.uncovered),
    }


def certificate_payload(cert, verified: bool) -> dict:
    return {
        "cut_capacity": cert.cut_capacity,
        "bottlenecks": list(cert.bottlenecks_raw),
        "adjusted": list(cert.bottlenecks_adj),
        "zones": [[lo, hi] for lo, hi in cert.zones],
        "witness_black": cert.witness_black,
        "witness_nbhd": cert.witness_nbhd,
        "verified": verified,
    }
