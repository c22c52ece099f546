"""Manhattan polyominoes stored as column-height tuples.

Columns and rows are 0-indexed. A cell ``(col, row)`` is black when
``col + row`` is even, so a column's bottom cell is black exactly when the
column index is even.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

MAX_HEIGHT = np.iinfo(np.uint32).max


class Color(enum.Enum):
    BLACK = 0
    WHITE = 1


class Cell(NamedTuple):
    col: int
    row: int

    @property
    def color(self) -> Color:
        return Color.BLACK if (self.col + self.row) % 2 == 0 else Color.WHITE


def cell_color(col: int, row: int) -> Color:
    return Color.BLACK if (col + row) % 2 == 0 else Color.WHITE


class Skyline:
    """Immutable sequence of column heights.

    Heights are kept in a read-only ``uint32`` array. Two skylines compare
    equal when their heights agree after trailing zero columns are dropped.
    """

    __slots__ = ("_h",)

    def __init__(self, heights: Iterable[int] | np.ndarray = ()):
        if isinstance(heights, np.ndarray):
            arr = heights
        else:
            try:
                arr = np.asarray(list(heights), dtype=np.int64)
            except OverflowError:
                raise ValueError(f"height exceeds {MAX_HEIGHT}") from None
        if arr.ndim != 1:
            raise ValueError("heights must be one-dimensional")
        if arr.size and arr.dtype != np.uint32:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueError("heights must be integers")
            if arr.min() < 0:
                raise ValueError("heights must be non-negative")
            if arr.max() > MAX_HEIGHT:
                raise ValueError(f"height exceeds {MAX_HEIGHT}")
        arr = np.array(arr, dtype=np.uint32, copy=True)
        arr.flags.writeable = False
        self._h = arr

    @property
    def heights(self) -> np.ndarray:
        return self._h

    def tolist(self) -> list[int]:
        return self._h.tolist()

    def __len__(self) -> int:
        return int(self._h.size)

    def __getitem__(self, col: int) -> int:
        return int(self._h[col])

    def __iter__(self) -> Iterator[int]:
        return iter(self._h.tolist())

    def _stripped(self) -> tuple[int, ...]:
        nz = np.flatnonzero(self._h)
        end = int(nz[-1]) + 1 if nz.size else 0
        return tuple(self._h[:end].tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Skyline):
            return NotImplemented
        return self._stripped() == other._stripped()

    def __hash__(self) -> int:
        return hash(self._stripped())

    def __repr__(self) -> str:
        return f"Skyline({self.tolist()!r})"

    @property
    def cell_count(self) -> int:
        return int(self._h.sum(dtype=np.uint64))

    def contains(self, col: int, row: int) -> bool:
        return 0 <= col < len(self) and 0 <= row < int(self._h[col])

    def cells(self) -> Iterator[Cell]:
        for col, h in enumerate(self._h.tolist()):
            for row in range(h):
                yield Cell(col, row)


@dataclass(frozen=True)
class DominantInfo:
    blacks: tuple[int, ...]
    whites: tuple[int, ...]
    s_order: tuple[int, ...]

    @property
    def dominant_count(self) -> int:
        return len(self.s_order)


def color_counts(sk: Skyline) -> tuple[int, int]:
    """Return ``(black_count, white_count)``.

    An even-indexed column of height h holds ceil(h/2) black cells, an
    odd-indexed one floor(h/2).
    """
    h = sk.heights.astype(np.uint64)
    black = int(((h[0::2] + 1) // 2).sum()) + int((h[1::2] // 2).sum())
    return black, sk.cell_count - black


def dominant_columns(sk: Skyline) -> DominantInfo:
    odd = np.flatnonzero(sk.heights & 1)
    blacks = odd[(odd & 1) == 0]
    whites = odd[(odd & 1) == 1]
    return DominantInfo(tuple(blacks.tolist()), tuple(whites.tolist()), tuple(odd.tolist()))


def imbalance(sk: Skyline) -> int:
    """Black cells minus white cells; zero iff the skyline is balanced."""
    black, white = color_counts(sk)
    return black - white


def balance(sk: Skyline) -> Skyline:
    """Append isolated unit columns of the lacking colour.

    Each added column sits after at least one zero-height separator, at
    the first index with the right parity, so it joins no flow path.
    """
    diff = imbalance(sk)
    if diff == 0:
        return sk
    parity = 1 if diff > 0 else 0  # lacking white -> odd index
    heights = sk.tolist()
    for _ in range(abs(diff)):
        heights.append(0)
        if len(heights) % 2 != parity:
            heights.append(0)
        heights.append(1)
    return Skyline(heights)


def is_included(p: Skyline, q: Skyline) -> bool:
    """Column-wise ``p <= q`` after padding the shorter one with zeros."""
    n = max(len(p), len(q))
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    a[: len(p)] = p.heights
    b[: len(q)] = q.heights
    return bool(np.all(a <= b))


def as_skyline(value: Skyline | Sequence[int]) -> Skyline:
    return value if isinstance(value, Skyline) else Skyline(value)
