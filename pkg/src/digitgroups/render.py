"""Deterministic text and P3 image output."""
from __future__ import annotations

from typing import Iterable, Sequence

# viridis sampled at nine evenly spaced stops; the 256-entry ramp interpolates
# between them with integer rounding so output is byte-stable everywhere
_STOPS = (
    (68, 1, 84), (72, 40, 120), (62, 74, 137), (49, 104, 142), (38, 130, 142),
    (31, 158, 137), (53, 183, 121), (109, 205, 89), (253, 231, 37),
)
OUTSIDE = (0, 0, 0)


def _build_ramp() -> tuple[tuple[int, int, int], ...]:
    segments = len(_STOPS) - 1
    ramp = []
    for i in range(256):
        pos = i * segments
        seg, rem = divmod(pos, 255)
        if seg == segments:
            ramp.append(_STOPS[-1])
            continue
        lo, hi = _STOPS[seg], _STOPS[seg + 1]
        ramp.append(tuple((a * (255 - rem) + b * rem + 127) // 255 for a, b in zip(lo, hi)))
    return tuple(ramp)


RAMP = _build_ramp()


def color(v: int, top: int) -> tuple[int, int, int]:
    """Ramp color for ``v`` in ``[0, top]``; anything outside is black."""
    if v < 0 or v > top:
        return OUTSIDE
    if top == 0:
        return RAMP[0]
    return RAMP[(v * 255 + top // 2) // top]


def ppm(rows: Sequence[Sequence[int]], top: int) -> str:
    """Plain (P3) PPM, one pixel per cell, one text line per image row."""
    height = len(rows)
    width = len(rows[0]) if height else 0
    out = [f"P3\n{width} {height}\n255\n"]
    for row in rows:
        out.append(" ".join("%d %d %d" % color(int(v), top) for v in row) + "\n")
    return "".join(out)


def tsv(rows: Iterable[Iterable[object]]) -> str:
    return "".join("\t".join(str(v) for v in row) + "\n" for row in rows)
