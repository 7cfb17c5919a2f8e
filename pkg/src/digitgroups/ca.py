"""One-dimensional cellular automata driven by the digit function.

The new state of cell ``j`` is digit ``s`` of the rule number ``R`` in radix
``eta``, where ``s = sum(eta**(k + r) * x[j + k] for k in -r..l)``. The
neighbor at offset ``-r`` is therefore the least significant digit of ``s``,
the mirror image of the usual Wolfram ordering (see :func:`to_wolfram_order`).
The lattice is finite with periodic wrap-around.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .digitcore import INT_LIMIT, RangeError, digit

__all__ = [
    "CaConfig",
    "ca_step",
    "ca_evolve",
    "rule_from_function",
    "to_wolfram_order",
    "max_rule",
    "single_seed",
    "load_row",
]


@dataclass(frozen=True)
class CaConfig:
    eta: int
    l: int
    r: int
    rule: int
    width: int
    boundary: str = "periodic"

    def __post_init__(self):
        if self.eta < 2:
            raise RangeError(f"eta must be >= 2, got {self.eta}")
        if self.l < 0 or self.r < 0:
            raise RangeError("neighborhood extents must be nonnegative")
        if self.boundary != "periodic":
            raise ValueError(f"unsupported boundary {self.boundary!r}")
        if self.width < self.span:
            raise RangeError(f"width {self.width} is narrower than the neighborhood ({self.span})")
        if self.neighborhoods >= 2**62:
            raise RangeError("neighborhood index space exceeds 64-bit cells")
        if not 0 <= self.rule <= max_rule(self.eta, self.l, self.r):
            raise RangeError(
                f"rule {self.rule} outside [0, {max_rule(self.eta, self.l, self.r)}]"
            )

    @property
    def span(self) -> int:
        return self.l + self.r + 1

    @property
    def neighborhoods(self) -> int:
        return self.eta**self.span

    def lookup(self) -> np.ndarray:
        """Digit ``s`` of the rule for each neighborhood index ``s``.

        Truncated to 64 entries: the rule is below 2**63, so every later digit
        is zero.
        """
        n = min(self.neighborhoods, 64)
        return np.array([digit(self.eta, s, self.rule) for s in range(n)], dtype=np.int64)


def max_rule(eta: int, l: int, r: int) -> int:
    """Largest admissible rule number, capped below 2**63."""
    return min(eta ** (eta ** (l + r + 1)), INT_LIMIT) - 1


def _as_row(cfg: CaConfig, row) -> np.ndarray:
    row = np.asarray(row, dtype=np.int64)
    if row.shape != (cfg.width,):
        raise ValueError(f"row has shape {row.shape}, expected ({cfg.width},)")
    if ((row < 0) | (row >= cfg.eta)).any():
        raise RangeError(f"cells must lie in [0, {cfg.eta - 1}]")
    return row


def _neighborhood_index(cfg: CaConfig, row: np.ndarray) -> np.ndarray:
    s = np.zeros_like(row)
    for k in range(-cfg.r, cfg.l + 1):
        s += cfg.eta ** (k + cfg.r) * np.roll(row, -k)
    return s


def ca_step(cfg: CaConfig, row, *, _lookup: np.ndarray | None = None) -> np.ndarray:
    row = _as_row(cfg, row)
    lookup = cfg.lookup() if _lookup is None else _lookup
    s = _neighborhood_index(cfg, row)
    inside = s < len(lookup)
    return np.where(inside, lookup[np.where(inside, s, 0)], 0)


def ca_evolve(cfg: CaConfig, init, steps: int) -> list[np.ndarray]:
    """``steps + 1`` rows, starting with ``init``."""
    if steps < 1:
        raise RangeError(f"steps must be >= 1, got {steps}")
    rows = [_as_row(cfg, init)]
    lookup = cfg.lookup()
    for _ in range(steps):
        rows.append(ca_step(cfg, rows[-1], _lookup=lookup))
    return rows


def rule_from_function(eta: int, span: int, f: Callable[[int], int]) -> int:
    """Rule number ``sum(eta**s * f(s))`` tabulating a local map of the
    neighborhood index."""
    return sum(eta**s * f(s) for s in range(eta**span))


def to_wolfram_order(eta: int, l: int, r: int, rule: int) -> int:
    """Convert between this module's neighborhood ordering and Wolfram's.

    Reverses the base-``eta`` digits of each neighborhood index; the map is an
    involution, so the same call converts in either direction.
    """
    span = l + r + 1

    def reverse(s: int) -> int:
        return sum(digit(eta, i, s) * eta ** (span - 1 - i) for i in range(span))

    out = sum(eta ** reverse(s) * digit(eta, s, rule) for s in range(eta**span))
    if out > max_rule(eta, l, r):
        raise RangeError("converted rule does not fit below 2**63")
    return out


def single_seed(width: int, value: int = 1) -> np.ndarray:
    row = np.zeros(width, dtype=np.int64)
    row[width // 2] = value
    return row


def load_row(text: str) -> list[int]:
    """Parse an initial row: a digit string, or comma-separated cells."""
    text = text.strip()
    if "," in text:
        return [int(c) for c in text.split(",")]
    return [int(c) for c in "".join(text.split())]
