"""Digit function, radix expansions and mixed-radix codecs.

Everything here is exact integer (or :class:`fractions.Fraction`) arithmetic.
Scalar inputs are limited to ``0 <= x < 2**63``; numpy integer arrays are
accepted by :func:`digit` so that group laws can be evaluated over whole
tables at once.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

import numpy as np

__all__ = [
    "INT_LIMIT",
    "RangeError",
    "Digits",
    "MixedRadix",
    "digit",
    "ilog",
    "expand",
    "reconstruct",
    "digit_sum",
    "mixed_to_digits",
    "mixed_from_digits",
    "factoradic_digit",
    "radix_economy",
    "best_radix",
    "fractional_part",
]

INT_LIMIT = 2**63


class RangeError(ValueError):
    """An argument lies outside the supported integer range."""


def _check_scalar(x, name: str = "x") -> None:
    if x < 0:
        raise RangeError(f"{name} must be nonnegative, got {x}")
    if x >= INT_LIMIT:
        raise RangeError(f"{name} must be below 2**63, got {x}")


def digit(p: int, k: int, x):
    """Return the ``k``-th radix-``p`` digit of ``x``.

    Evaluates ``floor(x / p**k) - p * floor(x / p**(k+1))``. ``x`` may be an
    int, a nonnegative Fraction, or a numpy integer array (elementwise).
    Radix 1 yields zero everywhere.

    >>> digit(10, 0, 123), digit(10, 2, 123), digit(10, 3, 123)
    (3, 1, 0)
    """
    if p < 1:
        raise RangeError(f"radix must be >= 1, got {p}")
    if k < 0:
        raise RangeError(f"digit position must be nonnegative, got {k}")
    if isinstance(x, np.ndarray):
        if p == 1:
            return np.zeros_like(x)
        return x // p**k - p * (x // p ** (k + 1))
    if isinstance(x, np.integer):
        x = int(x)
    _check_scalar(x)
    if p == 1:
        return 0
    return int(x // p**k - p * (x // p ** (k + 1)))


def ilog(p: int, x: int) -> int:
    """Largest ``k`` with ``p**k <= x`` (exact; ``x >= 1``, ``p >= 2``)."""
    if p < 2:
        raise RangeError(f"integer log needs radix >= 2, got {p}")
    if x < 1:
        raise RangeError(f"integer log needs x >= 1, got {x}")
    k, power = 0, p
    while power <= x:
        power *= p
        k += 1
    return k


@dataclass(frozen=True)
class Digits:
    """Digits of a nonnegative integer, least significant first.

    ``radix`` is an int for a uniform system or a tuple of per-position radices
    for a mixed one.
    """

    radix: int | tuple[int, ...]
    digits: tuple[int, ...]

    def __post_init__(self):
        radices = self.radices()
        if len(radices) != len(self.digits):
            raise ValueError("one radix per digit is required")
        for h, (d, r) in enumerate(zip(self.digits, radices)):
            if not 0 <= d < max(r, 1):
                raise ValueError(f"digit {h} = {d} outside [0, {r - 1}]")

    def radices(self) -> tuple[int, ...]:
        if isinstance(self.radix, int):
            return (self.radix,) * len(self.digits)
        return tuple(self.radix)

    @property
    def value(self) -> int:
        total, weight = 0, 1
        for d, r in zip(self.digits, self.radices()):
            total += d * weight
            weight *= r
        return total

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, h):
        return self.digits[h]


@dataclass(frozen=True)
class MixedRadix:
    """A mixed-radix numeral system with radices ``p_0, ..., p_{N-1}``."""

    radices: tuple[int, ...]

    def __init__(self, radices: Sequence[int]):
        radices = tuple(int(r) for r in radices)
        if not radices:
            raise ValueError("a mixed-radix system needs at least one radix")
        if any(r < 1 for r in radices):
            raise ValueError(f"every radix must be >= 1, got {radices}")
        object.__setattr__(self, "radices", radices)

    @property
    def capacity(self) -> int:
        return prod(self.radices)

    def weights(self) -> list[int]:
        """Place values ``prod(p_m for m < h)`` for every position ``h``."""
        out, w = [], 1
        for r in self.radices:
            out.append(w)
            w *= r
        return out


def expand(p: int, x: int) -> Digits:
    """Radix-``p`` expansion of ``x`` with ``floor(log_p x) + 1`` digits."""
    _check_scalar(x)
    if p == 1:
        if x == 0:
            return Digits(1, (0,))
        raise RangeError(f"{x} is unrepresentable in radix 1")
    if p < 1:
        raise RangeError(f"radix must be >= 1, got {p}")
    if x == 0:
        return Digits(p, (0,))
    n = ilog(p, x)
    return Digits(p, tuple(digit(p, k, x) for k in range(n + 1)))


def reconstruct(p: int, digits: Sequence[int]) -> int:
    return sum(d * p**k for k, d in enumerate(digits))


def digit_sum(p: int, n: int) -> int:
    """Sum of the radix-``p`` digits of ``n``.

    For prime ``p``, ``(n - digit_sum(p, n)) // (p - 1)`` is the exponent of
    ``p`` in ``n!``.
    """
    if p < 2:
        raise RangeError(f"digit_sum needs radix >= 2, got {p}")
    _check_scalar(n, "n")
    if n == 0:
        return 0
    return sum(digit(p, k, n) for k in range(ilog(p, n) + 1))


def mixed_to_digits(system: MixedRadix | Sequence[int], n: int) -> Digits:
    """Digits of ``n`` in a mixed-radix system; digit ``h`` is
    ``d_{p_h}(0, n // prod(p_m for m < h))``."""
    if not isinstance(system, MixedRadix):
        system = MixedRadix(system)
    _check_scalar(n, "n")
    if n >= system.capacity:
        raise RangeError(
            f"{n} does not fit in radices {system.radices} (capacity {system.capacity})"
        )
    return Digits(
        system.radices,
        tuple(digit(r, 0, n // w) for r, w in zip(system.radices, system.weights())),
    )


def mixed_from_digits(system: MixedRadix | Sequence[int], digits: Sequence[int]) -> int:
    if not isinstance(system, MixedRadix):
        system = MixedRadix(system)
    digits = tuple(digits)
    if len(digits) != len(system.radices):
        raise ValueError(
            f"expected {len(system.radices)} digits, got {len(digits)}"
        )
    for h, (d, r) in enumerate(zip(digits, system.radices)):
        if not 0 <= d < r:
            raise RangeError(f"digit {h} = {d} outside [0, {r - 1}]")
    return sum(d * w for d, w in zip(digits, system.weights()))


def factoradic_digit(h: int, n: int) -> int:
    """Digit ``h`` of ``n`` in the factorial number system (radix ``h + 1``)."""
    if h < 0:
        raise RangeError(f"digit position must be nonnegative, got {h}")
    _check_scalar(n, "n")
    return digit(h + 1, 0, n // factorial(h))


def radix_economy(eta: int, w: int) -> int:
    """``eta * floor(1 + log_eta(w))`` using an exact integer logarithm."""
    if eta < 2:
        raise RangeError(f"radix economy needs eta >= 2, got {eta}")
    if w < 1:
        raise RangeError(f"radix economy needs w >= 1, got {w}")
    return eta * (1 + ilog(eta, w))


def best_radix(w: int, radices: Sequence[int] = range(2, 17)) -> int:
    """Radix with the least economy for ``w``; ties go to the smaller radix."""
    return min(radices, key=lambda eta: (radix_economy(eta, w), eta))


def fractional_part(q: Fraction) -> Fraction:
    return q - (q.numerator // q.denominator)
