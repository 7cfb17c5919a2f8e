"""Composition laws of the finite abelian groups.

Laws accept Python ints or numpy integer arrays (broadcast elementwise), so a
full Cayley table is ``law(m[:, None], n[None, :])``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, prod
from typing import Sequence

from .digitcore import RangeError, digit

__all__ = [
    "DirectSumSpec",
    "NotAFieldError",
    "is_prime",
    "cyclic_law",
    "direct_sum_law",
    "mult_mod_law",
    "mult_inverse",
    "extended_gcd",
]


class NotAFieldError(ValueError):
    """The modulus is composite, so integers mod p do not form a field."""


def is_prime(p: int) -> bool:
    """Deterministic trial division."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for f in range(3, isqrt(p) + 1, 2):
        if p % f == 0:
            return False
    return True


@dataclass(frozen=True)
class DirectSumSpec:
    """Radices ``p_0, ..., p_{N-1}`` of ``C_{p_0} + ... + C_{p_{N-1}}``.

    Radix-1 factors are legal; they contribute a digit that is always zero.
    """

    radices: tuple[int, ...]

    def __init__(self, radices: Sequence[int]):
        radices = tuple(int(r) for r in radices)
        if not radices or any(r < 1 for r in radices):
            raise ValueError(f"direct sum radices must all be >= 1, got {radices}")
        object.__setattr__(self, "radices", radices)

    @property
    def order(self) -> int:
        return prod(self.radices)


def _check_nonneg(*xs) -> None:
    for x in xs:
        if isinstance(x, int) and x < 0:
            raise RangeError(f"group law arguments must be nonnegative, got {x}")


def cyclic_law(p: int, m, n):
    """Addition mod ``p`` as ``d_p(0, m + n)``."""
    if p < 2:
        raise RangeError(f"cyclic group needs p >= 2, got {p}")
    _check_nonneg(m, n)
    return digit(p, 0, m + n)


def direct_sum_law(spec: DirectSumSpec | Sequence[int], m, n):
    """Digit-wise addition in the mixed-radix system of ``spec``.

    Arguments beyond ``[0, P-1]`` wrap, so the table tiles the plane.
    """
    if not isinstance(spec, DirectSumSpec):
        spec = DirectSumSpec(spec)
    _check_nonneg(m, n)
    total, weight = 0, 1
    for p in spec.radices:
        total = total + digit(p, 0, digit(p, 0, m // weight) + digit(p, 0, n // weight)) * weight
        weight *= p
    return total


def mult_mod_law(p: int, m, n):
    """``d_p(0, m * n)``; zero results flag a composite modulus."""
    if p < 2:
        raise RangeError(f"multiplicative law needs p >= 2, got {p}")
    _check_nonneg(m, n)
    return digit(p, 0, m * n)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def mult_inverse(p: int, m: int) -> int:
    """Inverse of ``m`` under :func:`mult_mod_law` for prime ``p``.

    Bezout coefficients give ``m*x + p*y = 1``; reducing ``x`` into ``[1, p-1]``
    with the digit function yields the inverse.
    """
    if not is_prime(p):
        raise NotAFieldError(f"{p} is not a field characteristic (not prime)")
    if not 1 <= m <= p - 1:
        raise RangeError(f"element must lie in [1, {p - 1}], got {m}")
    g, x, _ = extended_gcd(m, p)
    assert g == 1
    # shift to a nonnegative representative before taking the digit
    return digit(p, 0, x + p * (abs(x) // p + 1))
