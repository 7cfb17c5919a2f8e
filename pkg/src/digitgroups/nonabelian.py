"""Dihedral, dicyclic and metacyclic composition laws.

Each law maps a pair of nonnegative integers to ``[0, order - 1]`` and, like
the abelian laws, evaluates elementwise over numpy integer arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from .digitcore import RangeError, digit

__all__ = [
    "InvalidSpecError",
    "MetacyclicSpec",
    "dihedral_law",
    "dicyclic_law",
    "metacyclic_law",
    "quaternion_label",
    "QUATERNION_LABELS",
]

QUATERNION_LABELS = ("1", "i", "-1", "-i", "j", "ij", "-j", "-ij")


class InvalidSpecError(ValueError):
    """A group descriptor whose law fails a group axiom or a precondition."""

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def _lift(v, modulus: int, bound):
    # v >= -bound; adding a multiple of the modulus keeps d(0, .) unchanged
    return v + modulus * (bound // modulus + 1)


def _sign(e):
    return 1 - 2 * e


def _check_args(q: int, m, n) -> None:
    if q < 1:
        raise RangeError(f"q must be >= 1, got {q}")
    for x in (m, n):
        if isinstance(x, int) and x < 0:
            raise RangeError(f"group law arguments must be nonnegative, got {x}")


def dihedral_law(q: int, m, n):
    """Composition in ``D_2q`` on ``[0, 2q - 1]``.

    The low radix-``q`` digit is a rotation, the high bit a reflection flag; a
    reflected left factor negates the rotation of the right factor.
    """
    _check_args(q, m, n)
    em = digit(2, 0, m // q)
    en = digit(2, 0, n // q)
    low = digit(q, 0, _lift(m + n * _sign(em), q, n))
    return low + q * digit(2, 0, em + en)


def dicyclic_law(q: int, m, n):
    """Composition in ``Q_4q`` on ``[0, 4q - 1]``: the dihedral law of order
    ``4q`` plus a twist of ``q`` when both high bits are set."""
    _check_args(q, m, n)
    mod = 2 * q
    em = digit(2, 0, m // mod)
    en = digit(2, 0, n // mod)
    low = digit(mod, 0, _lift(m + n * _sign(em) + q * em * en, mod, n))
    return low + mod * digit(2, 0, em + en)


@dataclass(frozen=True)
class MetacyclicSpec:
    """Parameters ``(q, a, c, r)`` of a metacyclic law of order ``q*a*c``.

    Construction only checks ``gcd(r, q) == 1``. The law itself is not
    associative for every such tuple, so :meth:`validate` runs the full axiom
    check on the materialized table; :func:`metacyclic_law` calls it.
    """

    q: int
    a: int
    c: int
    r: int

    def __post_init__(self):
        for name in ("q", "a", "c"):
            if getattr(self, name) < 1:
                raise InvalidSpecError(f"{name} must be >= 1, got {getattr(self, name)}")
        if gcd(self.r, self.q) != 1:
            raise InvalidSpecError(
                f"gcd(r, q) must be 1, got gcd({self.r}, {self.q}) = {gcd(self.r, self.q)}",
                axiom="gcd",
            )

    @property
    def order(self) -> int:
        return self.q * self.a * self.c

    @property
    def modulus(self) -> int:
        return self.a * self.q

    @cached_property
    def twist_powers(self) -> np.ndarray:
        """``r**e mod aq`` for ``e`` in ``[0, c-1]``, nonnegative."""
        return np.array([pow(self.r, e, self.modulus) for e in range(self.c)], dtype=np.int64)

    @cached_property
    def verdict(self):
        from .grouptools import CayleyTable, verify_group

        m = np.arange(self.order, dtype=np.int64)
        table = CayleyTable.from_values(raw_metacyclic_law(self, m[:, None], m[None, :]))
        return verify_group(table, full_limit=512)

    def validate(self) -> "MetacyclicSpec":
        v = self.verdict
        if not v.ok:
            raise InvalidSpecError(
                f"metacyclic({self.q},{self.a},{self.c},{self.r}) fails {v.axiom} "
                f"at {v.witness}",
                axiom=v.axiom,
                witness=v.witness,
            )
        return self


def raw_metacyclic_law(spec: MetacyclicSpec, m, n):
    """The metacyclic law without axiom validation."""
    _check_args(spec.q, m, n)
    q, a, c, mod = spec.q, spec.a, spec.c, spec.modulus
    hm = m // mod
    hn = n // mod
    e = digit(c, 0, hm)
    if isinstance(e, np.ndarray):
        twist = spec.twist_powers[e]
    else:
        twist = int(spec.twist_powers[e])
    inner = m + n * twist + q * digit(a, 0, hm) * digit(a, 0, hn)
    return digit(mod, 0, inner) + mod * digit(c, 0, e + digit(c, 0, hn))


def metacyclic_law(spec: MetacyclicSpec, m, n, *, check: bool = True):
    """Metacyclic composition; raises :class:`InvalidSpecError` unless the
    spec's table satisfies every group axiom (pass ``check=False`` to skip)."""
    if check:
        spec.validate()
    return raw_metacyclic_law(spec, m, n)


def quaternion_label(n: int) -> str:
    """Quaternion unit carried by element ``n`` of ``Q_8``."""
    if not 0 <= n <= 7:
        raise RangeError(f"quaternion labels cover [0, 7], got {n}")
    return QUATERNION_LABELS[n]
