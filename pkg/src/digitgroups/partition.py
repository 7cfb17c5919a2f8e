"""Split a nonnegative integer into parts that sum back to it exactly.

Digit ``k`` of ``x`` (weighted by ``eta**k``) is sent to every part ``n`` with
multiplicity ``g(k mod lam, n)``, where ``g`` is a ``lam x lam`` latin square,
and all parts are scaled by ``2 / (lam (lam - 1))``. Each latin row sums to
``lam (lam - 1) / 2``, which is exactly what makes the parts add up to ``x``.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .digitcore import RangeError, digit, ilog

__all__ = ["PartitionError", "partition_parts", "is_latin_square", "PARTITION_LIMIT"]

PARTITION_LIMIT = 2**48


class PartitionError(ValueError):
    pass


def is_latin_square(square) -> bool:
    a = np.asarray(square)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    full = np.arange(a.shape[0])
    return all((np.sort(a[i]) == full).all() and (np.sort(a[:, i]) == full).all()
               for i in range(a.shape[0]))


def partition_parts(eta: int, table, x: int) -> list[Fraction]:
    """Return the ``lam`` exact rational parts of ``x``.

    ``table`` is a :class:`~digitgroups.grouptools.CayleyTable` or any square
    integer array holding a latin square on ``0..lam-1``.
    """
    g = np.asarray(getattr(table, "entries", table))
    if eta < 2:
        raise RangeError(f"eta must be >= 2, got {eta}")
    if not 0 <= x < PARTITION_LIMIT:
        raise RangeError(f"x must lie in [0, 2**48), got {x}")
    if not is_latin_square(g):
        raise PartitionError("partition identity requires latin square")
    lam = g.shape[0]
    if lam < 2:
        raise PartitionError("partition needs at least two parts")
    sums = [0] * lam
    if x:
        for k in range(ilog(eta, x) + 1):
            weight = eta**k * digit(eta, k, x)
            if weight:
                row = g[k % lam]
                for n in range(lam):
                    sums[n] += weight * int(row[n])
    scale = Fraction(2, lam * (lam - 1))
    return [scale * s for s in sums]
