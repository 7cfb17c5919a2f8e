"""Permutations of ``{0, ..., p-1}`` as radix-``p`` integer codes.

A permutation is stored as its *word* (``word[k]`` is the image of ``k``) or
as its *code* ``sum(word[k] * p**k)``. Ranks ``0 <= m < p!`` order the
permutations by the insert-and-rotate construction: stage ``k`` appends the
symbol ``k - 1`` to the stage ``k - 1`` word and rotates left by the stage
digit ``d_k(0, m // (k-1)!)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np

from .digitcore import RangeError, digit

__all__ = [
    "MAX_SYMBOLS",
    "InvalidPermutationError",
    "identity_code",
    "code_bounds",
    "word_to_code",
    "code_to_word",
    "unrank",
    "unrank_word",
    "rank",
    "rank_by_enumeration",
    "compose",
    "invert",
    "signature",
    "inversion_parity",
    "shift_law",
    "alternating_indices",
    "all_words",
    "format_word",
    "parse_word",
]

MAX_SYMBOLS = 12
MAX_ALTERNATING = 8


class InvalidPermutationError(ValueError):
    """An integer code or word that is not a bijection of ``[0, p-1]``."""


def _check_p(p: int, limit: int = MAX_SYMBOLS) -> None:
    if not 1 <= p <= limit:
        raise RangeError(f"number of symbols must lie in [1, {limit}], got {p}")


def identity_code(p: int) -> int:
    """Code of the identity, ``sum(k * p**k)`` (the largest code)."""
    _check_p(p)
    return sum(k * p**k for k in range(p))


def code_bounds(p: int) -> tuple[int, int]:
    """``(lowest, highest)`` code over all permutations of ``p`` symbols.

    Closed forms ``(p**p - p)/(p-1)**2 - 1`` and ``p**p - (p**p - p)/(p-1)**2``;
    ``p = 1`` has the single code 0.
    """
    _check_p(p)
    if p == 1:
        return 0, 0
    s = (p**p - p) // (p - 1) ** 2
    return s - 1, p**p - s


def word_to_code(p: int, word: Sequence[int]) -> int:
    word = tuple(word)
    _check_word(p, word)
    return sum(w * p**k for k, w in enumerate(word))


def code_to_word(p: int, code: int) -> tuple[int, ...]:
    _check_p(p)
    if p == 1:
        if code != 0:
            raise InvalidPermutationError(f"{code} is not a permutation code for p=1")
        return (0,)
    if not 0 <= code < p**p:
        raise InvalidPermutationError(f"{code} is not a permutation code for p={p}")
    word = tuple(digit(p, k, code) for k in range(p))
    _check_word(p, word)
    return word


def _check_word(p: int, word: tuple[int, ...]) -> None:
    _check_p(p)
    if len(word) != p or sorted(word) != list(range(p)):
        raise InvalidPermutationError(f"{word} is not a permutation of {p} symbols")


def _check_rank(p: int, m: int) -> None:
    _check_p(p)
    if not 0 <= m < factorial(p):
        raise RangeError(f"rank must lie in [0, {factorial(p) - 1}] for p={p}, got {m}")


def unrank(p: int, m: int) -> int:
    """Code of the ``m``-th permutation of ``p`` symbols.

    Builds stage by stage: the stage-``s`` seed is the stage ``s-1`` code
    re-expanded in radix ``s`` with ``s - 1`` appended as top digit, and digit
    ``k`` of stage ``s`` is seed digit ``d_s(0, rot + k)``.
    """
    _check_rank(p, m)
    code = 0  # single symbol: the trivial permutation
    for s in range(2, p + 1):
        seed = (s - 1) * s ** (s - 1) + sum(
            s**j * digit(s - 1, j, code) for j in range(s - 1)
        )
        rot = digit(s, 0, m // factorial(s - 1))
        code = sum(s**k * digit(s, digit(s, 0, rot + k), seed) for k in range(s))
    return code


def unrank_word(p: int, m: int) -> tuple[int, ...]:
    return code_to_word(p, unrank(p, m))


def rank(p: int, code: int) -> int:
    """Inverse of :func:`unrank`, by peeling off factoradic stage digits.

    At stage ``s`` the largest symbol ``s - 1`` sits at position ``k*`` and the
    rotation was ``(s - 1 - k*) mod s``; undoing it recovers stage ``s - 1``.
    """
    word = list(code_to_word(p, code))
    m = 0
    for s in range(p, 1, -1):
        pos = word.index(s - 1)
        rot = (s - 1 - pos) % s
        m += rot * factorial(s - 1)
        seed = [word[(j - rot) % s] for j in range(s)]
        word = seed[:-1]
    return m


def rank_by_enumeration(p: int, code: int) -> int:
    """``m = sum(n * [code(n) == code])`` over all ranks; factorial cost."""
    _check_p(p, 6)
    code_to_word(p, code)
    return sum(n for n in range(factorial(p)) if unrank(p, n) == code)


def compose(p: int, outer: int, inner: int) -> int:
    """Code of ``outer o inner`` (apply ``inner`` first)."""
    code_to_word(p, outer)
    code_to_word(p, inner)
    return sum(p**k * digit(p, digit(p, k, inner), outer) for k in range(p))


def invert(p: int, code: int) -> int:
    """Inverse permutation; position ``k`` collects the ``n`` with
    ``d_p(d_p(n, code), p**k) == 1``."""
    code_to_word(p, code)
    return sum(
        p**k * sum(n * digit(p, digit(p, n, code), p**k) for n in range(p))
        for k in range(p)
    )


def signature(p: int, code: int) -> int:
    """+1 for even permutations, -1 for odd, as an exact product of ratios
    ``(j - k) / (w[j] - w[k])`` over all pairs ``k < j``."""
    return _word_signature(code_to_word(p, code))


def _word_signature(word) -> int:
    p = len(word)
    sigma = Fraction(1)
    for j in range(1, p):
        for k in range(j):
            sigma *= Fraction(j - k, int(word[j] - word[k]))
    assert sigma in (1, -1)
    return int(sigma)


def inversion_parity(word: Sequence[int]) -> int:
    """Signature from the inversion count; an independent cross-check."""
    inv = sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])
    return -1 if inv % 2 else 1


def shift_law(p: int, m: int, n: int) -> int:
    """Entry ``d_p(d_p(0, m + n), code(m))`` for ``m, n`` in ``[0, p-1]``.

    Row ``m`` is the cyclic row ``m`` relabelled through permutation ``m``.
    """
    _check_p(p)
    if p < 2:
        raise RangeError("shift law needs p >= 2")
    for x in (m, n):
        if not 0 <= x < p:
            raise RangeError(f"shift law arguments must lie in [0, {p - 1}], got {x}")
    return digit(p, digit(p, 0, m + n), unrank(p, m))


@lru_cache(maxsize=None)
def _all_words(p: int) -> np.ndarray:
    return np.array([unrank_word(p, m) for m in range(factorial(p))], dtype=np.int64)


def all_words(p: int) -> np.ndarray:
    """``(p!, p)`` array; row ``m`` is the word of rank ``m``."""
    _check_p(p, 8)
    return _all_words(p)


def alternating_indices(p: int) -> list[int]:
    """Ascending ranks of the even permutations of ``p`` symbols."""
    if not 2 <= p <= MAX_ALTERNATING:
        raise RangeError(f"alternating enumeration covers 2 <= p <= {MAX_ALTERNATING}, got {p}")
    return [m for m, w in enumerate(all_words(p)) if _word_signature(w) == 1]


def format_word(word: Sequence[int]) -> str:
    if len(word) <= 10:
        return "".join(str(int(w)) for w in word)
    return ",".join(str(int(w)) for w in word)


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(t) for t in text.split(","))
    return tuple(int(ch) for ch in text)
