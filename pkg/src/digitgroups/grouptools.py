"""Cayley tables: materialization, axiom checks, isomorphism search, analysis.

A :class:`CayleyTable` stores entries as *indices* into its element list.
``elements[i]`` is the integer the family law uses for index ``i`` (a residue,
a permutation code, ...), and ``values`` keeps the raw law output, so a
product that leaves the element set (``-1`` index) is still reportable.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Sequence

import numpy as np

from . import permutations as perms
from .abelian import DirectSumSpec, cyclic_law, direct_sum_law, mult_mod_law
from .digitcore import RangeError
from .nonabelian import (
    QUATERNION_LABELS,
    MetacyclicSpec,
    dicyclic_law,
    dihedral_law,
    metacyclic_law,
    raw_metacyclic_law,
)

__all__ = [
    "MAX_ORDER",
    "MAX_ISO_ORDER",
    "GroupSpec",
    "SpecParseError",
    "CayleyTable",
    "Verdict",
    "Report",
    "build_table",
    "verify_group",
    "is_abelian",
    "find_isomorphism",
    "analyze",
    "row_identities_hold",
]

MAX_ORDER = 10080
MAX_ISO_ORDER = 24
FULL_ASSOCIATIVITY_LIMIT = 64
ASSOCIATIVITY_SAMPLES = 10**6

FAMILIES = ("cyclic", "dsum", "multmod", "dihedral", "dicyclic", "metacyclic", "sym", "alt")


class SpecParseError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """A group family tag plus its integer parameters.

    Parameters per family: ``cyclic (p,)``, ``dsum (p0, p1, ...)``,
    ``multmod (p,)``, ``dihedral (q,)``, ``dicyclic (q,)``,
    ``metacyclic (q, a, c, r)``, ``sym (p,)``, ``alt (p,)``.
    """

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecParseError(f"unknown group family {self.family!r}")
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        n = len(self.params)
        if self.family == "metacyclic" and n != 4:
            raise SpecParseError("metacyclic needs q, a, c, r")
        if self.family == "dsum" and n < 1:
            raise SpecParseError("dsum needs at least one radix")
        if self.family not in ("metacyclic", "dsum") and n != 1:
            raise SpecParseError(f"{self.family} takes exactly one parameter")
        lo = {"cyclic": 2, "multmod": 2, "dihedral": 1, "dicyclic": 1, "sym": 1, "alt": 2}
        if self.family in lo and self.params[0] < lo[self.family]:
            raise SpecParseError(
                f"{self.family} parameter must be >= {lo[self.family]}, got {self.params[0]}"
            )
        if self.family == "dsum" and any(r < 1 for r in self.params):
            raise SpecParseError("dsum radices must be >= 1")

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        """Parse ``family:args``, e.g. ``dsum:2,6`` or ``metacyclic:q=8,a=1,c=2,r=5``."""
        family, sep, args = text.strip().partition(":")
        family = family.strip().lower()
        if not sep or not args.strip():
            raise SpecParseError(f"expected '<family>:<params>', got {text!r}")
        try:
            if family == "metacyclic":
                kv = {}
                for item in args.split(","):
                    key, eq, val = item.partition("=")
                    if not eq:
                        raise SpecParseError(f"metacyclic expects key=value pairs, got {item!r}")
                    kv[key.strip()] = int(val)
                if sorted(kv) != ["a", "c", "q", "r"]:
                    raise SpecParseError("metacyclic needs exactly q, a, c, r")
                params = (kv["q"], kv["a"], kv["c"], kv["r"])
            else:
                params = tuple(int(v) for v in args.split(","))
        except ValueError as exc:
            if isinstance(exc, SpecParseError):
                raise
            raise SpecParseError(f"bad parameters in {text!r}: {exc}") from None
        return cls(family, params)

    def __str__(self) -> str:
        if self.family == "metacyclic":
            q, a, c, r = self.params
            return f"metacyclic:q={q},a={a},c={c},r={r}"
        return f"{self.family}:" + ",".join(map(str, self.params))

    def order(self) -> int:
        f, ps = self.family, self.params
        if f == "cyclic":
            return ps[0]
        if f == "dsum":
            return prod(ps)
        if f == "multmod":
            return ps[0] - 1
        if f == "dihedral":
            return 2 * ps[0]
        if f == "dicyclic":
            return 4 * ps[0]
        if f == "metacyclic":
            return ps[0] * ps[1] * ps[2]
        if f == "sym":
            return factorial(ps[0])
        return factorial(ps[0]) // 2


@dataclass(frozen=True, eq=False)
class CayleyTable:
    entries: np.ndarray
    elements: tuple[int, ...]
    values: np.ndarray
    labels: tuple[str, ...] | None = None
    name: str = ""

    @classmethod
    def from_values(cls, values, elements: Sequence[int] | None = None,
                    labels: Sequence[str] | None = None, name: str = "") -> "CayleyTable":
        """Index a square array of law outputs against ``elements``
        (default ``0..p-1``); outputs outside the set get index ``-1``."""
        values = np.asarray(values, dtype=np.int64)
        if values.ndim != 2 or values.shape[0] != values.shape[1]:
            raise ValueError(f"a Cayley table must be square, got shape {values.shape}")
        p = values.shape[0]
        if elements is None:
            elements = range(p)
        elems = np.asarray(list(elements), dtype=np.int64)
        if len(elems) != p:
            raise ValueError("one element per row is required")
        if len(np.unique(elems)) != p:
            raise ValueError("element values must be distinct")
        order = np.argsort(elems, kind="stable")
        sorted_elems = elems[order]
        pos = np.clip(np.searchsorted(sorted_elems, values), 0, p - 1)
        entries = np.where(sorted_elems[pos] == values, order[pos], -1)
        entries.setflags(write=False)
        values.setflags(write=False)
        return cls(entries, tuple(int(e) for e in elems), values,
                   tuple(labels) if labels is not None else None, name)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def label(self, i: int) -> str:
        if self.labels is not None:
            return self.labels[i]
        return str(self.elements[i])

    def __len__(self) -> int:
        return self.order


@dataclass(frozen=True)
class Verdict:
    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] | None = None
    seed: int | None = None
    sampled: bool = False

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            extra = f" (associativity sampled, seed {self.seed})" if self.sampled else ""
            return "pass" + extra
        return f"fail({self.axiom}, witness {self.witness})"


@dataclass(frozen=True)
class Report:
    identity: int
    orders: tuple[int, ...]
    center: tuple[int, ...]
    abelian: bool = field(default=False)


# -- materialization ---------------------------------------------------------

def _grid(p: int):
    m = np.arange(p, dtype=np.int64)
    return m[:, None], m[None, :]


def _check_order(spec: GroupSpec) -> int:
    p = spec.order()
    if p > MAX_ORDER:
        raise RangeError(f"{spec} has order {p}, above the cap of {MAX_ORDER}")
    return p


def _perm_table(words: np.ndarray, p: int, name: str) -> CayleyTable:
    """Compose every pair of the given words (row is outer, column inner)."""
    powers = p ** np.arange(p, dtype=np.int64)
    codes = words @ powers
    values = np.empty((len(words), len(words)), dtype=np.int64)
    for i, outer in enumerate(words):
        values[i] = outer[words] @ powers
    labels = [perms.format_word(w) for w in words]
    return CayleyTable.from_values(values, codes, labels, name)


def build_table(spec: GroupSpec | str, *, check: bool = True) -> CayleyTable:
    """Evaluate the family law over every pair of elements.

    Metacyclic specs are axiom-checked first unless ``check`` is false.
    """
    if isinstance(spec, str):
        spec = GroupSpec.parse(spec)
    p = _check_order(spec)
    f, ps = spec.family, spec.params
    name = str(spec)
    if f == "cyclic":
        return CayleyTable.from_values(cyclic_law(ps[0], *_grid(p)), name=name)
    if f == "dsum":
        return CayleyTable.from_values(direct_sum_law(DirectSumSpec(ps), *_grid(p)), name=name)
    if f == "multmod":
        m = np.arange(1, ps[0], dtype=np.int64)
        values = mult_mod_law(ps[0], m[:, None], m[None, :])
        return CayleyTable.from_values(values, m, name=name)
    if f == "dihedral":
        return CayleyTable.from_values(dihedral_law(ps[0], *_grid(p)), name=name)
    if f == "dicyclic":
        labels = QUATERNION_LABELS if ps[0] == 2 else None
        return CayleyTable.from_values(dicyclic_law(ps[0], *_grid(p)), labels=labels, name=name)
    if f == "metacyclic":
        mspec = MetacyclicSpec(*ps)
        law = metacyclic_law if check else raw_metacyclic_law
        return CayleyTable.from_values(law(mspec, *_grid(p)), name=name)
    if f == "sym":
        return _perm_table(perms.all_words(ps[0]), ps[0], name)
    words = perms.all_words(ps[0])[perms.alternating_indices(ps[0])]
    return _perm_table(words, ps[0], name)


# -- verification --------------------------------------------------------------

def _identity_index(t: np.ndarray) -> int | None:
    p = t.shape[0]
    ar = np.arange(p)
    for e in range(p):
        if (t[e] == ar).all() and (t[:, e] == ar).all():
            return e
    return None


def verify_group(table: CayleyTable, *, seed: int = 0,
                 full_limit: int = FULL_ASSOCIATIVITY_LIMIT,
                 samples: int = ASSOCIATIVITY_SAMPLES) -> Verdict:
    """Check closure, identity, inverses, the latin property and associativity.

    Associativity is exhaustive up to order ``full_limit`` and checked on
    ``samples`` seeded uniform triples above. Witnesses are element values
    (``table.elements``), the first failure in row-major order.
    """
    t = table.entries
    p = table.order
    el = table.elements

    def w(*idx):
        return tuple(el[i] for i in idx)

    bad = np.argwhere(t < 0)
    if len(bad):
        i, j = bad[0]
        return Verdict(False, "closure", w(i, j))
    e = _identity_index(t)
    if e is None:
        return Verdict(False, "identity", None)
    for x in range(p):
        if not ((t[x] == e) & (t[:, x] == e)).any():
            return Verdict(False, "inverse", w(x))
    full = np.arange(p)
    for x in range(p):
        if not (np.sort(t[x]) == full).all():
            return Verdict(False, "latin-row", w(x))
        if not (np.sort(t[:, x]) == full).all():
            return Verdict(False, "latin-column", w(x))
    if p <= full_limit:
        for a in range(p):
            # (a*b)*c against a*(b*c) over all (b, c)
            diff = t[t[a]] != t[a][t]
            if diff.any():
                b, c = np.argwhere(diff)[0]
                return Verdict(False, "associativity", w(a, b, c))
        return Verdict(True)
    rng = np.random.default_rng(seed)
    chunk = 100_000
    done = 0
    while done < samples:
        n = min(chunk, samples - done)
        a, b, c = rng.integers(0, p, size=(3, n))
        diff = t[t[a, b], c] != t[a, t[b, c]]
        if diff.any():
            k = int(np.argmax(diff))
            return Verdict(False, "associativity", w(a[k], b[k], c[k]), seed, True)
        done += n
    return Verdict(True, seed=seed, sampled=True)


def is_abelian(table: CayleyTable) -> bool:
    return bool((table.entries == table.entries.T).all())


def row_identities_hold(table: CayleyTable) -> bool:
    """Every row sums to ``p(p-1)/2`` and its nonzero entries multiply to ``(p-1)!``."""
    p = table.order
    target_sum = p * (p - 1) // 2
    target_prod = factorial(p - 1)
    for row in table.entries.tolist():
        if sum(row) != target_sum or prod(v for v in row if v) != target_prod:
            return False
    return True


# -- structure -----------------------------------------------------------------

def _orders(t: np.ndarray, e: int) -> list[int]:
    out = []
    for x in range(t.shape[0]):
        k, y = 1, x
        while y != e:
            y = t[y, x]
            k += 1
        out.append(k)
    return out


def analyze(table: CayleyTable) -> Report:
    """Identity, element orders and center (all as indices)."""
    t = table.entries
    e = _identity_index(t)
    if e is None:
        raise ValueError("table has no identity element")
    center = tuple(int(x) for x in range(table.order) if (t[x] == t[:, x]).all())
    return Report(e, tuple(_orders(t, e)), center, is_abelian(table))


def find_isomorphism(a: CayleyTable, b: CayleyTable) -> dict[int, int] | None:
    """Backtracking search for ``phi`` with ``phi(x*y) = phi(x)*phi(y)``.

    Both tables must be groups of order at most 24. Candidates are pruned by
    element order and every assignment is closed under products before
    branching further. Returns an index map or ``None``.
    """
    if a.order > MAX_ISO_ORDER or b.order > MAX_ISO_ORDER:
        raise RangeError(f"isomorphism search is capped at order {MAX_ISO_ORDER}")
    if a.order != b.order:
        return None
    ta, tb = a.entries, b.entries
    ea, eb = _identity_index(ta), _identity_index(tb)
    if ea is None or eb is None:
        raise ValueError("both tables need an identity element")
    oa, ob = _orders(ta, ea), _orders(tb, eb)
    if Counter(oa) != Counter(ob):
        return None
    n = a.order

    def close(phi: dict[int, int], used: set[int]) -> bool:
        # extend phi over products of mapped elements; False on conflict
        changed = True
        while changed:
            changed = False
            keys = list(phi)
            for x in keys:
                for y in keys:
                    xy, img = int(ta[x, y]), int(tb[phi[x], phi[y]])
                    if xy in phi:
                        if phi[xy] != img:
                            return False
                    else:
                        if img in used or oa[xy] != ob[img]:
                            return False
                        phi[xy] = img
                        used.add(img)
                        changed = True
        return True

    def search(phi: dict[int, int], used: set[int]):
        if len(phi) == n:
            return phi
        x = next(i for i in range(n) if i not in phi)
        for y in range(n):
            if y in used or ob[y] != oa[x]:
                continue
            trial, tused = dict(phi), set(used)
            trial[x] = y
            tused.add(y)
            if close(trial, tused):
                found = search(trial, tused)
                if found is not None:
                    return found
        return None

    phi = {ea: eb}
    return search(phi, {eb})

