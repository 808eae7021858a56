"""Finite semigroups given by multiplication tables.

Elements are the dense indices ``0..n-1``; labels are only for display.
Row index is the left factor: ``table[a][b] == a*b``.  Subsets of a
semigroup (ideals, classes, subsemigroups) are plain ``frozenset`` objects
of element indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .errors import (
    BadIdentity,
    BadZero,
    EmptyGenerators,
    NonAssociative,
    NotASubsemigroup,
    ShapeMismatch,
    SizeLimit,
)

MAX_SIZE = 4096

ElementSet = frozenset


@dataclass(frozen=True)
class Verdict:
    """A yes/no answer together with the evidence for it."""

    ok: bool
    witness: Any = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    zero: int | None = None
    identity: int | None = None

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self) -> int:
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return (self.table == other.table and self.labels == other.labels
                and self.zero == other.zero and self.identity == other.identity)

    def __hash__(self):
        return hash((self.table, self.labels, self.zero, self.identity))

    def __repr__(self):
        return f"FiniteSemigroup(size={self.size}, labels={list(self.labels)!r})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.table, dtype=np.int32).reshape(self.size, self.size)
        arr.setflags(write=False)
        return arr

    @cached_property
    def _index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label: str) -> int:
        return self._index[label]

    def elements(self, *labels: str) -> frozenset:
        return frozenset(self.index(lab) for lab in labels)

    def show(self, xs: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in sorted(xs)]

    @property
    def all(self) -> frozenset:
        return frozenset(range(self.size))

    def opposite(self) -> "FiniteSemigroup":
        """The semigroup with reversed multiplication (turns left into right)."""
        n = self.size
        table = tuple(tuple(self.table[b][a] for b in range(n)) for a in range(n))
        return FiniteSemigroup(table, self.labels, self.zero, self.identity)

    def restrict(self, elements: Iterable[int]) -> tuple["FiniteSemigroup", list[int]]:
        """The subsemigroup on ``elements``; returns it with the new->old index map."""
        old = sorted(set(elements))
        if not old:
            raise EmptyGenerators("cannot restrict to an empty set")
        new = {x: i for i, x in enumerate(old)}
        rows = []
        for a in old:
            row = []
            for b in old:
                c = self.table[a][b]
                if c not in new:
                    raise NotASubsemigroup((a, b))
                row.append(new[c])
            rows.append(tuple(row))
        return from_table([self.labels[x] for x in old], rows), old


def _find_zero(table) -> int | None:
    n = len(table)
    # a zero, if any, is the product of everything with everything
    p = 0
    for x in range(n):
        p = table[p][x]
    for x in range(n):
        if table[p][x] != p or table[x][p] != p:
            return None
    return p


def _find_identity(table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            return e
    return None


def associativity_witness(table) -> tuple[int, int, int] | None:
    """Least ``(i, j, k)`` with ``(ij)k != i(jk)``, or None."""
    t = np.asarray(table, dtype=np.int32)
    n = t.shape[0]
    chunk = max(1, (1 << 22) // max(1, n * n))
    for start in range(0, n, chunk):
        rows = t[start:start + chunk]
        lhs = t[rows]                      # [i, j, k] -> (ij)k
        rhs = np.take(rows, t, axis=1)     # [i, j, k] -> i(jk)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            return int(i) + start, int(j), int(k)
    return None


def from_table(labels: Sequence[str], table, zero: int | None = None,
               identity: int | None = None) -> FiniteSemigroup:
    """Validate a multiplication table and wrap it.

    A zero or identity that is not given explicitly is detected from the
    table; one that is given is checked.
    """
    rows = [tuple(int(x) for x in row) for row in table]
    n = len(rows)
    if n == 0:
        raise ShapeMismatch("empty table")
    if n > MAX_SIZE:
        raise SizeLimit(f"{n} elements exceeds the limit of {MAX_SIZE}")
    if any(len(row) != n for row in rows):
        raise ShapeMismatch("table is not square")
    if len(labels) != n:
        raise ShapeMismatch(f"{len(labels)} labels for {n} elements")
    labels = tuple(str(lab) for lab in labels)
    if len(set(labels)) != n:
        raise ShapeMismatch("labels are not distinct")
    if any(not 0 <= x < n for row in rows for x in row):
        raise ShapeMismatch("table entry out of range")
    table = tuple(rows)
    bad = associativity_witness(table)
    if bad is not None:
        raise NonAssociative(*bad)
    if zero is None:
        zero = _find_zero(table)
    elif not all(table[zero][x] == zero == table[x][zero] for x in range(n)):
        raise BadZero(zero)
    if identity is None:
        identity = _find_identity(table)
    elif not all(table[identity][x] == x == table[x][identity] for x in range(n)):
        raise BadIdentity(identity)
    return FiniteSemigroup(table, labels, zero, identity)


def _fresh_label(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    label = base
    while label in taken:
        label += "'"
    return label


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    if S.identity is not None:
        return S
    n = S.size
    rows = [list(row) + [a] for a, row in enumerate(S.table)]
    rows.append(list(range(n + 1)))
    labels = list(S.labels) + [_fresh_label("1", S.labels)]
    return from_table(labels, rows, identity=n)


def adjoin_zero(S: FiniteSemigroup) -> FiniteSemigroup:
    if S.zero is not None:
        return S
    n = S.size
    rows = [list(row) + [n] for row in S.table]
    rows.append([n] * (n + 1))
    labels = list(S.labels) + [_fresh_label("0", S.labels)]
    return from_table(labels, rows, zero=n)


def product_set(S: FiniteSemigroup, X: Iterable[int], Y: Iterable[int]) -> frozenset:
    X, Y = sorted(X), sorted(Y)
    if not X or not Y:
        return frozenset()
    block = S.array[np.ix_(X, Y)]
    return frozenset(np.unique(block).tolist())


def closure(S: FiniteSemigroup, X: Iterable[int]) -> frozenset:
    """The subsemigroup generated by ``X``."""
    gens = sorted(set(X))
    if not gens:
        raise EmptyGenerators("closure of an empty set")
    seen = set(gens)
    frontier = list(gens)
    t = S.table
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def is_subsemigroup(S: FiniteSemigroup, X: Iterable[int]) -> Verdict:
    X = sorted(set(X))
    members = set(X)
    for a in X:
        for b in X:
            if S.table[a][b] not in members:
                return Verdict(False, (a, b))
    return Verdict(True)


def _compose_right(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    # point . (f g) = g(f(point))
    return tuple(g[x] for x in f)


def _map_label(f: tuple[int, ...]) -> str:
    if len(f) <= 9:
        return "".join(str(x + 1) for x in f)
    return "[" + " ".join(str(x + 1) for x in f) + "]"


def from_transformations(k: int, maps: Sequence[Sequence[int] | Callable[[int], int]],
                         max_size: int = MAX_SIZE) -> FiniteSemigroup:
    """Semigroup generated by transformations of ``{0..k-1}``.

    Maps act on the right: the product ``f*g`` sends ``x`` to ``g(f(x))``.
    Each map is a sequence of images or a callable.  Element order is the
    breadth-first discovery order starting from the generators.
    """
    if not maps:
        raise EmptyGenerators("no generating maps")
    gens = []
    for m in maps:
        images = tuple(int(m(x)) for x in range(k)) if callable(m) else tuple(int(x) for x in m)
        if len(images) != k or any(not 0 <= x < k for x in images):
            raise ShapeMismatch(f"map {images} is not a total map on {k} points")
        if images not in gens:
            gens.append(images)
    elements = list(gens)
    index = {f: i for i, f in enumerate(elements)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = _compose_right(f, g)
                if h not in index:
                    index[h] = len(elements)
                    elements.append(h)
                    nxt.append(h)
                    if len(elements) > max_size:
                        raise SizeLimit(f"transformation semigroup exceeds {max_size} elements")
        frontier = nxt
    table = [[index[_compose_right(f, g)] for g in elements] for f in elements]
    return from_table([_map_label(f) for f in elements], table)


def idempotents(S: FiniteSemigroup) -> frozenset:
    return frozenset(e for e in range(S.size) if S.table[e][e] == e)


def is_regular(S: FiniteSemigroup) -> Verdict:
    """Every ``a`` has some ``b`` with ``aba = a``.

    On success the witness maps each element to its least such ``b``; on
    failure it is the least non-regular element.
    """
    t = S.table
    witnesses = {}
    for a in range(S.size):
        for b in range(S.size):
            if t[t[a][b]][a] == a:
                witnesses[a] = b
                break
        else:
            return Verdict(False, a)
    return Verdict(True, witnesses)


def is_regular_element(S: FiniteSemigroup, a: int, within: Iterable[int] | None = None) -> bool:
    t = S.table
    pool = range(S.size) if within is None else within
    return any(t[t[a][b]][a] == a for b in pool)


def has_local_right_identity(S: FiniteSemigroup, a: int) -> bool:
    return a in S.table[a]


def is_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup, phi: Sequence[int]) -> bool:
    """Check that ``phi`` (indices of S -> indices of T) is an isomorphism."""
    if S.size != T.size or sorted(phi) != list(range(T.size)):
        return False
    return all(phi[S.table[a][b]] == T.table[phi[a]][phi[b]]
               for a in range(S.size) for b in range(S.size))
