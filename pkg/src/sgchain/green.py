"""Green's relations on finite semigroups and small-poset utilities."""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteSemigroup
from .errors import EmptySubset, SemigroupError

BRANCH_AND_BOUND_LIMIT = 24


@dataclass(frozen=True, eq=False)
class Poset:
    """A finite partial order stored as a dense boolean matrix ``leq[i, j]``."""

    n: int
    leq: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.leq, dtype=bool)
        if m.shape != (self.n, self.n):
            raise SemigroupError("order matrix has the wrong shape")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "leq", m)

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Poset":
        """Reflexive-transitive closure of ``pairs`` (by iterated squaring)."""
        m = np.eye(n, dtype=bool)
        for i, j in pairs:
            m[i, j] = True
        while True:
            nxt = (m.astype(np.int32) @ m.astype(np.int32)) > 0
            if np.array_equal(nxt, m):
                break
            m = nxt
        poset = cls(n, m)
        if not poset.is_partial_order():
            raise SemigroupError("relation is not antisymmetric")
        return poset

    def is_partial_order(self) -> bool:
        m = self.leq
        if not m.diagonal().all():
            return False
        if (m & m.T & ~np.eye(self.n, dtype=bool)).any():
            return False
        mi = m.astype(np.int32)
        return bool(np.array_equal((mi @ mi) > 0, m))

    def less(self, i: int, j: int) -> bool:
        return i != j and bool(self.leq[i, j])

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.leq[i, j] or self.leq[j, i])

    def is_antichain(self, xs: Iterable[int]) -> bool:
        xs = list(xs)
        return all(not self.comparable(a, b) for a, b in combinations(xs, 2))

    def height(self) -> int:
        """Number of elements in a longest chain."""
        if self.n == 0:
            return 0
        order = sorted(range(self.n), key=lambda i: int(self.leq[:, i].sum()))
        best = [1] * self.n
        for j in order:
            for i in range(self.n):
                if self.less(i, j):
                    best[j] = max(best[j], best[i] + 1)
        return max(best)

    def is_isomorphic_via(self, other: "Poset", phi: Sequence[int]) -> bool:
        if self.n != other.n or sorted(phi) != list(range(other.n)):
            return False
        idx = np.asarray(phi, dtype=int)
        return bool(np.array_equal(self.leq, other.leq[np.ix_(idx, idx)]))


def maximal_elements(P: Poset, subset: Iterable[int]) -> frozenset:
    subset = sorted(set(subset))
    if not subset:
        raise EmptySubset("maximal elements of an empty set")
    return frozenset(i for i in subset if not any(P.less(i, j) for j in subset))


def _width_branch_and_bound(P: Poset, candidates: list[int]) -> int:
    """Exact width of the subposet on ``candidates`` (max clique of incomparability)."""
    inc = {i: {j for j in candidates if j != i and not P.comparable(i, j)} for i in candidates}
    best = 0

    def expand(size: int, pool: list[int]) -> None:
        nonlocal best
        if size > best:
            best = size
        for idx, v in enumerate(pool):
            if size + len(pool) - idx <= best:
                return
            expand(size + 1, [u for u in pool[idx + 1:] if u in inc[v]])

    expand(0, sorted(candidates, key=lambda v: -len(inc[v])))
    return best


def _width_matching(P: Poset, candidates: list[int]) -> int:
    """Exact width via Dilworth: n minus a maximum matching of the strict order."""
    succ = {i: [j for j in candidates if P.less(i, j)] for i in candidates}
    match_right: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in succ[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in match_right or augment(match_right[v], seen):
                match_right[v] = u
                return True
        return False

    matched = sum(1 for u in candidates if augment(u, set()))
    return len(candidates) - matched


def width(P: Poset, candidates: Iterable[int] | None = None) -> int:
    cands = sorted(range(P.n) if candidates is None else set(candidates))
    if not cands:
        return 0
    if len(cands) <= BRANCH_AND_BOUND_LIMIT:
        return _width_branch_and_bound(P, cands)
    return _width_matching(P, cands)


def maximum_antichain(P: Poset) -> frozenset:
    """A maximum antichain; the lexicographically least one among all maxima."""
    if P.n == 0:
        return frozenset()
    target = width(P)
    chosen: list[int] = []
    pool = list(range(P.n))
    while len(chosen) < target:
        for v in pool:
            rest = [u for u in pool if u > v and not P.comparable(u, v)]
            if 1 + width(P, rest) >= target - len(chosen):
                chosen.append(v)
                pool = rest
                break
        else:  # pragma: no cover - width guarantees a feasible choice
            raise SemigroupError("antichain search lost feasibility")
    return frozenset(chosen)


def _partition(keys: Sequence) -> tuple[tuple[frozenset, ...], list[int]]:
    """Group indices by key; classes ordered by least member."""
    where: dict = {}
    classes: list[list[int]] = []
    of = []
    for i, k in enumerate(keys):
        if k not in where:
            where[k] = len(classes)
            classes.append([])
        classes[where[k]].append(i)
        of.append(where[k])
    return tuple(frozenset(c) for c in classes), of


def _bits(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True, eq=False)
class GreenStructure:
    semigroup: FiniteSemigroup
    R: tuple[frozenset, ...]
    L: tuple[frozenset, ...]
    J: tuple[frozenset, ...]
    H: tuple[frozenset, ...]
    D: tuple[frozenset, ...]
    r_poset: Poset
    r_of: tuple[int, ...]
    l_of: tuple[int, ...]
    j_of: tuple[int, ...]
    h_of: tuple[int, ...]
    d_of: tuple[int, ...]
    right_masks: tuple[int, ...]
    left_masks: tuple[int, ...]
    two_sided_masks: tuple[int, ...]

    def right_ideal(self, a: int) -> frozenset:
        return _bits(self.right_masks[a])

    def left_ideal(self, a: int) -> frozenset:
        return _bits(self.left_masks[a])

    def ideal(self, a: int) -> frozenset:
        return _bits(self.two_sided_masks[a])

    def r_class(self, a: int) -> frozenset:
        return self.R[self.r_of[a]]

    @cached_property
    def l_poset(self) -> Poset:
        reps = [min(c) for c in self.L]
        m = np.array([[bool(self.left_masks[b] >> a & 1) for b in reps] for a in reps],
                     dtype=bool).reshape(len(reps), len(reps))
        return Poset(len(reps), m)

    @cached_property
    def j_poset(self) -> Poset:
        reps = [min(c) for c in self.J]
        m = np.array([[bool(self.two_sided_masks[b] >> a & 1) for b in reps] for a in reps],
                     dtype=bool).reshape(len(reps), len(reps))
        return Poset(len(reps), m)


def compute_green(S: FiniteSemigroup) -> GreenStructure:
    n = S.size
    t = S.table
    one = [1 << i for i in range(n)]
    right = []
    for a in range(n):
        m = one[a]
        for c in t[a]:
            m |= one[c]
        right.append(m)
    left = []
    for a in range(n):
        m = one[a]
        for s in range(n):
            m |= one[t[s][a]]
        left.append(m)
    two = []
    for a in range(n):
        m = 0
        r = right[a]
        x = 0
        while r:
            if r & 1:
                m |= left[x]
            r >>= 1
            x += 1
        two.append(m)

    R, r_of = _partition(right)
    L, l_of = _partition(left)
    J, j_of = _partition(two)
    H, h_of = _partition(list(zip(r_of, l_of)))

    # D is the join of R and L (union-find over both partitions)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for classes in (R, L):
        for c in classes:
            members = sorted(c)
            for x in members[1:]:
                ra, rb = find(members[0]), find(x)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    D, d_of = _partition([find(x) for x in range(n)])

    reps = [min(c) for c in R]
    k = len(reps)
    leq = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            leq[i, j] = bool(right[b] >> a & 1)
    return GreenStructure(S, R, L, J, H, D, Poset(k, leq), tuple(r_of), tuple(l_of),
                          tuple(j_of), tuple(h_of), tuple(d_of), tuple(right),
                          tuple(left), tuple(two))


_CACHE: "weakref.WeakKeyDictionary[FiniteSemigroup, GreenStructure]" = weakref.WeakKeyDictionary()


def green_of(S: FiniteSemigroup) -> GreenStructure:
    """Memoised ``compute_green``; semigroups are immutable so this is safe."""
    g = _CACHE.get(S)
    if g is None or g.semigroup is not S:
        g = compute_green(S)
        _CACHE[S] = g
    return g


def down_sets(P: Poset, limit: int = 1 << 20):
    """Yield every non-empty down-closed subset of ``P`` as a frozenset of indices."""
    order = sorted(range(P.n), key=lambda i: int(P.leq[:, i].sum()))
    below = [frozenset(j for j in range(P.n) if P.leq[j, i]) for i in range(P.n)]
    count = 0

    def rec(pos: int, current: frozenset):
        nonlocal count
        if pos == len(order):
            if current:
                count += 1
                if count > limit:
                    raise SemigroupError("too many down-sets")
                yield current
            return
        v = order[pos]
        yield from rec(pos + 1, current)
        if below[v] - {v} <= current:
            yield from rec(pos + 1, current | {v})

    yield from rec(0, frozenset())
