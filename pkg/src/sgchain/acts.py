"""Finite right acts of a finite semigroup.

An act zero is a point fixed by every element (``0 s = 0``).  It is optional
and independent of any zero the semigroup may have.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import FiniteSemigroup, _fresh_label
from .errors import EmptyGenerators, NotAnAction, NotASubact, NoZero, SemigroupError, ShapeMismatch, TooLarge
from .green import Poset, _partition, down_sets

SUBACT_LIMIT = 20


@dataclass(frozen=True, eq=False)
class Act:
    over: FiniteSemigroup
    action: tuple[tuple[int, ...], ...]   # action[a][s] == a.s
    labels: tuple[str, ...]
    zero: int | None = None

    @property
    def size(self) -> int:
        return len(self.action)

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    def __eq__(self, other):
        if not isinstance(other, Act):
            return NotImplemented
        return (self.over == other.over and self.action == other.action
                and self.labels == other.labels and self.zero == other.zero)

    def __hash__(self):
        return hash((self.action, self.labels, self.zero))

    def __repr__(self):
        return f"Act(size={self.size}, over={self.over!r})"


def act_from_table(S: FiniteSemigroup, action, zero: int | None = None,
                   labels: Sequence[str] | None = None) -> Act:
    rows = tuple(tuple(int(x) for x in row) for row in action)
    m = len(rows)
    if m == 0:
        raise ShapeMismatch("an act is non-empty")
    if any(len(row) != S.size for row in rows):
        raise ShapeMismatch("action table needs one column per semigroup element")
    if any(not 0 <= x < m for row in rows for x in row):
        raise ShapeMismatch("action entry out of range")
    labels = tuple(str(i + 1) for i in range(m)) if labels is None else tuple(labels)
    if len(labels) != m or len(set(labels)) != m:
        raise ShapeMismatch("act labels must be distinct, one per point")
    arr = np.array(rows, dtype=np.int32)
    st = S.array
    # a(st) against (as)t, vectorised over (a, s, t)
    lhs = arr[:, st]                    # [a, s, t] -> a.(st)
    rhs = arr[arr]                      # [a, s, t] -> (a.s).t
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, s, t = (int(x) for x in bad[0])
        raise NotAnAction(a, s, t)
    if zero is not None and any(x != zero for x in rows[zero]):
        raise SemigroupError(f"point {zero} is not fixed by the action")
    return Act(S, rows, labels, zero)


def regular_act(S: FiniteSemigroup) -> Act:
    """``S`` acting on itself by right multiplication."""
    return Act(S, S.table, S.labels)


def point_act(S: FiniteSemigroup) -> Act:
    return Act(S, ((0,) * S.size,), ("*",))


def generated_subact(A: Act, X: Iterable[int]) -> frozenset:
    X = frozenset(X)
    if not X:
        raise EmptyGenerators("no generators")
    return X.union(*(A.action[x] for x in X))


def is_subact(A: Act, B: Iterable[int]) -> bool:
    B = frozenset(B)
    return bool(B) and all(y in B for b in B for y in A.action[b])


def act_rees_quotient(A: Act, B: Iterable[int]) -> tuple[Act, tuple[int, ...]]:
    """``A/B``: survivors in order, then the new zero.  Returns the act and the
    quotient map on points."""
    B = frozenset(B)
    if not B:
        raise NotASubact(None)
    for b in sorted(B):
        for s in range(A.over.size):
            if A.action[b][s] not in B:
                raise NotASubact((b, s))
    keep = [a for a in range(A.size) if a not in B]
    z = len(keep)
    new = {a: i for i, a in enumerate(keep)}
    image = tuple(new.get(a, z) for a in range(A.size))
    rows = [tuple(image[A.action[a][s]] for s in range(A.over.size)) for a in keep]
    rows.append((z,) * A.over.size)
    if A.zero is not None and A.zero in B:
        zero_label = A.labels[A.zero]
    else:
        zero_label = _fresh_label("0'", [A.labels[a] for a in keep])
    labels = tuple(A.labels[a] for a in keep) + (zero_label,)
    return Act(A.over, tuple(rows), labels, z), image


def _orbit_masks(A: Act) -> list[int]:
    out = []
    for a in range(A.size):
        m = 1 << a
        for y in A.action[a]:
            m |= 1 << y
        out.append(m)
    return out


def rs_class_poset(A: Act) -> tuple[Poset, tuple[frozenset, ...]]:
    """The ``R_S``-classes (equal ``aS^1``) and their containment order.

    Classes are ordered by least point; ``leq[i, j]`` means class i <= class j.
    """
    masks = _orbit_masks(A)
    classes, _ = _partition(masks)
    reps = [min(c) for c in classes]
    k = len(reps)
    leq = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            leq[i, j] = bool(masks[b] >> a & 1)
    return Poset(k, leq), classes


def all_subacts(A: Act) -> list[frozenset]:
    """Every subact, as unions of down-closed sets of ``R_S``-classes."""
    if A.size > SUBACT_LIMIT:
        raise TooLarge(f"{A.size} points exceeds the subact enumeration limit {SUBACT_LIMIT}")
    P, classes = rs_class_poset(A)
    out = []
    for ds in down_sets(P):
        sub = frozenset().union(*(classes[i] for i in ds))
        if is_subact(A, sub):
            out.append(sub)
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def is_simple_act(A: Act) -> bool:
    full = (1 << A.size) - 1
    return all(m == full for m in _orbit_masks(A))


def is_0_simple_act(A: Act) -> bool:
    if A.zero is None:
        raise NoZero("act has no zero")
    if A.size < 2:
        return False
    full = (1 << A.size) - 1
    masks = _orbit_masks(A)
    return all(masks[a] == full for a in range(A.size) if a != A.zero)
