"""Ideals, (0-)minimal ideals, kernels, socles and structural predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable

from .core import FiniteSemigroup, Verdict, is_regular, product_set
from .errors import (
    EmptyGenerators,
    NoZero,
    NotARightIdeal,
    NotASubsemigroup,
    PreconditionFailed,
)
from .green import green_of


class Side(str, Enum):
    RIGHT = "right"
    LEFT = "left"


def principal_right_ideal(S: FiniteSemigroup, a: int) -> frozenset:
    return frozenset(S.table[a]) | {a}


def principal_left_ideal(S: FiniteSemigroup, a: int) -> frozenset:
    return frozenset(row[a] for row in S.table) | {a}


def principal_ideal(S: FiniteSemigroup, a: int) -> frozenset:
    return generated_ideal(S, [a])


def _gens(X: Iterable[int]) -> frozenset:
    X = frozenset(X)
    if not X:
        raise EmptyGenerators("no generators")
    return X


def generated_right_ideal(S: FiniteSemigroup, X: Iterable[int]) -> frozenset:
    X = _gens(X)
    return X | product_set(S, X, S.all)


def generated_left_ideal(S: FiniteSemigroup, X: Iterable[int]) -> frozenset:
    X = _gens(X)
    return X | product_set(S, S.all, X)


def generated_ideal(S: FiniteSemigroup, X: Iterable[int]) -> frozenset:
    right = generated_right_ideal(S, X)
    return right | product_set(S, S.all, right)


def is_right_ideal(S: FiniteSemigroup, I: Iterable[int]) -> Verdict:
    """``IS`` inside ``I``; the witness is the least offending pair ``(i, s)``."""
    I = frozenset(I)
    t = S.table
    for i in sorted(I):
        for s in range(S.size):
            if t[i][s] not in I:
                return Verdict(False, (i, s))
    return Verdict(bool(I))


def is_left_ideal(S: FiniteSemigroup, I: Iterable[int]) -> Verdict:
    """``SI`` inside ``I``; the witness is the least offending pair ``(s, i)``."""
    I = frozenset(I)
    t = S.table
    for i in sorted(I):
        for s in range(S.size):
            if t[s][i] not in I:
                return Verdict(False, (s, i))
    return Verdict(bool(I))


def is_ideal(S: FiniteSemigroup, I: Iterable[int]) -> Verdict:
    I = frozenset(I)
    r = is_right_ideal(S, I)
    return r if not r else is_left_ideal(S, I)


def _power(S: FiniteSemigroup, A: frozenset, k: int) -> frozenset:
    out = A
    for _ in range(k - 1):
        out = product_set(S, out, A)
    return out


def is_mn_ideal(S: FiniteSemigroup, A: Iterable[int], m: int, n: int) -> Verdict:
    """Whether the subsemigroup ``A`` satisfies ``A^m S A^n`` inside ``A``."""
    A = frozenset(A)
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    closed = _is_closed(S, A)
    if not closed:
        raise NotASubsemigroup(closed.witness)
    left = product_set(S, _power(S, A, m), S.all)
    full = product_set(S, left, _power(S, A, n))
    outside = sorted(full - A)
    return Verdict(not outside, outside[0] if outside else None)


def _is_closed(S: FiniteSemigroup, A: frozenset) -> Verdict:
    for a in sorted(A):
        for b in sorted(A):
            if S.table[a][b] not in A:
                return Verdict(False, (a, b))
    return Verdict(True)


def _minimal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    uniq = sorted(set(sets), key=lambda s: (min(s), len(s), sorted(s)))
    return [s for s in uniq if not any(o < s for o in uniq)]


def minimal_right_ideals(S: FiniteSemigroup) -> list[frozenset]:
    g = green_of(S)
    return _minimal_sets(g.right_ideal(min(c)) for c in g.R)


def minimal_left_ideals(S: FiniteSemigroup) -> list[frozenset]:
    g = green_of(S)
    return _minimal_sets(g.left_ideal(min(c)) for c in g.L)


def minimal_ideals(S: FiniteSemigroup) -> list[frozenset]:
    g = green_of(S)
    return _minimal_sets(g.ideal(min(c)) for c in g.J)


def _require_zero(S: FiniteSemigroup) -> int:
    if S.zero is None:
        raise NoZero("semigroup has no zero")
    return S.zero


def _zero_minimal(S: FiniteSemigroup, principal) -> list[frozenset]:
    z = _require_zero(S)
    found = []
    seen = set()
    for a in range(S.size):
        if a == z:
            continue
        I = principal(a)
        if I in seen:
            continue
        seen.add(I)
        if all(principal(b) == I for b in I if b != z):
            found.append(I)
    return sorted(found, key=lambda s: sorted(s))


def zero_minimal_right_ideals(S: FiniteSemigroup) -> list[frozenset]:
    g = green_of(S)
    return _zero_minimal(S, g.right_ideal)


def zero_minimal_left_ideals(S: FiniteSemigroup) -> list[frozenset]:
    g = green_of(S)
    return _zero_minimal(S, g.left_ideal)


def zero_minimal_ideals(S: FiniteSemigroup) -> list[frozenset]:
    g = green_of(S)
    return _zero_minimal(S, g.ideal)


def kernel(S: FiniteSemigroup) -> frozenset:
    """The least two-sided ideal: the intersection of all principal ideals."""
    g = green_of(S)
    mask = (1 << S.size) - 1
    for m in g.two_sided_masks:
        mask &= m
    return frozenset(i for i in range(S.size) if mask >> i & 1)


def is_globally_idempotent(S: FiniteSemigroup, R: Iterable[int]) -> bool:
    R = frozenset(R)
    return product_set(S, R, R) == R


def is_null_set(S: FiniteSemigroup, X: Iterable[int]) -> bool:
    z = _require_zero(S)
    X = frozenset(X)
    return product_set(S, X, X) <= {z}


def is_decomposable_right_ideal(A: FiniteSemigroup, I: Iterable[int]) -> bool:
    I = frozenset(I)
    r = is_right_ideal(A, I)
    if not r:
        raise NotARightIdeal(r.witness)
    return product_set(A, I, A.all) == I


# -- predicates on whole semigroups -------------------------------------------

def _first(xs) -> int | None:
    for x in xs:
        return x
    return None


def is_right_simple(S: FiniteSemigroup) -> Verdict:
    g = green_of(S)
    full = (1 << S.size) - 1
    bad = _first(a for a in range(S.size) if g.right_masks[a] != full)
    return Verdict(bad is None, bad)


def is_left_simple(S: FiniteSemigroup) -> Verdict:
    g = green_of(S)
    full = (1 << S.size) - 1
    bad = _first(a for a in range(S.size) if g.left_masks[a] != full)
    return Verdict(bad is None, bad)


def is_simple(S: FiniteSemigroup) -> Verdict:
    g = green_of(S)
    full = (1 << S.size) - 1
    bad = _first(a for a in range(S.size) if g.two_sided_masks[a] != full)
    return Verdict(bad is None, bad)


def is_null(S: FiniteSemigroup) -> Verdict | None:
    if S.zero is None:
        return None
    bad = _first((a, b) for a in range(S.size) for b in range(S.size)
                 if S.table[a][b] != S.zero)
    return Verdict(bad is None, bad)


def _zero_variant(S: FiniteSemigroup, masks) -> Verdict | None:
    if S.zero is None:
        return None
    z = S.zero
    if all(S.table[a][b] == z for a in range(S.size) for b in range(S.size)):
        return Verdict(False, "S^2 = 0")
    full = (1 << S.size) - 1
    bad = _first(a for a in range(S.size) if a != z and masks[a] != full)
    return Verdict(bad is None, bad)


def is_right_0_simple(S: FiniteSemigroup) -> Verdict | None:
    return _zero_variant(S, green_of(S).right_masks)


def is_left_0_simple(S: FiniteSemigroup) -> Verdict | None:
    return _zero_variant(S, green_of(S).left_masks)


def is_0_simple(S: FiniteSemigroup) -> Verdict | None:
    return _zero_variant(S, green_of(S).two_sided_masks)


def is_completely_simple(S: FiniteSemigroup) -> Verdict:
    simple = is_simple(S)
    if not simple:
        return simple
    if not minimal_right_ideals(S):
        return Verdict(False, "no minimal right ideal")
    if not minimal_left_ideals(S):
        return Verdict(False, "no minimal left ideal")
    return Verdict(True)


def is_completely_0_simple(S: FiniteSemigroup) -> Verdict | None:
    simple = is_0_simple(S)
    if simple is None or not simple:
        return simple
    if not zero_minimal_right_ideals(S):
        return Verdict(False, "no 0-minimal right ideal")
    if not zero_minimal_left_ideals(S):
        return Verdict(False, "no 0-minimal left ideal")
    return Verdict(True)


def is_0_disjoint_union(S: FiniteSemigroup, whole: Iterable[int],
                        parts: list[frozenset]) -> Verdict:
    z = _require_zero(S)
    whole = frozenset(whole)
    union = frozenset().union(*parts) if parts else frozenset({z})
    if union != whole:
        return Verdict(False, ("union", sorted(union ^ whole)))
    for i, p in enumerate(parts):
        closed = _is_closed(S, p)
        if not closed:
            return Verdict(False, ("not a subsemigroup", i, closed.witness))
    for (i, p), (j, q) in combinations(enumerate(parts), 2):
        if p & q != {z}:
            return Verdict(False, ("overlap", i, j, sorted(p & q)))
    return Verdict(True)


def is_0_direct_union(S: FiniteSemigroup, whole: Iterable[int],
                      parts: list[frozenset]) -> Verdict:
    disjoint = is_0_disjoint_union(S, whole, parts)
    if not disjoint:
        return disjoint
    z = S.zero
    for (i, p), (j, q) in combinations(enumerate(parts), 2):
        for a in sorted(p):
            for b in sorted(q):
                if S.table[a][b] != z:
                    return Verdict(False, ("cross product", a, b))
                if S.table[b][a] != z:
                    return Verdict(False, ("cross product", b, a))
    return Verdict(True)


def _subset_is_0_simple(S: FiniteSemigroup, X: frozenset) -> Verdict:
    T, _ = S.restrict(X)
    v = is_0_simple(T)
    return v if v is not None else Verdict(False, "no zero")


# -- SR and socle decompositions ------------------------------------------------

@dataclass(frozen=True)
class SRDecomposition:
    sr: frozenset
    null_part: frozenset
    gi_part: frozenset
    clauses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())


def _right_ideal_correspondence(S: FiniteSemigroup, B: frozenset) -> Verdict:
    """Right ideals (and 0-minimal right ideals) of the semigroup ``B`` are
    exactly the right ideals of ``S`` lying inside ``B``.

    Both families are closed under union and generated by principal right
    ideals, so comparing generators decides equality of the families.
    """
    T, old = S.restrict(B)
    new = {x: i for i, x in enumerate(old)}
    for a in sorted(B):
        in_b = frozenset(old[y] for y in principal_right_ideal(T, new[a]))
        v = is_right_ideal(S, in_b)
        if not v:
            return Verdict(False, ("aB^1 not a right ideal of S", a))
        in_s = principal_right_ideal(S, a)
        if not in_s <= B:
            return Verdict(False, ("aS^1 leaves B", a))
        if not is_right_ideal(T, [new[y] for y in in_s]):
            return Verdict(False, ("aS^1 not a right ideal of B", a))
    zm_b = {frozenset(old[y] for y in I) for I in zero_minimal_right_ideals(T)}
    zm_s = {I for I in zero_minimal_right_ideals(S) if I <= B}
    if zm_b != zm_s:
        diff = sorted(sorted(I) for I in zm_b ^ zm_s)
        return Verdict(False, ("0-minimal right ideals differ", diff))
    return Verdict(True)


def decompose_SR(S: FiniteSemigroup, R: Iterable[int]) -> SRDecomposition:
    """Split ``SR`` into its null part and globally idempotent part and check
    the four structural clauses."""
    z = _require_zero(S)
    R = frozenset(R)
    zmr = zero_minimal_right_ideals(S)
    if R not in zmr:
        raise PreconditionFailed("zero_minimal", "R is not a 0-minimal right ideal")
    if not is_globally_idempotent(S, R):
        raise PreconditionFailed("globally_idempotent", "R^2 != R")
    sr = product_set(S, S.all, R)
    inside = [I for I in zmr if I <= sr]
    null_part = frozenset({z}).union(*[I for I in inside if is_null_set(S, I)])
    gi_part = frozenset({z}).union(*[I for I in inside if not is_null_set(S, I)])

    clauses = {}
    clauses["0_disjoint_union"] = is_0_disjoint_union(S, sr, [null_part, gi_part])
    null_ideal = is_ideal(S, null_part)
    clauses["null_part_null_ideal"] = (
        Verdict(False, ("not null",)) if not is_null_set(S, null_part)
        else null_ideal if not null_ideal else Verdict(True))
    right = is_right_ideal(S, gi_part)
    clauses["gi_part_0_simple_right_ideal"] = (
        right if not right else _subset_is_0_simple(S, gi_part))
    clauses["right_ideal_correspondence"] = _right_ideal_correspondence(S, gi_part)
    return SRDecomposition(sr, null_part, gi_part, clauses)


@dataclass(frozen=True)
class SocleReport:
    side: Side
    sigma: frozenset
    null_part: frozenset
    gi_part: frozenset
    blocks: tuple[frozenset, ...]
    ideals: tuple[frozenset, ...]
    clauses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.clauses.values())


def socle(S: FiniteSemigroup, side: Side | str = Side.RIGHT) -> SocleReport:
    """Right (or left) socle with its null / globally idempotent split.

    The left socle is the right socle of the opposite semigroup; element
    indices are shared, so the returned sets refer to ``S`` either way.
    """
    side = Side(side)
    z = _require_zero(S)
    T = S if side is Side.RIGHT else S.opposite()
    zmr = zero_minimal_right_ideals(T)
    sigma = frozenset({z}).union(*zmr)
    null = [I for I in zmr if is_null_set(T, I)]
    gi = [I for I in zmr if not is_null_set(T, I)]
    null_part = frozenset({z}).union(*null)
    gi_part = frozenset({z}).union(*gi)

    blocks = []
    for R in gi:
        sr = product_set(T, T.all, R)
        block = frozenset({z}).union(*[I for I in gi if I <= sr])
        if block not in blocks:
            blocks.append(block)
    blocks.sort(key=sorted)

    clauses = {}
    clauses["sigma_ideal"] = is_ideal(T, sigma)
    clauses["0_disjoint_union"] = is_0_disjoint_union(T, sigma, [null_part, gi_part])
    null_ideal = is_ideal(T, null_part)
    clauses["null_part_null_ideal"] = (
        Verdict(False, ("not null",)) if not is_null_set(T, null_part)
        else null_ideal if not null_ideal else Verdict(True))
    clauses["gi_part_one_sided_ideal"] = is_right_ideal(T, gi_part)
    if gi:
        direct = is_0_direct_union(T, gi_part, blocks)
        if direct:
            bad = _first(i for i, b in enumerate(blocks) if not _subset_is_0_simple(T, b))
            direct = Verdict(bad is None, None if bad is None else ("block not 0-simple", bad))
        clauses["gi_part_0_direct_blocks"] = direct
    else:
        clauses["gi_part_0_direct_blocks"] = Verdict(gi_part == {z}, sorted(gi_part))
    return SocleReport(side, sigma, null_part, gi_part, tuple(blocks), tuple(zmr), clauses)


# -- classification -------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    is_null: bool | None
    is_right_simple: bool
    is_left_simple: bool
    is_simple: bool
    is_right_0_simple: bool | None
    is_left_0_simple: bool | None
    is_0_simple: bool | None
    is_completely_simple: bool
    is_completely_0_simple: bool | None
    is_semisimple: bool
    is_regular: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if k != "witnesses"}


def classify(S: FiniteSemigroup) -> StructureReport:
    """All structural predicates at once; 0-variants are None without a zero."""
    from .constructions import FactorTag, principal_factor

    checks = {
        "is_null": is_null(S),
        "is_right_simple": is_right_simple(S),
        "is_left_simple": is_left_simple(S),
        "is_simple": is_simple(S),
        "is_right_0_simple": is_right_0_simple(S),
        "is_left_0_simple": is_left_0_simple(S),
        "is_0_simple": is_0_simple(S),
        "is_completely_simple": is_completely_simple(S),
        "is_completely_0_simple": is_completely_0_simple(S),
        "is_regular": is_regular(S),
    }
    g = green_of(S)
    null_factor = None
    for cls in g.J:
        a = min(cls)
        if principal_factor(S, a).tag is FactorTag.NULL:
            null_factor = a
            break
    checks["is_semisimple"] = Verdict(null_factor is None, null_factor)

    flags = {k: (None if v is None else v.ok) for k, v in checks.items()}
    witnesses = {k: v.witness for k, v in checks.items() if v is not None and not v.ok}
    return StructureReport(witnesses=witnesses, **flags)
