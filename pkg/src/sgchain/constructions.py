"""Derived semigroups: Rees quotients, 0-direct unions, Rees matrix semigroups,
the act extension ``U(S, A)``, null semigroups and principal factors."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterable, Sequence

from .core import FiniteSemigroup, _fresh_label, from_table
from .errors import ActMismatch, BadSandwichMatrix, MissingZero, NotAnIdeal, SemigroupError
from .green import green_of
from .ideals import is_ideal, kernel

if TYPE_CHECKING:
    from .acts import Act

# Entry of a sandwich matrix that is not a group element.
SANDWICH_ZERO = None


@dataclass(frozen=True)
class Quotient:
    semigroup: FiniteSemigroup
    image: tuple[int, ...]   # element of S -> element of S/I
    zero: int


def rees_quotient(S: FiniteSemigroup, I: Iterable[int]) -> Quotient:
    """Collapse the ideal ``I`` to a single zero.

    Survivors keep their relative order and labels; the zero comes last and
    reuses the label of ``S``'s own zero when that lies in ``I``.
    """
    I = frozenset(I)
    check = is_ideal(S, I)
    if not check:
        raise NotAnIdeal(check.witness)
    keep = [a for a in range(S.size) if a not in I]
    if S.zero is not None and S.zero in I:
        zero_label = S.labels[S.zero]
    else:
        zero_label = _fresh_label("0'", [S.labels[a] for a in keep])
    z = len(keep)
    new = {a: i for i, a in enumerate(keep)}
    image = tuple(new.get(a, z) for a in range(S.size))
    rows = []
    for a in keep:
        rows.append([image[S.table[a][b]] for b in keep] + [z])
    rows.append([z] * (z + 1))
    labels = [S.labels[a] for a in keep] + [zero_label]
    return Quotient(from_table(labels, rows, zero=z), image, z)


def zero_direct_union(parts: Sequence[FiniteSemigroup]) -> FiniteSemigroup:
    """Glue semigroups with zero along their zeros; cross products are zero.

    The shared zero is element 0.  When non-zero labels clash across parts,
    every part's labels get a ``_k`` suffix (1-based part number).
    """
    parts = list(parts)
    if not parts:
        raise SemigroupError("empty union")
    for k, P in enumerate(parts):
        if P.zero is None:
            raise MissingZero(k)
    if len(parts) == 1:
        return parts[0]
    nonzero = [[a for a in range(P.size) if a != P.zero] for P in parts]
    flat = [P.labels[a] for P, xs in zip(parts, nonzero) for a in xs]
    zero_label = parts[0].labels[parts[0].zero]
    clash = len(set(flat)) != len(flat) or zero_label in flat
    index = []
    labels = [zero_label]
    for k, (P, xs) in enumerate(zip(parts, nonzero)):
        m = {P.zero: 0}
        for a in xs:
            m[a] = len(labels)
            labels.append(f"{P.labels[a]}_{k + 1}" if clash else P.labels[a])
        index.append(m)
    n = len(labels)
    table = [[0] * n for _ in range(n)]
    for P, xs, m in zip(parts, nonzero, index):
        for a in xs:
            for b in xs:
                table[m[a]][m[b]] = m[P.table[a][b]]
    return from_table(labels, table, zero=0)


def null_semigroup(k: int) -> FiniteSemigroup:
    if k < 0:
        raise ValueError("k must be non-negative")
    labels = ["0"] + (["u"] if k == 1 else [f"u{i}" for i in range(1, k + 1)])
    return from_table(labels, [[0] * (k + 1) for _ in range(k + 1)], zero=0)


# -- groups and Rees matrix semigroups -------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    semigroup: FiniteSemigroup
    inverse: tuple[int, ...]

    @property
    def identity(self) -> int:
        return self.semigroup.identity

    @property
    def size(self) -> int:
        return self.semigroup.size

    @property
    def labels(self) -> tuple[str, ...]:
        return self.semigroup.labels

    def mul(self, a: int, b: int) -> int:
        return self.semigroup.table[a][b]


def group_from_semigroup(S: FiniteSemigroup) -> FiniteGroup:
    if S.identity is None:
        raise SemigroupError("a group needs an identity")
    n = S.size
    for row in S.table:
        if sorted(row) != list(range(n)):
            raise SemigroupError("table rows are not permutations")
    for b in range(n):
        if sorted(S.table[a][b] for a in range(n)) != list(range(n)):
            raise SemigroupError("table columns are not permutations")
    inverse = tuple(next(b for b in range(n) if S.table[a][b] == S.identity) for a in range(n))
    return FiniteGroup(S, inverse)


def cyclic_group(n: int) -> FiniteGroup:
    """``C_n`` with elements ``e, g, g^2, ...`` (index = exponent)."""
    if n < 1:
        raise ValueError("n must be positive")
    labels = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    return group_from_semigroup(
        from_table(labels[:n], [[(a + b) % n for b in range(n)] for a in range(n)], identity=0))


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


@dataclass(frozen=True)
class ReesMatrixSpec:
    """``P`` has ``J`` rows of ``I`` entries; an entry is a group element index
    or ``SANDWICH_ZERO``."""

    group: FiniteGroup
    I: int
    J: int
    P: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        P = tuple(tuple(row) for row in self.P)
        object.__setattr__(self, "P", P)
        if len(P) != self.J or any(len(row) != self.I for row in P):
            raise BadSandwichMatrix(f"P must be {self.J}x{self.I}")
        for j, row in enumerate(P):
            if all(p is SANDWICH_ZERO for p in row):
                raise BadSandwichMatrix(f"row {j + 1} of P has no group entry")
        for i in range(self.I):
            if all(P[j][i] is SANDWICH_ZERO for j in range(self.J)):
                raise BadSandwichMatrix(f"column {i + 1} of P has no group entry")

    def entry(self, j: int, i: int) -> int | None:
        """``p_{ji}`` with 1-based indices."""
        return self.P[j - 1][i - 1]


def rees_element_label(i: int, g: str, j: int) -> str:
    return f"({i},{g},{j})"


def rees_matrix_zero(spec: ReesMatrixSpec) -> FiniteSemigroup:
    """``M^0(G; I, J; P)``: triples ``(i, g, j)`` in lexicographic order, zero last."""
    G = spec.group
    triples = [(i, g, j) for i in range(1, spec.I + 1) for g in range(G.size)
               for j in range(1, spec.J + 1)]
    index = {t: k for k, t in enumerate(triples)}
    z = len(triples)
    rows = []
    for (i, g, j) in triples:
        row = []
        for (k, h, l) in triples:
            p = spec.entry(j, k)
            row.append(z if p is SANDWICH_ZERO else index[(i, G.mul(G.mul(g, p), h), l)])
        rows.append(row + [z])
    rows.append([z] * (z + 1))
    labels = [rees_element_label(i, G.labels[g], j) for (i, g, j) in triples] + ["0"]
    return from_table(labels, rows, zero=z)


# -- U(S, A) ------------------------------------------------------------------------

@dataclass(frozen=True)
class UConstruction:
    semigroup: FiniteSemigroup
    s_map: tuple[int, ...]    # element of S -> element of U
    x_map: tuple[int, ...]    # point a of A -> x_a in U
    zero: int

    @property
    def null_ideal(self) -> frozenset:
        return frozenset(self.x_map) | {self.zero}


def u_construction(S: FiniteSemigroup, A: "Act") -> UConstruction:
    """Extend ``S`` by a null ideal ``{x_a} u {0}`` with ``x_a s = x_{as}``."""
    if A.over != S:
        raise ActMismatch("act is over a different semigroup")
    n, m = S.size, A.size
    x = [n + a for a in range(m)]
    z = n + m
    size = z + 1
    table = [[z] * size for _ in range(size)]
    for s in range(n):
        for t in range(n):
            table[s][t] = S.table[s][t]
    for a in range(m):
        for s in range(n):
            table[x[a]][s] = x[A.action[a][s]]
    taken = set(S.labels)
    labels = list(S.labels)
    for a in range(m):
        lab = _fresh_label(f"x_{A.labels[a]}", taken)
        taken.add(lab)
        labels.append(lab)
    labels.append(_fresh_label("0", taken))
    U = from_table(labels, table, zero=z)
    return UConstruction(U, tuple(range(n)), tuple(x), z)


# -- principal factors --------------------------------------------------------------

class FactorTag(str, Enum):
    KERNEL = "kernel"
    ZERO_SIMPLE = "0-simple"
    NULL = "null"


@dataclass(frozen=True)
class PrincipalFactor:
    semigroup: FiniteSemigroup
    tag: FactorTag
    j_class: frozenset


def principal_factor(S: FiniteSemigroup, a: int) -> PrincipalFactor:
    g = green_of(S)
    J = g.J[g.j_of[a]]
    if J == kernel(S):
        K, _ = S.restrict(J)
        return PrincipalFactor(K, FactorTag.KERNEL, J)
    P = g.ideal(a)
    T, old = S.restrict(P)
    new = {x: i for i, x in enumerate(old)}
    q = rees_quotient(T, [new[x] for x in P - J]).semigroup
    z = q.zero
    null = all(q.table[b][c] == z for b in range(q.size) for c in range(q.size))
    return PrincipalFactor(q, FactorTag.NULL if null else FactorTag.ZERO_SIMPLE, J)
