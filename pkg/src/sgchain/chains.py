"""Chain-condition analysis over explorable semigroups.

A backend exposes a finite, deterministically ordered window onto a possibly
infinite semigroup (``enumerate(radius)``), its multiplication, and a
membership test for principal right ideals.  Searches for antichains and
ascending chains run against that interface and return certificates that
can be re-checked independently (``validate_certificate``).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .core import FiniteSemigroup
from .errors import NotConfluent, NotInKernel, NotZeroMinimal, SemigroupError
from .green import green_of
from .ideals import zero_minimal_right_ideals
from .rewrite import (
    Equal,
    ExactNo,
    FpSemigroup,
    Membership,
    NoUpTo,
    Yes,
    example_41,
    iter_normal_forms,
)

DEFAULT_WORD_RADIUS = 12
DEFAULT_INT_RADIUS = 100


class Explorable:
    """Base class for backends; subclasses fill in the four primitives."""

    exact = False
    validation_cap: int | None = None   # largest multiplier bound worth re-checking

    def enumerate(self, radius: int) -> list:
        raise NotImplementedError

    def multiply(self, x, y):
        raise NotImplementedError

    def in_principal_right_ideal(self, x, y, bound: int) -> Membership:
        raise NotImplementedError

    def multipliers(self, bound: int) -> list:
        """Elements that may follow ``y`` in ``y s``; used by the validator."""
        return self.enumerate(bound)

    def candidate_order(self, radius: int) -> list:
        return self.enumerate(radius)

    def show(self, x) -> str:
        return str(x)


# -- finite tables -------------------------------------------------------------------

class FiniteBackend(Explorable):
    exact = True

    def __init__(self, S: FiniteSemigroup):
        self.S = S
        self._masks = green_of(S).right_masks

    def enumerate(self, radius: int = 0) -> list[int]:
        return list(range(self.S.size))

    def multiply(self, x: int, y: int) -> int:
        return self.S.table[x][y]

    def in_principal_right_ideal(self, x: int, y: int, bound: int = 0) -> Membership:
        if x == y:
            return Equal()
        if self._masks[y] >> x & 1:
            return Yes(self.S.table[y].index(x))
        return ExactNo()

    def multipliers(self, bound: int = 0) -> list[int]:
        return list(range(self.S.size))

    def show(self, x: int) -> str:
        return self.S.labels[x]


def finite_backend(S: FiniteSemigroup) -> FiniteBackend:
    return FiniteBackend(S)


# -- finitely presented semigroups ---------------------------------------------------------

class FpBackend(Explorable):
    """Normal forms of a confluent presentation, optionally restricted to a
    subsemigroup given by a predicate on normal forms (elements and
    multipliers are both drawn from it)."""

    validation_cap = 8

    def __init__(self, fp: FpSemigroup, radius: int = DEFAULT_WORD_RADIUS,
                 member: Callable[[str], bool] | None = None):
        if not fp.confluent:
            raise NotConfluent("exploration needs a confluent presentation")
        self.fp = fp
        self.radius = radius
        self.member = member
        self._forms = lru_cache(maxsize=None)(self._forms_uncached)
        self._products: dict[tuple[str, int], dict[str, str]] = {}

    def _forms_uncached(self, radius: int) -> tuple[str, ...]:
        words = iter_normal_forms(self.fp, radius)
        if self.member is not None:
            words = (w for w in words if self.member(w))
        return tuple(words)

    def enumerate(self, radius: int | None = None) -> list[str]:
        return list(self._forms(self.radius if radius is None else radius))

    def multiply(self, x: str, y: str) -> str:
        return self.fp.reduce(x + y)

    def _right_translates(self, y: str, bound: int) -> dict[str, str]:
        key = (y, bound)
        got = self._products.get(key)
        if got is None:
            got = {}
            for s in self._forms(bound):
                got.setdefault(self.fp.reduce(y + s), s)
            self._products[key] = got
        return got

    def in_principal_right_ideal(self, x: str, y: str, bound: int | None = None) -> Membership:
        bound = self.radius if bound is None else bound
        x, y = self.fp.reduce(x), self.fp.reduce(y)
        if x == y:
            return Equal()
        s = self._right_translates(y, bound).get(x)
        return Yes(s) if s is not None else NoUpTo(bound)


class FreeBackend(FpBackend):
    """A free semigroup: ``x`` lies in ``y S^1`` exactly when ``y`` is a prefix."""

    exact = True

    def __init__(self, fp: FpSemigroup, radius: int = DEFAULT_WORD_RADIUS):
        if fp.rs.rules:
            raise SemigroupError("free backend needs an empty rule set")
        super().__init__(fp, radius)

    def in_principal_right_ideal(self, x: str, y: str, bound: int | None = None) -> Membership:
        if x == y:
            return Equal()
        if x.startswith(y):
            return Yes(x[len(y):])
        return ExactNo()

    def candidate_order(self, radius: int) -> list[str]:
        # the words a b^i a are pairwise prefix-incomparable; offer them first
        letters = self.fp.alphabet
        if len(letters) < 2:
            return self.enumerate(radius)
        a, b = letters[0], letters[1]
        family = [a + b * i + a for i in range(max(0, radius - 1))]
        seen = set(family)
        return family + [w for w in self.enumerate(radius) if w not in seen]


def fp_backend(fp: FpSemigroup, radius: int = DEFAULT_WORD_RADIUS,
               member: Callable[[str], bool] | None = None) -> FpBackend:
    if not fp.rs.rules and member is None:
        return FreeBackend(fp, radius)
    return FpBackend(fp, radius, member)


# -- Rees matrix semigroups over the integers ---------------------------------------------

class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class SymbolicReesZ:
    """``M^0(Z; I, J; P)`` with ``Z`` written additively.  ``P`` has ``J`` rows
    of ``I`` entries, each an integer or None (the sandwich zero).  Elements
    are ``(i, g, j)`` with 1-based ``i, j`` plus ``ZERO``."""

    I: int
    J: int
    P: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        P = tuple(tuple(row) for row in self.P)
        object.__setattr__(self, "P", P)
        if len(P) != self.J or any(len(row) != self.I for row in P):
            raise SemigroupError(f"P must be {self.J}x{self.I}")
        for j, row in enumerate(P):
            if all(p is None for p in row):
                raise SemigroupError(f"row {j + 1} of P has no integer entry")
        for i in range(self.I):
            if all(P[j][i] is None for j in range(self.J)):
                raise SemigroupError(f"column {i + 1} of P has no integer entry")

    def entry(self, j: int, i: int) -> int | None:
        return self.P[j - 1][i - 1]

    def multiply(self, x, y):
        if x is ZERO or y is ZERO:
            return ZERO
        i, g, j = x
        k, h, l = y
        p = self.entry(j, k)
        return ZERO if p is None else (i, g + p + h, l)


def _g_order(g: int) -> tuple[int, int]:
    return abs(g), g < 0


def show_z(g: int) -> str:
    return "e" if g == 0 else "g" if g == 1 else f"g^{g}"


class ReesZBackend(Explorable):
    """Exact membership in ``M^0(Z; I, J; P)`` or in one of its 0-minimal right
    ideals ``R_i`` viewed as a semigroup (``row=i``)."""

    exact = True

    def __init__(self, spec: SymbolicReesZ, row: int | None = None,
                 radius: int = DEFAULT_INT_RADIUS):
        if row is not None and not 1 <= row <= spec.I:
            raise SemigroupError(f"row {row} out of range")
        self.spec = spec
        self.row = row
        self.radius = radius

    def enumerate(self, radius: int | None = None) -> list:
        r = self.radius if radius is None else radius
        rows = [self.row] if self.row is not None else range(1, self.spec.I + 1)
        gs = sorted(range(-r, r + 1), key=_g_order)
        out = [(i, g, j) for i in rows for g in gs for j in range(1, self.spec.J + 1)]
        return out + [ZERO]

    def multiply(self, x, y):
        return self.spec.multiply(x, y)

    def in_principal_right_ideal(self, x, y, bound: int | None = None) -> Membership:
        if x == y:
            return Equal()
        if x is ZERO:
            return Yes(ZERO)
        if y is ZERO:
            return ExactNo()
        i, g, j = y
        k, h, l = x
        if k != i:
            return ExactNo()
        if self.row is None:
            m = next(m for m in range(1, self.spec.I + 1) if self.spec.entry(j, m) is not None)
        else:
            m = self.row
            if self.spec.entry(j, m) is None:
                return ExactNo()
        return Yes((m, h - g - self.spec.entry(j, m), l))

    def show(self, x) -> str:
        if x is ZERO:
            return "0"
        i, g, j = x
        return f"({i},{show_z(g)},{j})"


def rees_z_backend(spec: SymbolicReesZ, row: int | None = None,
                   radius: int = DEFAULT_INT_RADIUS) -> ReesZBackend:
    return ReesZBackend(spec, row, radius)


# -- certificates -----------------------------------------------------------------------------

class CertificateKind(str, Enum):
    ANTICHAIN = "antichain"
    ASCENDING_CHAIN = "ascending_chain"


class Basis(str, Enum):
    EXACT = "exact"
    BOUNDED = "bounded_search"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    elements: tuple
    checked_bound: int
    verdict_basis: Basis

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class NotFoundUpTo:
    radius: int
    best: tuple = ()


def antichain_certificate(E: Explorable, target_size: int, radius: int,
                          candidates: Iterable | None = None) -> Certificate | NotFoundUpTo:
    """Greedy antichain of principal right ideals over the backend's candidate
    order; an element joins when neither membership holds against any
    element already chosen."""
    if target_size < 2:
        raise ValueError("target_size must be at least 2")
    pool = E.candidate_order(radius) if candidates is None else list(candidates)
    chosen: list = []
    exact = True
    for c in pool:
        answers = []
        for x in chosen:
            m1 = E.in_principal_right_ideal(c, x, radius)
            if m1.holds:
                break
            m2 = E.in_principal_right_ideal(x, c, radius)
            if m2.holds:
                break
            answers += [m1, m2]
        else:
            chosen.append(c)
            exact = exact and all(isinstance(m, ExactNo) for m in answers)
            if len(chosen) == target_size:
                return Certificate(CertificateKind.ANTICHAIN, tuple(chosen), radius,
                                   Basis.EXACT if exact else Basis.BOUNDED)
    return NotFoundUpTo(radius, tuple(chosen))


def ascending_chain_certificate(E: Explorable, target_length: int,
                                radius: int) -> Certificate | NotFoundUpTo:
    """Strict chain ``x1 S^1 < x2 S^1 < ...`` among enumerated elements, found
    by longest-path search; listed from the smallest ideal upward."""
    if target_length < 2:
        raise ValueError("target_length must be at least 2")
    elems = E.enumerate(radius)
    n = len(elems)
    below: list[list[int]] = [[] for _ in range(n)]   # below[j]: i with x_i S^1 < x_j S^1
    exact = True
    for j in range(n):
        for i in range(n):
            if i == j:
                continue
            up = E.in_principal_right_ideal(elems[i], elems[j], radius)
            if not up.holds or isinstance(up, Equal):
                continue
            down = E.in_principal_right_ideal(elems[j], elems[i], radius)
            if down.holds:
                continue
            below[j].append(i)
            exact = exact and isinstance(down, ExactNo)

    longest = [0] * n
    state = [0] * n   # 0 new, 1 on stack, 2 done

    def visit(v: int) -> int:
        stack = [(v, iter(below[v]))]
        state[v] = 1
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(below[w])))
                    advanced = True
                    break
            if advanced:
                continue
            stack.pop()
            longest[u] = 1 + max((longest[w] for w in below[u] if state[w] == 2), default=0)
            state[u] = 2
        return longest[v]

    for v in range(n):
        if state[v] == 0:
            visit(v)

    top = next((v for v in range(n) if longest[v] >= target_length), None)
    if top is None:
        return NotFoundUpTo(radius)
    chain = [top]
    need = target_length - 1
    while need:
        nxt = next(w for w in below[chain[-1]] if longest[w] >= need)
        chain.append(nxt)
        need -= 1
    elements = tuple(elems[i] for i in reversed(chain))
    return Certificate(CertificateKind.ASCENDING_CHAIN, elements, radius,
                       Basis.EXACT if exact and E.exact else Basis.BOUNDED)


@dataclass(frozen=True)
class Validation:
    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


def validate_certificate(E: Explorable, cert: Certificate,
                         multipliers: Sequence | None = None) -> Validation:
    """Re-check a certificate by brute-force multiplication only.

    Claims of non-membership are checked against ``multipliers`` (default:
    the backend's elements within the certificate's bound), so for infinite
    backends this is a bounded re-check.
    """
    pool = list(E.multipliers(cert.checked_bound) if multipliers is None else multipliers)
    elems = list(cert.elements)
    if len(set(map(repr, elems))) != len(elems):
        return Validation(False, ("repeated element",))
    reach = {}

    def ideal(y):
        key = repr(y)
        if key not in reach:
            reach[key] = {repr(E.multiply(y, s)) for s in pool} | {key}
        return reach[key]

    if cert.kind is CertificateKind.ANTICHAIN:
        for x in elems:
            for y in elems:
                if x is not y and repr(x) in ideal(y):
                    return Validation(False, ("comparable", x, y))
        return Validation(True)
    for lo, hi in zip(elems, elems[1:]):
        if repr(lo) not in ideal(hi):
            return Validation(False, ("not contained", lo, hi))
        if repr(hi) in ideal(lo):
            return Validation(False, ("not strict", lo, hi))
    return Validation(True)


# -- the presentation <a, b | abb = b, aba = aab> ---------------------------------------------

def in_kernel_41(w: str) -> bool:
    return "b" in w


def kernel_backend_41(radius: int = DEFAULT_WORD_RADIUS) -> FpBackend:
    return FpBackend(example_41(), radius, member=in_kernel_41)


def kernel_antichain_41(N: int, mult_bound: int) -> Certificate:
    """``{b a^i : i < N}`` as an antichain of principal right ideals of the
    kernel: no product ``b a^i u`` (``u`` a kernel normal form with
    ``|u| <= mult_bound``) reduces to any word ``b a^j``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    fp = example_41()
    multipliers = [u for u in iter_normal_forms(fp, mult_bound) if in_kernel_41(u)]
    elements = tuple("b" + "a" * i for i in range(N))
    for x in elements:
        if fp.reduce(x) != x:
            raise SemigroupError(f"{x} is not a normal form")
        for u in multipliers:
            p = fp.reduce(x + u)
            if p[0] == "b" and p.count("b") == 1 and p.endswith("a" * (len(p) - 1)):
                raise SemigroupError(f"{x}*{u} = {p} lands on the family")
    return Certificate(CertificateKind.ANTICHAIN, elements, mult_bound, Basis.BOUNDED)


def _bounded_closure_41(gens: Iterable[str], radius: int, slack: int | None = None) -> frozenset:
    """``X S^1`` restricted to normal forms of length <= radius, explored by
    right multiplication with letters through words of length <= radius+slack."""
    fp = example_41()
    cap = radius + (radius if slack is None else slack)
    seen = {fp.reduce(g) for g in gens}
    frontier = [w for w in seen if len(w) <= cap]
    while frontier:
        nxt = []
        for w in frontier:
            for c in fp.alphabet:
                v = fp.reduce(w + c)
                if len(v) <= cap and v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(w for w in seen if len(w) <= radius)


@dataclass(frozen=True)
class FgSubact:
    generators: tuple[str, ...]
    i0: int
    equal: bool
    closure_size: int


def fg_subact_41(X: Sequence[str], radius: int = DEFAULT_WORD_RADIUS) -> FgSubact:
    """At most three generators ``b^{i0}``, ``b^{i0-1} a^{j0}``, ``b^{i0-1} a^{k0} b``
    for the subact ``X S^1`` of the kernel, with a bounded equality check."""
    if not X:
        raise SemigroupError("X must be non-empty")
    fp = example_41()
    words = []
    for x in X:
        w = fp.reduce(x)
        if not in_kernel_41(w):
            raise NotInKernel(x)
        words.append(w)
    target = _bounded_closure_41(words, radius)
    i0 = next((i for i in range(1, radius + 1) if "b" * i in target), None)
    if i0 is None:
        raise SemigroupError(f"no power of b within radius {radius}; increase it")
    gens = ["b" * i0]
    head = "b" * (i0 - 1)
    j0 = next((j for j in range(1, radius + 1) if head + "a" * j in target), None)
    if j0 is not None:
        gens.append(head + "a" * j0)
    k0 = next((k for k in range(1, radius + 1) if head + "a" * k + "b" in target), None)
    if k0 is not None:
        gens.append(head + "a" * k0 + "b")
    generated = _bounded_closure_41(gens, radius)
    return FgSubact(tuple(gens), i0, generated == target, len(target))


# -- 0-minimal right ideals and their annihilators -----------------------------------------

INFINITE = "infinite"


@dataclass(frozen=True)
class AnnihilatorReport:
    size: int | str
    elements: tuple = ()
    description: str = ""
    certificate: Certificate | NotFoundUpTo | None = None


def zero_min_right_ideal_report(instance, R, antichain_size: int = 100) -> AnnihilatorReport:
    """The set ``{a in R \\ 0 : aR = 0}`` for a 0-minimal right ideal ``R``.

    For a finite semigroup ``R`` is a set of elements; for a symbolic Rees
    matrix semigroup over the integers ``R`` is the row index ``i`` of
    ``R_i``.  The returned certificate is an antichain of principal right
    ideals of ``R`` (as a semigroup) drawn from the annihilator set.
    """
    if isinstance(instance, FiniteSemigroup):
        S = instance
        R = frozenset(R)
        if S.zero is None or R not in zero_minimal_right_ideals(S):
            raise NotZeroMinimal("R is not a 0-minimal right ideal")
        z = S.zero
        ann = tuple(a for a in sorted(R) if a != z and all(S.table[a][r] == z for r in R))
        T, old = S.restrict(R)
        new = {x: i for i, x in enumerate(old)}
        E = FiniteBackend(T)
        cert = None
        if len(ann) >= 2:
            cert = antichain_certificate(E, len(ann), 0, [new[a] for a in ann])
            if isinstance(cert, Certificate):
                cert = Certificate(cert.kind, tuple(old[x] for x in cert.elements),
                                   cert.checked_bound, cert.verdict_basis)
        elif ann:
            cert = Certificate(CertificateKind.ANTICHAIN, ann, 0, Basis.EXACT)
        return AnnihilatorReport(len(ann), ann, "", cert)

    if isinstance(instance, SymbolicReesZ):
        spec = instance
        i = int(R)
        E = ReesZBackend(spec, row=i, radius=antichain_size)
        zero_cols = [j for j in range(1, spec.J + 1) if spec.entry(j, i) is None]
        if zero_cols:
            j = zero_cols[0]
            cands = [(i, g, j) for g in range(antichain_size)]
            cert = antichain_certificate(E, antichain_size, antichain_size, cands) \
                if antichain_size >= 2 else None
            desc = f"{{{i}}} x Z x {{{', '.join(map(str, zero_cols))}}}"
            return AnnihilatorReport(INFINITE, (), desc, cert)
        cert = antichain_certificate(E, 2, min(antichain_size, 10))
        return AnnihilatorReport(0, (), "", cert)

    raise SemigroupError(f"unsupported instance type {type(instance).__name__}")
