"""String rewriting for finitely presented semigroups.

Letters are single characters and words are Python strings.  Rules are
oriented by shortlex order with respect to the declared alphabet order, so
every rewrite strictly decreases the word and reduction terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import NotConfluent, SemigroupError, UnknownLetter, UnorientableRule

DEFAULT_MAX_RULES = 200
DEFAULT_MAX_LEN = 32


@dataclass(frozen=True)
class RewritingSystem:
    alphabet: tuple[str, ...]
    rules: tuple[tuple[str, str], ...]

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        rules = tuple((str(l), str(r)) for l, r in self.rules)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "rules", rules)
        if any(len(c) != 1 for c in alphabet) or len(set(alphabet)) != len(alphabet):
            raise SemigroupError("alphabet must consist of distinct single characters")
        for lhs, rhs in rules:
            if not lhs:
                raise SemigroupError("a rule needs a non-empty left-hand side")
            self.check_word(lhs)
            self.check_word(rhs)
            if self.key(lhs) <= self.key(rhs):
                raise UnorientableRule(lhs, rhs)

    @cached_property
    def rank(self) -> dict[str, int]:
        return {c: i for i, c in enumerate(self.alphabet)}

    def key(self, w: str) -> tuple[int, tuple[int, ...]]:
        """Shortlex sort key."""
        return len(w), tuple(self.rank[c] for c in w)

    def check_word(self, w: str) -> str:
        for c in w:
            if c not in self.rank:
                raise UnknownLetter(c)
        return w

    @cached_property
    def _max_lhs(self) -> int:
        return max((len(l) for l, _ in self.rules), default=0)

    @classmethod
    def from_relations(cls, alphabet: Sequence[str],
                       relations: Iterable[tuple[str, str]]) -> "RewritingSystem":
        """Orient each relation so the shortlex-larger side is rewritten."""
        probe = cls(tuple(alphabet), ())
        rules = []
        for u, v in relations:
            probe.check_word(u)
            probe.check_word(v)
            if u == v:
                raise UnorientableRule(u, v)
            rule = (u, v) if probe.key(u) > probe.key(v) else (v, u)
            if rule not in rules:
                rules.append(rule)
        return cls(tuple(alphabet), tuple(rules))


def _coerce(w) -> str:
    return w if isinstance(w, str) else "".join(w)


def reduce(rs: RewritingSystem, w: str) -> str:
    """Rewrite at the leftmost matching position (first rule there wins)
    until no rule applies."""
    w = rs.check_word(_coerce(w))
    if not rs.rules:
        return w
    rules = rs.rules
    back = rs._max_lhs - 1
    pos = 0
    while pos < len(w):
        for lhs, rhs in rules:
            if w.startswith(lhs, pos):
                w = w[:pos] + rhs + w[pos + len(lhs):]
                pos = max(0, pos - back)
                break
        else:
            pos += 1
    return w


def is_irreducible(rs: RewritingSystem, w: str) -> bool:
    return not any(lhs in w for lhs, _ in rs.rules)


@dataclass(frozen=True)
class CriticalPair:
    overlap: str
    left: str
    right: str
    rules: tuple[int, int]


def critical_pairs(rs: RewritingSystem) -> list[CriticalPair]:
    """One-step divergences from overlapping or nested left-hand sides."""
    out = []
    rules = rs.rules
    for a, (l1, r1) in enumerate(rules):
        for b, (l2, r2) in enumerate(rules):
            # suffix of l1 equals a proper prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if a == b and k == len(l1):
                    continue
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    out.append(CriticalPair(word, r1 + l2[k:], l1[:-k] + r2, (a, b)))
            # l2 occurs inside l1
            if a != b:
                start = l1.find(l2)
                while start != -1:
                    out.append(CriticalPair(l1, r1, l1[:start] + r2 + l1[start + len(l2):],
                                            (a, b)))
                    start = l1.find(l2, start + 1)
    return out


@dataclass(frozen=True)
class Confluence:
    ok: bool
    witness: tuple[str, str] | None = None
    pair: CriticalPair | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def is_locally_confluent(rs: RewritingSystem) -> Confluence:
    """Every critical pair reduces to a common word.  Together with the
    shortlex orientation this certifies confluence."""
    pairs = critical_pairs(rs)
    for cp in pairs:
        u, v = reduce(rs, cp.left), reduce(rs, cp.right)
        if u != v:
            return Confluence(False, (u, v), cp, len(pairs))
    return Confluence(True, None, None, len(pairs))


@dataclass(frozen=True)
class Completed:
    rs: RewritingSystem


@dataclass(frozen=True)
class GaveUp:
    rs: RewritingSystem
    reason: str


def _interreduce(rs: RewritingSystem) -> RewritingSystem:
    rules = list(rs.rules)
    changed = True
    while changed:
        changed = False
        for idx, (lhs, rhs) in enumerate(rules):
            others = RewritingSystem(rs.alphabet, tuple(r for i, r in enumerate(rules) if i != idx))
            if not is_irreducible(others, lhs):
                new_l, new_r = reduce(others, lhs), reduce(others, rhs)
                del rules[idx]
                if new_l != new_r:
                    rule = (new_l, new_r) if rs.key(new_l) > rs.key(new_r) else (new_r, new_l)
                    if rule not in rules:
                        rules.append(rule)
                changed = True
                break
            new_r = reduce(others, rhs)
            if new_r != rhs:
                rules[idx] = (lhs, new_r)
                changed = True
                break
    return RewritingSystem(rs.alphabet, tuple(rules))


def knuth_bendix(rs: RewritingSystem, max_rules: int = DEFAULT_MAX_RULES,
                 max_len: int = DEFAULT_MAX_LEN) -> Completed | GaveUp:
    """Shortlex completion; adds oriented normal forms of non-joinable
    critical pairs until every pair joins or a bound trips."""
    current = _interreduce(rs)
    while True:
        added = False
        for cp in critical_pairs(current):
            u, v = reduce(current, cp.left), reduce(current, cp.right)
            if u == v:
                continue
            rule = (u, v) if current.key(u) > current.key(v) else (v, u)
            if len(rule[0]) > max_len:
                return GaveUp(current, f"rule longer than {max_len}")
            current = _interreduce(RewritingSystem(current.alphabet, current.rules + (rule,)))
            if len(current.rules) > max_rules:
                return GaveUp(current, f"more than {max_rules} rules")
            added = True
            break
        if not added:
            return Completed(current)


@dataclass(frozen=True)
class FpSemigroup:
    rs: RewritingSystem
    confluent: bool

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.rs.alphabet

    def reduce(self, w: str) -> str:
        return reduce(self.rs, w)

    def multiply(self, u: str, v: str) -> str:
        return reduce(self.rs, u + v)


def fp_semigroup(rs: RewritingSystem) -> FpSemigroup:
    return FpSemigroup(rs, bool(is_locally_confluent(rs)))


def example_41() -> FpSemigroup:
    """``<a, b | ab^2 = b, aba = a^2 b>`` with ``a < b``."""
    rs = RewritingSystem(("a", "b"), (("abb", "b"), ("aba", "aab")))
    return fp_semigroup(rs)


FREE_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def free_fp(k: int) -> FpSemigroup:
    if not 1 <= k <= len(FREE_LETTERS):
        raise ValueError(f"alphabet size must be between 1 and {len(FREE_LETTERS)}")
    return FpSemigroup(RewritingSystem(tuple(FREE_LETTERS[:k]), ()), True)


def _require_confluent(fp: FpSemigroup) -> None:
    if not fp.confluent:
        raise NotConfluent("operation needs a confluent system")


def iter_normal_forms(fp: FpSemigroup, max_len: int) -> Iterator[str]:
    """Irreducible words of length 1..max_len in shortlex order.

    Irreducible words are prefix-closed, so each length extends the previous
    one and only left-hand sides ending at the new letter need checking.
    """
    rs = fp.rs
    level = [""]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for c in rs.alphabet:
                v = w + c
                if not any(v.endswith(lhs) for lhs, _ in rs.rules):
                    nxt.append(v)
        yield from nxt
        level = nxt
        if not level:
            return


def enumerate_normal_forms(fp: FpSemigroup, max_len: int) -> dict[int, list[str]]:
    _require_confluent(fp)
    out: dict[int, list[str]] = {n: [] for n in range(1, max_len + 1)}
    for w in iter_normal_forms(fp, max_len):
        out[len(w)].append(w)
    return out


# -- membership in principal right ideals -------------------------------------------

@dataclass(frozen=True)
class Yes:
    witness: object

    holds = True


@dataclass(frozen=True)
class Equal:
    holds = True


@dataclass(frozen=True)
class NoUpTo:
    bound: int

    holds = False


@dataclass(frozen=True)
class ExactNo:
    holds = False


Membership = Yes | Equal | NoUpTo | ExactNo


def right_ideal_membership(fp: FpSemigroup, u: str, v: str, bound: int,
                           multipliers: Iterable[str] | None = None) -> Membership:
    """Is ``u`` in ``v S^1``?  Searches multipliers among normal forms of length
    at most ``bound`` (shortlex order), so a negative answer is only bounded."""
    _require_confluent(fp)
    u, v = fp.reduce(u), fp.reduce(v)
    if u == v:
        return Equal()
    pool = iter_normal_forms(fp, bound) if multipliers is None else multipliers
    for s in pool:
        if fp.reduce(v + s) == u:
            return Yes(s)
    return NoUpTo(bound)
