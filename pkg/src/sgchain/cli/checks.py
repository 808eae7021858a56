"""Verification suites: structural checks over finite instances and
certificate checks over the infinite families.

Every record names a check id, a claim (``anchor``), the instance, a verdict
and, for failures, a witness.
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

import numpy as np

from ..acts import Act, act_from_table, regular_act, rs_class_poset
from ..chains import (
    INFINITE,
    Certificate,
    NotFoundUpTo,
    SymbolicReesZ,
    antichain_certificate,
    ascending_chain_certificate,
    fg_subact_41,
    finite_backend,
    fp_backend,
    kernel_antichain_41,
    kernel_backend_41,
    rees_z_backend,
    validate_certificate,
    zero_min_right_ideal_report,
)
from ..constructions import (
    FactorTag,
    ReesMatrixSpec,
    cyclic_group,
    principal_factor,
    rees_matrix_zero,
    rees_quotient,
    u_construction,
)
from ..core import (
    FiniteSemigroup,
    Verdict,
    associativity_witness,
    from_table,
    from_transformations,
    is_isomorphism,
    is_regular,
)
from ..errors import SemigroupError, SizeLimit
from ..green import green_of, maximum_antichain
from ..ideals import (
    Side,
    decompose_SR,
    is_0_direct_union,
    is_0_simple,
    is_completely_0_simple,
    is_completely_simple,
    is_globally_idempotent,
    is_ideal,
    is_left_simple,
    is_mn_ideal,
    is_null,
    is_right_simple,
    is_simple,
    kernel,
    minimal_left_ideals,
    minimal_right_ideals,
    socle,
    zero_minimal_left_ideals,
    zero_minimal_right_ideals,
)
from ..rewrite import (
    Completed,
    NoUpTo,
    enumerate_normal_forms,
    example_41,
    free_fp,
    is_locally_confluent,
    knuth_bendix,
)
from .reports import jsonable
from .zoo import finite_zoo_names, zoo_instance

PASS, FAIL, SKIP = "pass", "fail", "skip"
SUITES = ("paper-finite", "paper-infinite", "all")
HEAVY_LIMIT = 64      # skip per-factor rebuilding checks above this size
CHAIN_LIMIT = 30


@dataclass
class Record:
    check: str
    anchor: str
    instance: str
    verdict: str
    witness: object = None

    def as_json(self) -> dict:
        return {"check": self.check, "anchor": self.anchor, "instance": self.instance,
                "verdict": self.verdict, "witness": jsonable(self.witness)}


def _ok(cond: bool, witness=None) -> Verdict:
    return Verdict(bool(cond), None if cond else witness)


def _first_false(pairs) -> object:
    for ok, w in pairs:
        if not ok:
            return w
    return None


def _all(items: Iterator[tuple[bool, object]]) -> Verdict:
    w = _first_false(items)
    return Verdict(w is None, w)


# -- per-instance context --------------------------------------------------------------------

class Ctx:
    """Caches shared between checks on one finite semigroup."""

    def __init__(self, S: FiniteSemigroup):
        self.S = S
        self.n = S.size
        self.T = S.array

    @cached_property
    def g(self):
        return green_of(self.S)

    def _classes(self, sets: list[frozenset]) -> np.ndarray:
        ids = {s: i for i, s in enumerate(dict.fromkeys(sets))}
        return np.array([ids[s] for s in sets])

    @cached_property
    def naive_right(self) -> list[frozenset]:
        return [frozenset(self.S.table[a]) | {a} for a in range(self.n)]

    @cached_property
    def naive_left(self) -> list[frozenset]:
        return [frozenset(self.T[:, a].tolist()) | {a} for a in range(self.n)]

    @cached_property
    def naive_two(self) -> list[frozenset]:
        T = self.T
        return [self.naive_right[a] | self.naive_left[a] | frozenset(T[T[:, a], :].ravel().tolist())
                for a in range(self.n)]

    def eq_matrix(self, of) -> np.ndarray:
        of = np.asarray(of)
        return of[:, None] == of[None, :]

    @cached_property
    def Rm(self):
        return self.eq_matrix(self._classes(self.naive_right))

    @cached_property
    def Lm(self):
        return self.eq_matrix(self._classes(self.naive_left))

    @cached_property
    def Jm(self):
        return self.eq_matrix(self._classes(self.naive_two))

    @cached_property
    def has_zero(self) -> bool:
        return self.S.zero is not None

    @cached_property
    def zmr(self):
        return zero_minimal_right_ideals(self.S) if self.has_zero else []


def _matrix_witness(A: np.ndarray, B: np.ndarray):
    bad = np.argwhere(A != B)
    return None if not len(bad) else tuple(int(x) for x in bad[0])


def _same(A: np.ndarray, B: np.ndarray) -> Verdict:
    w = _matrix_witness(A, B)
    return Verdict(w is None, w)


def _subset(A: np.ndarray, B: np.ndarray) -> Verdict:
    bad = np.argwhere(A & ~B)
    return Verdict(not len(bad), None if not len(bad) else tuple(int(x) for x in bad[0]))


def _compose(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return (A.astype(np.int32) @ B.astype(np.int32)) > 0


# -- green -------------------------------------------------------------------------------

def c_green_R_definition(c: Ctx):
    return _same(c.eq_matrix(c.g.r_of), c.Rm)


def c_green_L_definition(c: Ctx):
    return _same(c.eq_matrix(c.g.l_of), c.Lm)


def c_green_J_definition(c: Ctx):
    return _same(c.eq_matrix(c.g.j_of), c.Jm)


def c_green_H_meet(c: Ctx):
    return _same(c.eq_matrix(c.g.h_of), c.Rm & c.Lm)


def c_green_D_RL(c: Ctx):
    return _same(c.eq_matrix(c.g.d_of), _compose(c.Rm, c.Lm))


def c_green_D_LR(c: Ctx):
    return _same(_compose(c.Rm, c.Lm), _compose(c.Lm, c.Rm))


def c_green_H_in_R(c: Ctx):
    return _subset(c.eq_matrix(c.g.h_of), c.Rm)


def c_green_H_in_L(c: Ctx):
    return _subset(c.eq_matrix(c.g.h_of), c.Lm)


def c_green_R_in_D(c: Ctx):
    return _subset(c.Rm, c.eq_matrix(c.g.d_of))


def c_green_L_in_D(c: Ctx):
    return _subset(c.Lm, c.eq_matrix(c.g.d_of))


def c_green_D_in_J(c: Ctx):
    return _subset(c.eq_matrix(c.g.d_of), c.Jm)


def c_green_D_eq_J(c: Ctx):
    return _same(c.eq_matrix(c.g.d_of), c.Jm)


def _compatible(M: np.ndarray, T: np.ndarray, left: bool):
    """First ``(a, b, s)`` with ``a M b`` but not ``sa M sb`` (or ``as M bs``)."""
    for s in range(T.shape[0]):
        img = T[s, :] if left else T[:, s]
        bad = np.argwhere(M & ~M[img[:, None], img[None, :]])
        if len(bad):
            a, b = (int(x) for x in bad[0])
            return a, b, s
    return None


def c_green_R_left_congruence(c: Ctx):
    w = _compatible(c.Rm, c.T, left=True)
    return Verdict(w is None, w)


def c_green_L_right_congruence(c: Ctx):
    w = _compatible(c.Lm, c.T, left=False)
    return Verdict(w is None, w)


def c_green_right_ideals_R_unions(c: Ctx):
    # every right ideal is a union of principal ones, so these suffice
    g = c.g
    return _all(((g.R[g.r_of[x]] <= I), (a, x))
                for a, I in enumerate(c.naive_right) for x in I)


def c_green_r_poset(c: Ctx):
    P = c.g.r_poset
    if not P.is_partial_order():
        return Verdict(False, "not a partial order")
    reps = [min(cl) for cl in c.g.R]
    return _all((bool(P.leq[i, j]) == (a in c.naive_right[b]), (i, j))
                for i, a in enumerate(reps) for j, b in enumerate(reps))


# -- ideals --------------------------------------------------------------------------------

def _restrict(S, X):
    return S.restrict(X)[0]


def c_min_right_simple(c: Ctx):
    return _all((bool(is_right_simple(_restrict(c.S, M))), sorted(M))
                for M in minimal_right_ideals(c.S))


def c_min_left_simple(c: Ctx):
    return _all((bool(is_left_simple(_restrict(c.S, M))), sorted(M))
                for M in minimal_left_ideals(c.S))


def c_kernel_simple(c: Ctx):
    K = kernel(c.S)
    return _ok(is_ideal(c.S, K) and is_simple(_restrict(c.S, K)), sorted(K))


def c_kernel_least(c: Ctx):
    K = kernel(c.S)
    return _all((K <= c.naive_two[a], a) for a in range(c.n))


def c_kernel_union_min_right(c: Ctx):
    K, M = kernel(c.S), minimal_right_ideals(c.S)
    if not M:
        return None
    U = frozenset().union(*M)
    return _ok(U == K, sorted(U ^ K))


def c_kernel_union_min_left(c: Ctx):
    K, M = kernel(c.S), minimal_left_ideals(c.S)
    if not M:
        return None
    U = frozenset().union(*M)
    return _ok(U == K, sorted(U ^ K))


def c_kernel_completely_simple(c: Ctx):
    both = bool(minimal_right_ideals(c.S)) and bool(minimal_left_ideals(c.S))
    cs = bool(is_completely_simple(_restrict(c.S, kernel(c.S))))
    return _ok(cs == both, {"completely_simple": cs, "minimal_right_and_left": both})


def c_one_sided_mn(c: Ctx):
    g = c.g
    for a in range(c.n):
        for I in (g.right_ideal(a), g.left_ideal(a)):
            v = is_mn_ideal(c.S, I, 1, 1)
            if not v:
                return Verdict(False, (a, v.witness))
    return Verdict(True)


def c_annihilator_antichains(c: Ctx):
    if not c.zmr:
        return None
    S, z = c.S, c.S.zero
    for R in c.zmr:
        T, old = S.restrict(R)
        new = {x: i for i, x in enumerate(old)}
        masks = green_of(T).right_masks
        nz = [a for a in sorted(R) if a != z]
        for a, b in itertools.combinations(nz, 2):
            ia, ib = new[a], new[b]
            incomparable = not (masks[ia] >> ib & 1) and not (masks[ib] >> ia & 1)
            ann = all(S.table[a][r] == z for r in R) and all(S.table[b][r] == z for r in R)
            if incomparable != ann:
                return Verdict(False, (sorted(R), a, b))
    return Verdict(True)


# -- socles ----------------------------------------------------------------------------------

def _sr_clause(name):
    def check(c: Ctx):
        gi = [R for R in c.zmr if is_globally_idempotent(c.S, R)]
        if not gi:
            return None
        for R in gi:
            v = decompose_SR(c.S, R).clauses[name]
            if not v:
                return Verdict(False, (sorted(R), v.witness))
        return Verdict(True)
    return check


def _socle_clause(side, name):
    def check(c: Ctx):
        if not c.zmr and side is Side.RIGHT:
            return None
        if not c.has_zero:
            return None
        if side is Side.LEFT and not zero_minimal_left_ideals(c.S):
            return None
        v = socle(c.S, side).clauses[name]
        return v if v else Verdict(False, v.witness)
    return check


# -- constructions, acts, core ---------------------------------------------------------------

def c_principal_factors(c: Ctx):
    if c.n > HEAVY_LIMIT:
        return None
    for cls in c.g.J:
        a = min(cls)
        pf = principal_factor(c.S, a)
        if pf.tag is FactorTag.KERNEL:
            ok = bool(is_simple(pf.semigroup))
        elif pf.tag is FactorTag.NULL:
            ok = bool(is_null(pf.semigroup))
        else:
            ok = bool(is_0_simple(pf.semigroup)) and bool(is_completely_0_simple(pf.semigroup))
        if not ok:
            return Verdict(False, (a, pf.tag.value))
    return Verdict(True)


def c_rees_quotient_hom(c: Ctx):
    K = kernel(c.S)
    if len(K) == c.n or c.n > HEAVY_LIMIT:
        return None
    q = rees_quotient(c.S, K)
    Q, im = q.semigroup, q.image
    t = c.S.table
    return _all((im[t[a][b]] == Q.table[im[a]][im[b]], (a, b))
                for a in range(c.n) for b in range(c.n))


def u_poset_claim(S: FiniteSemigroup, A: Act) -> Verdict:
    """The ``R_U``-classes of the null ideal ``{x_a} u {0}`` of ``U(S, A)`` form
    the ``R_S``-class poset of ``A`` with a bottom adjoined."""
    U = u_construction(S, A)
    N = sorted(U.null_ideal)
    pos = {x: i for i, x in enumerate(N)}
    rows = [[pos[U.semigroup.table[x][s]] for s in range(U.semigroup.size)] for x in N]
    nact = act_from_table(U.semigroup, rows, zero=pos[U.zero])
    PU, clsU = rs_class_poset(nact)
    PA, clsA = rs_class_poset(A)
    if PU.n != PA.n + 1:
        return Verdict(False, ("class counts", PU.n, PA.n))
    zero_cls = next(i for i, cl in enumerate(clsU) if pos[U.zero] in cl)
    to_a = {pos[U.x_map[a]]: a for a in range(A.size)}
    phi = []
    for i, cl in enumerate(clsU):
        if i == zero_cls:
            phi.append(None)
            continue
        a = to_a[min(cl)]
        j = next(k for k, ca in enumerate(clsA) if a in ca)
        if {to_a[p] for p in cl} != set(clsA[j]):
            return Verdict(False, ("class mismatch", sorted(cl)))
        phi.append(j)
    for i in range(PU.n):
        for k in range(PU.n):
            if i == zero_cls:
                expect = True
            elif k == zero_cls:
                expect = False
            else:
                expect = bool(PA.leq[phi[i], phi[k]])
            if bool(PU.leq[i, k]) != expect:
                return Verdict(False, ("order", i, k))
    return Verdict(True)


def c_u_poset_regular(c: Ctx):
    if c.n > HEAVY_LIMIT:
        return None
    return u_poset_claim(c.S, regular_act(c.S))


def c_regular_act_poset(c: Ctx):
    P, classes = rs_class_poset(regular_act(c.S))
    return _ok(tuple(classes) == tuple(c.g.R) and np.array_equal(P.leq, c.g.r_poset.leq))


def c_opposite(c: Ctx):
    return _ok(c.S.opposite().opposite() == c.S)


def c_regular_witnesses(c: Ctx):
    v = is_regular(c.S)
    t = c.S.table
    if v:
        return _all((t[t[a][b]][a] == a, a) for a, b in v.witness.items())
    a = v.witness
    return _ok(all(t[t[a][b]][a] != a for b in range(c.n)), a)


def c_chain_height(c: Ctx):
    if c.n > CHAIN_LIMIT:
        return None
    E = finite_backend(c.S)
    h = c.g.r_poset.height()
    if h >= 2:
        found = ascending_chain_certificate(E, h, 0)
        if not isinstance(found, Certificate) or not validate_certificate(E, found):
            return Verdict(False, ("no chain of height", h))
    over = ascending_chain_certificate(E, max(h + 1, 2), 0)
    return _ok(isinstance(over, NotFoundUpTo), ("chain longer than height", h))


def c_antichain_certificate(c: Ctx):
    g = c.g
    A = sorted(maximum_antichain(g.r_poset))
    if len(A) < 2:
        return None
    E = finite_backend(c.S)
    cands = [min(g.R[i]) for i in A]
    cert = antichain_certificate(E, len(cands), 0, cands)
    return _ok(isinstance(cert, Certificate) and bool(validate_certificate(E, cert)), cands)


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    fn: Callable[[Ctx], Verdict | None]


GREEN = "Green's relation laws"
MINIMAL = "minimal-ideal structure"
SR = "SR is a 0-disjoint union"
SOCLE = "the socle is a 0-disjoint union"

FINITE_CHECKS: tuple[Check, ...] = (
    Check("green.R_definition", GREEN, c_green_R_definition),
    Check("green.L_definition", GREEN, c_green_L_definition),
    Check("green.J_definition", GREEN, c_green_J_definition),
    Check("green.H_is_R_meet_L", GREEN, c_green_H_meet),
    Check("green.D_is_R_compose_L", GREEN, c_green_D_RL),
    Check("green.RL_equals_LR", GREEN, c_green_D_LR),
    Check("green.H_in_R", GREEN, c_green_H_in_R),
    Check("green.H_in_L", GREEN, c_green_H_in_L),
    Check("green.R_in_D", GREEN, c_green_R_in_D),
    Check("green.L_in_D", GREEN, c_green_L_in_D),
    Check("green.D_in_J", GREEN, c_green_D_in_J),
    Check("green.D_equals_J_finite", GREEN, c_green_D_eq_J),
    Check("green.R_left_congruence", GREEN, c_green_R_left_congruence),
    Check("green.L_right_congruence", GREEN, c_green_L_right_congruence),
    Check("green.right_ideals_are_R_unions", GREEN, c_green_right_ideals_R_unions),
    Check("green.r_poset_is_containment", GREEN, c_green_r_poset),
    Check("ideals.minimal_right_are_right_simple", MINIMAL, c_min_right_simple),
    Check("ideals.minimal_left_are_left_simple", MINIMAL, c_min_left_simple),
    Check("ideals.kernel_is_simple_ideal", MINIMAL, c_kernel_simple),
    Check("ideals.kernel_is_least_ideal", MINIMAL, c_kernel_least),
    Check("ideals.kernel_is_union_of_minimal_right", MINIMAL, c_kernel_union_min_right),
    Check("ideals.kernel_is_union_of_minimal_left", MINIMAL, c_kernel_union_min_left),
    Check("ideals.completely_simple_kernel", MINIMAL, c_kernel_completely_simple),
    Check("ideals.one_sided_ideals_are_1_1_ideals", "(m,n)-ideals", c_one_sided_mn),
    Check("ideals.annihilators_are_the_antichains",
          "principal right ideals of a 0-minimal right ideal", c_annihilator_antichains),
    *(Check(f"socle.sr.{k}", SR, _sr_clause(k)) for k in (
        "0_disjoint_union", "null_part_null_ideal", "gi_part_0_simple_right_ideal",
        "right_ideal_correspondence")),
    *(Check(f"socle.{side.value}.{k}", SOCLE, _socle_clause(side, k))
      for side in (Side.RIGHT, Side.LEFT)
      for k in ("sigma_ideal", "0_disjoint_union", "null_part_null_ideal",
                "gi_part_one_sided_ideal", "gi_part_0_direct_blocks")),
    Check("constructions.principal_factor_tags", "principal factors", c_principal_factors),
    Check("constructions.rees_quotient_by_kernel", "Rees quotients", c_rees_quotient_hom),
    Check("acts.u_poset_regular_act", "R_U-class poset of U(S, A)", c_u_poset_regular),
    Check("acts.regular_act_is_r_poset", "R_S-classes of an act", c_regular_act_poset),
    Check("core.opposite_involution", "opposite semigroup", c_opposite),
    Check("core.regular_witnesses", "regular elements", c_regular_witnesses),
    Check("chains.finite_chain_height", "ascending chains of principal right ideals",
          c_chain_height),
    Check("chains.finite_antichain_certificate", "antichains of principal right ideals",
          c_antichain_certificate),
)


def run_finite_checks(name: str, payload, checks=FINITE_CHECKS) -> list[Record]:
    """``payload`` is a semigroup or a raw ``(labels, table)`` pair."""
    if isinstance(payload, FiniteSemigroup):
        S = payload
    else:
        labels, table = payload
        w = associativity_witness(table)
        if w is not None:
            return [Record("core.associative", "associativity", name, FAIL, w)]
        S = from_table(labels, table)
    out = [Record("core.associative", "associativity", name, PASS)]
    c = Ctx(S)
    for chk in checks:
        try:
            v = chk.fn(c)
        except SemigroupError as e:
            out.append(Record(chk.id, chk.anchor, name, FAIL, f"{type(e).__name__}: {e}"))
            continue
        if v is None:
            out.append(Record(chk.id, chk.anchor, name, SKIP))
        else:
            out.append(Record(chk.id, chk.anchor, name, PASS if v else FAIL,
                              None if v else (v.witness if v.witness is not None else "violated")))
    return out


# -- instance sources ----------------------------------------------------------------------------

def small_tables(n: int) -> Iterator[tuple[int, list[list[int]]]]:
    """Every associative ``n x n`` table (with its base-n index)."""
    cells = n * n
    for idx in range(n ** cells):
        flat = []
        x = idx
        for _ in range(cells):
            flat.append(x % n)
            x //= n
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if all(t[t[a][b]][c] == t[a][t[b][c]]
               for a in range(n) for b in range(n) for c in range(n)):
            yield idx, t


def random_transformation_semigroup(rng: random.Random, max_size: int = 200):
    """k in {3,4,5} points, 2 or 3 random maps, resampled until small enough."""
    while True:
        k = rng.choice((3, 4, 5))
        maps = [[rng.randrange(k) for _ in range(k)] for _ in range(rng.choice((2, 3)))]
        try:
            return k, maps, from_transformations(k, maps, max_size=max_size)
        except SizeLimit:
            continue


def natural_act(S: FiniteSemigroup, k: int, elements) -> Act:
    """Points ``0..k-1`` acted on by the transformations ``elements``."""
    rows = [[elements[s][p] for s in range(S.size)] for p in range(k)]
    return act_from_table(S, rows, labels=[str(p + 1) for p in range(k)])


def transformation_elements(k: int, maps) -> list[tuple[int, ...]]:
    # replay the discovery order used by from_transformations
    gens = []
    for m in maps:
        t = tuple(m)
        if t not in gens:
            gens.append(t)
    elements = list(gens)
    seen = set(elements)
    frontier = list(elements)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = tuple(g[x] for x in f)
                if h not in seen:
                    seen.add(h)
                    elements.append(h)
                    nxt.append(h)
        frontier = nxt
    return elements


def mutate(S: FiniteSemigroup, i: int = 0, j: int = 0) -> tuple[tuple[str, ...], list[list[int]]]:
    """The raw table of ``S`` with entry ``(i, j)`` moved to the next element."""
    table = [list(r) for r in S.table]
    table[i][j] = (table[i][j] + 1) % S.size
    return S.labels, table


# -- instance-specific expectations ------------------------------------------------------------

def _labels(S, *names):
    return frozenset(S.index(n) for n in names)


def zoo_expectations() -> list[Record]:
    out = []

    def rec(cid, anchor, inst, v: Verdict):
        out.append(Record(cid, anchor, inst, PASS if v else FAIL,
                          None if v else (v.witness if v.witness is not None else "violated")))

    S = zoo_instance("LZ2")
    rec("zoo.LZ2_structure", MINIMAL, "zoo:LZ2",
        _ok(len(minimal_right_ideals(S)) == 2 and kernel(S) == S.all
            and bool(is_completely_simple(S)), "unexpected structure"))
    S = zoo_instance("N2")
    rs = socle(S, Side.RIGHT)
    rec("zoo.N2_structure", SOCLE, "zoo:N2",
        _ok(kernel(S) == {S.zero} and rs.sigma == S.all and rs.null_part == S.all,
            "unexpected socle"))
    for name in ("rees_full", "rees_diag"):
        S = zoo_instance(name)
        rec("zoo.rees_completely_0_simple", SOCLE, f"zoo:{name}",
            _ok(bool(is_completely_0_simple(S)) and socle(S, Side.RIGHT).sigma == S.all,
                "not completely 0-simple with full socle"))
    # R is not compatible with right multiplication in general
    S = zoo_instance("rees_diag")
    w = _compatible(Ctx(S).Rm, S.array, left=False)
    rec("zoo.R_not_right_compatible", GREEN, "zoo:rees_diag",
        _ok(w is not None, "no counterexample"))
    if w is not None:
        a, b, s = w
        out[-1].witness = {"a": S.labels[a], "b": S.labels[b], "c": S.labels[s],
                           "ac": S.labels[S.table[a][s]], "bc": S.labels[S.table[b][s]]}
    U = zoo_instance("U_RZ2_regular")
    I = frozenset(a for a in range(U.size) if U.labels[a].startswith("x_")) | {U.zero}
    S0 = (U.all - I) | {U.zero}
    rs = socle(U, Side.RIGHT)
    rec("zoo.U_right_simple_regular_act", "U(S, S_S) with S right simple", "zoo:U_RZ2_regular",
        _ok(rs.sigma == U.all and rs.null_part == I and rs.gi_part == S0
            and not is_0_direct_union(U, U.all, [I, S0]),
            {"sigma": sorted(rs.sigma), "null": sorted(rs.null_part)}))
    out += final_example_checks()
    return out


FINAL = "the final example: S equals its left socle"


def final_example_checks() -> list[Record]:
    U = zoo_instance("final")
    z = U.zero
    x = U.index("x")
    S_part = frozenset(a for a in range(U.size) if U.labels[a].startswith("s"))
    T_part = frozenset(a for a in range(U.size) if U.labels[a].startswith("t"))
    zx = frozenset({x, z})
    right, left = socle(U, Side.RIGHT), socle(U, Side.LEFT)
    out = []

    def rec(cid, v: Verdict):
        out.append(Record(cid, FINAL, "zoo:final", PASS if v else FAIL,
                          None if v else (v.witness if v.witness is not None else "violated")))

    rec("final.null_parts", _ok(right.null_part == zx and left.null_part == zx,
                                (sorted(right.null_part), sorted(left.null_part))))
    rec("final.gi_right_is_T", _ok(right.gi_part == T_part | {z}, sorted(right.gi_part)))
    rec("final.sigma_left_is_everything", _ok(left.sigma == U.all, sorted(U.all - left.sigma)))
    rec("final.gi_right_in_gi_left", _ok(right.gi_part <= left.gi_part, sorted(left.gi_part)))
    rec("final.gi_right_two_sided", is_ideal(U, right.gi_part))
    rec("final.sigma_right_direct", is_0_direct_union(U, right.sigma,
                                                      [right.null_part, right.gi_part]))
    q1 = rees_quotient(U, right.sigma).semigroup
    Bl, old = U.restrict(left.gi_part)
    new = {a: i for i, a in enumerate(old)}
    q2 = rees_quotient(Bl, [new[a] for a in right.gi_part]).semigroup
    phi = [q2.index(q1.labels[a]) if q1.labels[a] in q2.labels else q2.zero
           for a in range(q1.size)]
    rec("final.quotients_isomorphic", _ok(is_isomorphism(q1, q2, phi), "label map fails"))
    zml = zero_minimal_left_ideals(U)
    v = is_0_direct_union(U, U.all, zml)
    s = min(S_part)
    witness_ok = U.table[s][x] == x
    rec("final.not_direct_union_of_left", _ok(not v and witness_ok, "unexpectedly direct"))
    if not v:
        out[-1].witness = {"s": U.labels[s], "x": "x", "s*x": U.labels[U.table[s][x]]}
    return out


def u_poset_pairs(seed: int, count: int) -> list[Record]:
    rng = random.Random(f"u-poset:{seed}")
    out = []
    for i in range(count):
        k, maps, S = random_transformation_semigroup(rng, max_size=60)
        A = natural_act(S, k, transformation_elements(k, maps))
        v = u_poset_claim(S, A)
        out.append(Record("acts.u_poset_random_pairs", "R_U-class poset of U(S, A)",
                          f"u-pair:{seed}:{i}", PASS if v else FAIL, None if v else v.witness))
    return out


# -- infinite families ------------------------------------------------------------------------------

def _words(alphabet: str, n: int):
    return ("".join(p) for p in itertools.product(alphabet, repeat=n))


# a^i, b^i a^j, b^j a^i b
NORMAL_FORM = re.compile(r"a+|b+a*|b*a+b")


def infinite_checks(seed: int) -> list[Record]:
    out = []

    def rec(cid, anchor, inst, v: Verdict):
        out.append(Record(cid, anchor, inst, PASS if v else FAIL,
                          None if v else (v.witness if v.witness is not None else "violated")))

    EX = "presentation <a, b | abb = b, aba = aab>"
    fp = example_41()
    conf = is_locally_confluent(fp.rs)
    rec("ex41.locally_confluent", EX, "ex41", Verdict(conf.ok, conf.witness))

    counts = enumerate_normal_forms(fp, 12)
    lhs = [l for l, _ in fp.rs.rules]
    oracle = {n: sum(1 for w in _words("ab", n) if not any(l in w for l in lhs))
              for n in range(1, 13)}
    rec("ex41.normal_form_counts", EX, "ex41",
        _all((len(counts[n]) == oracle[n] == 2 * n, (n, len(counts[n]), oracle[n]))
             for n in range(1, 13)))

    rec("ex41.normal_form_shapes", EX, "ex41",
        _all((NORMAL_FORM.fullmatch(w) is not None, w) for n in range(1, 13) for w in counts[n]))

    # kernel: b-words form an ideal, absorb nothing back to a-powers, and are mutually reachable
    short = [w for n in range(1, 5) for w in counts[n]]
    bw = [w for w in short if "b" in w]
    ctx = [w for n in range(1, 4) for w in counts[n]]
    rec("ex41.kernel_is_ideal", EX, "ex41",
        _all(("b" in fp.reduce(p + w + q), (p, w, q))
             for w in bw for p in [""] + ctx for q in [""] + ctx))
    reach_pool = [w for n in range(1, 7) for w in counts[n]]

    def reachable(v, w):
        if v == w:
            return True
        return any(fp.reduce(p + v + q) == w for p in [""] + reach_pool for q in [""] + reach_pool)

    kb = [w for w in bw if len(w) <= 3]
    rec("ex41.kernel_is_simple_bounded", EX, "ex41",
        _all((reachable(v, w), (v, w)) for v in kb for w in kb))

    # S/K: a^i S^1 strictly above a^(i+1) S^1; products leaving a-powers land in K
    E = fp_backend(fp, 10)
    chain_ok = []
    for i in range(1, 11):
        lo, hi = "a" * (i + 1), "a" * i
        up = E.in_principal_right_ideal(lo, hi, 10)
        apows = ["a" * j for j in range(1, 12)]
        back = any(fp.reduce(lo + s) == hi for s in apows)
        chain_ok.append((up.holds and not back, i))
    rec("ex41.quotient_chain_depth_10", EX, "ex41", _all(iter(chain_ok)))

    try:
        cert = kernel_antichain_41(50, 12)
        v = validate_certificate(kernel_backend_41(12), cert,
                                 [w for w in kernel_backend_41(6).enumerate(6)])
        rec("ex41.kernel_antichain_50", EX, "ex41", _ok(len(cert) == 50 and bool(v), v.witness))
    except SemigroupError as e:
        rec("ex41.kernel_antichain_50", EX, "ex41", Verdict(False, str(e)))

    g = antichain_certificate(kernel_backend_41(12), 10, 12)
    rec("ex41.greedy_kernel_antichain", EX, "ex41",
        _ok(isinstance(g, Certificate) and g.elements == tuple("b" + "a" * i for i in range(10)),
            getattr(g, "elements", None)))

    rng = random.Random(f"fg:{seed}")
    fails = []
    for t in range(100):
        X = []
        for _ in range(rng.randint(1, 3)):
            n = rng.randint(1, 5)
            w = "".join(rng.choice("ab") for _ in range(n))
            if "b" not in w:
                w += "b"
            X.append(w)
        r = fg_subact_41(X, 9)
        if len(r.generators) > 3 or not r.equal:
            fails.append((X, r.generators))
            break
    rec("ex41.fg_subact_random_100", EX, "ex41", _ok(not fails, fails[:1]))

    res = knuth_bendix(fp.rs)
    rec("ex41.completion_is_stable", EX, "ex41",
        _ok(isinstance(res, Completed) and set(res.rs.rules) == set(fp.rs.rules),
            getattr(res, "rs", None) and res.rs.rules))

    reg = fp_backend(fp, 10).in_principal_right_ideal("ba", "bb", 10)
    rec("ex41.regression_ba_in_bb", EX, "ex41", _ok(isinstance(reg, NoUpTo), repr(reg)))

    FREE = "free semigroups: right noetherian iff one generator"
    E1 = fp_backend(free_fp(1), 15)
    a1 = antichain_certificate(E1, 2, 15)
    rec("free.one_generator_no_antichain", FREE, "free1", _ok(isinstance(a1, NotFoundUpTo), a1))
    c1 = ascending_chain_certificate(E1, 15, 15)
    rec("free.one_generator_chain", FREE, "free1",
        _ok(isinstance(c1, Certificate) and c1.elements == tuple("a" * k for k in range(15, 0, -1)),
            getattr(c1, "elements", None)))
    E2 = fp_backend(free_fp(2), 20)
    a2 = antichain_certificate(E2, 20, 20)
    rec("free.two_generator_antichain_20", FREE, "free2",
        _ok(isinstance(a2, Certificate) and a2.verdict_basis.value == "exact"
            and bool(validate_certificate(E2, a2, E2.multipliers(6))), a2))

    RZ = "annihilator set of a 0-minimal right ideal"
    diag = SymbolicReesZ(2, 2, ((0, None), (None, 0)))
    rep = zero_min_right_ideal_report(diag, 1, 100)
    ok = (rep.size == INFINITE and isinstance(rep.certificate, Certificate)
          and len(rep.certificate) == 100 and rep.certificate.verdict_basis.value == "exact"
          and bool(validate_certificate(rees_z_backend(diag, row=1), rep.certificate,
                                        rees_z_backend(diag, row=1).multipliers(100))))
    rec("reesz.diag_infinite_antichain_100", RZ, "reesz_diag", _ok(ok, rep.size))
    full = SymbolicReesZ(2, 2, ((0, 0), (0, 0)))
    rep = zero_min_right_ideal_report(full, 1, 100)
    rec("reesz.full_finite_no_antichain", RZ, "reesz_full",
        _ok(rep.size == 0 and isinstance(rep.certificate, NotFoundUpTo), rep.size))
    rec("reesz.membership_matches_mod_101", RZ, "reesz_diag", reesz_mod_check(diag, 101, 10))
    rec("reesz.membership_matches_mod_101", RZ, "reesz_full", reesz_mod_check(full, 101, 10))
    return out


def reesz_mod_check(spec: SymbolicReesZ, n: int, radius: int) -> Verdict:
    """Compare exact symbolic membership with the finite ``M^0(C_n; I, J; P mod n)``."""
    G = cyclic_group(n)
    P = tuple(tuple(None if p is None else p % n for p in row) for row in spec.P)
    F = rees_matrix_zero(ReesMatrixSpec(G, spec.I, spec.J, P))
    g = green_of(F)

    def idx(e):
        if e is None or not isinstance(e, tuple):
            return F.zero
        i, h, j = e
        return ((i - 1) * n + h % n) * spec.J + (j - 1)

    E = rees_z_backend(spec, radius=radius)
    elems = E.enumerate(radius)
    for x in elems:
        for y in elems:
            sym = E.in_principal_right_ideal(x, y, radius).holds
            fin = bool(g.right_masks[idx(y)] >> idx(x) & 1)
            if sym != fin:
                return Verdict(False, (E.show(x), E.show(y)))
    return Verdict(True)


# -- suites -------------------------------------------------------------------------------------------

def finite_instances(seed: int, count: int):
    for name in finite_zoo_names():
        yield f"zoo:{name}", zoo_instance(name)
    for idx, t in small_tables(3):
        yield f"order3:{idx}", from_table(["a", "b", "c"], t)
    rng = random.Random(seed)
    for i in range(count):
        _, _, S = random_transformation_semigroup(rng)
        yield f"random:{seed}:{i}", S


def run_suite(suite: str, seed: int = 42, count: int = 500,
              mutate_instance: str | None = None) -> dict:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    records: list[Record] = []
    if mutate_instance is not None:
        records += run_finite_checks(f"mutated:{mutate_instance}",
                                     mutate(zoo_instance(mutate_instance)))
    if suite in ("paper-finite", "all"):
        for name, S in finite_instances(seed, count):
            records += run_finite_checks(name, S)
        records += zoo_expectations()
        records += u_poset_pairs(seed, min(count, 100))
    if suite in ("paper-infinite", "all"):
        records += infinite_checks(seed)
    summary = {PASS: 0, FAIL: 0, SKIP: 0}
    for r in records:
        summary[r.verdict] += 1
    summary["check_ids"] = len({r.check for r in records})
    return {"suite": suite, "seed": seed, "count": count,
            "summary": summary, "records": [r.as_json() for r in records]}
