import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sgchain.acts import (
    act_from_table,
    act_rees_quotient,
    all_subacts,
    generated_subact,
    is_0_simple_act,
    is_simple_act,
    is_subact,
    point_act,
    regular_act,
    rs_class_poset,
)
from sgchain.constructions import cyclic_group
from sgchain.core import adjoin_zero, from_transformations
from sgchain.errors import EmptyGenerators, NotAnAction, NotASubact, NoZero, TooLarge
from sgchain.green import green_of
from sgchain.ideals import is_right_ideal

from .conftest import transformation_semigroup


def test_action_validation(LZ2, C2):
    assert act_from_table(LZ2, LZ2.table).size == 2
    assert act_from_table(C2, [[0, 0]]).size == 1
    # p.x = 1, p.y = 2 for every point: then (p.x).y must equal p.(xy) = p.x
    with pytest.raises(NotAnAction) as e:
        act_from_table(LZ2, [[0, 1], [0, 1]])
    assert e.value.triple[0] in (0, 1)


def test_act_zero_must_be_fixed(C2):
    with pytest.raises(Exception):
        act_from_table(C2, [[0, 1], [1, 0]], zero=0)
    assert act_from_table(C2, [[0, 0], [1, 1]], zero=0).zero == 0


def test_generated_subacts(LZ2, C2):
    assert generated_subact(regular_act(LZ2), {0}) == {0}
    A = regular_act(C2)
    assert generated_subact(A, {1}) == {0, 1}
    assert generated_subact(A, {0, 1}) == {0, 1}
    with pytest.raises(EmptyGenerators):
        generated_subact(A, [])


def test_act_quotients(N2, chain2, C2):
    q, image = act_rees_quotient(regular_act(N2), {N2.zero})
    assert q.size == 2 and q.zero == 1
    q, image = act_rees_quotient(regular_act(chain2), {chain2.zero})
    one = image[chain2.index("1")]
    assert q.labels == ("1", "0'") and q.act(one, chain2.index("1")) == one
    assert q.act(one, chain2.zero) == q.zero
    A = regular_act(C2)
    q, _ = act_rees_quotient(A, {0, 1})
    assert q.size == 1 and q.zero == 0
    with pytest.raises(NotASubact):
        act_rees_quotient(regular_act(chain2), {chain2.index("1")})


def test_rs_class_posets(N2, LZ2, C2):
    P, classes = rs_class_poset(regular_act(N2))
    assert classes == (frozenset({0}), frozenset({1}))
    assert P.less(0, 1) and not P.less(1, 0)
    P, classes = rs_class_poset(point_act(C2))
    assert P.n == 1
    P, classes = rs_class_poset(regular_act(LZ2))
    assert P.n == 2 and not P.comparable(0, 1)


def test_subact_enumeration(N2, LZ2, C2):
    assert all_subacts(regular_act(N2)) == [{N2.zero}, N2.all]
    assert all_subacts(point_act(C2)) == [{0}]
    assert all_subacts(regular_act(LZ2)) == [{0}, {1}, {0, 1}]
    big = from_transformations(3, [[1, 2, 0], [0, 0, 2]])
    if big.size > 20:
        with pytest.raises(TooLarge):
            all_subacts(regular_act(big))


def test_simplicity(C2, LZ2):
    assert is_simple_act(point_act(C2))
    assert not is_simple_act(regular_act(LZ2))
    C3 = cyclic_group(3).semigroup
    assert is_simple_act(regular_act(C3))
    with pytest.raises(NoZero):
        is_0_simple_act(regular_act(C3))
    assert not is_0_simple_act(act_from_table(C2, [[0, 1], [1, 0], [2, 2]], zero=2))
    G = adjoin_zero(C2)
    assert is_0_simple_act(act_from_table(G, [[0, 1, 2], [1, 0, 2], [2, 2, 2]], zero=2))


transformations = st.integers(2, 3).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.lists(st.integers(0, k - 1), min_size=k, max_size=k),
                         min_size=1, max_size=2)))


def _brute_subacts(A):
    out = []
    for r in range(1, A.size + 1):
        for B in itertools.combinations(range(A.size), r):
            if is_subact(A, B):
                out.append(frozenset(B))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@settings(max_examples=50, deadline=None)
@given(transformations)
def test_subacts_of_regular_act_are_right_ideals(km):
    k, ms = km
    S = transformation_semigroup(k, ms, 20)
    A = regular_act(S)
    subs = all_subacts(A)
    assert subs == _brute_subacts(A)
    assert all(is_right_ideal(S, B) for B in subs)
    P, classes = rs_class_poset(A)
    g = green_of(S)
    assert set(classes) == set(g.R)
    order = [g.R.index(c) for c in classes]
    assert all(P.less(i, j) == g.r_poset.less(order[i], order[j])
               for i in range(P.n) for j in range(P.n))


@settings(max_examples=50, deadline=None)
@given(transformations, st.data())
def test_quotient_lattice_correspondence(km, data):
    k, ms = km
    S = transformation_semigroup(k, ms, 8)
    A = regular_act(S)
    subs = all_subacts(A)
    B = data.draw(st.sampled_from(subs))
    Q, image = act_rees_quotient(A, B)
    q_subs = [D for D in all_subacts(Q) if Q.zero in D]
    above = [C for C in subs if B <= C]
    pre = {D: frozenset(a for a in range(A.size) if image[a] in D) for D in q_subs}
    assert len(set(pre.values())) == len(q_subs)
    assert all(C in above for C in pre.values())
    assert {frozenset(image[a] for a in C | B) for C in subs} == set(q_subs)


def test_union_of_simple_subacts_has_flat_class_poset():
    # C2 with a zero adjoined, acting on two copies of C2 plus a shared zero point
    G = adjoin_zero(cyclic_group(2).semigroup)
    assert G.labels == ("e", "g", "0")
    A = act_from_table(G, [[0, 1, 4], [1, 0, 4], [2, 3, 4], [3, 2, 4], [4, 4, 4]], zero=4)
    P, classes = rs_class_poset(A)
    bottom = classes.index(frozenset({4}))
    assert P.n == 3
    for i in range(P.n):
        if i != bottom:
            assert P.less(bottom, i)
            assert not any(P.less(i, j) for j in range(P.n))
