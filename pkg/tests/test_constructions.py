import pytest
from hypothesis import given, settings, strategies as st

from sgchain.acts import point_act, regular_act
from sgchain.constructions import (
    FactorTag,
    ReesMatrixSpec,
    cyclic_group,
    null_semigroup,
    principal_factor,
    rees_matrix_zero,
    rees_quotient,
    trivial_group,
    u_construction,
    zero_direct_union,
)
from sgchain.core import adjoin_zero, is_isomorphism
from sgchain.errors import BadSandwichMatrix, MissingZero, NotAnIdeal
from sgchain.green import green_of
from sgchain.ideals import classify, generated_ideal, is_ideal, kernel

from .conftest import naive_associative, transformation_semigroup


def test_quotient_by_zero_is_same_shape(chain2):
    q = rees_quotient(chain2, {chain2.zero})
    assert q.semigroup.size == 2
    assert is_isomorphism(chain2, q.semigroup, q.image)
    assert q.semigroup.labels[q.zero] == "0"


def test_quotient_of_group_with_zero():
    C20 = adjoin_zero(cyclic_group(2).semigroup)
    q = rees_quotient(C20, {C20.zero})
    assert is_isomorphism(C20, q.semigroup, q.image)


def test_quotient_rejects_non_ideal(LZ2):
    with pytest.raises(NotAnIdeal):
        rees_quotient(LZ2, {LZ2.index("x")})


def test_quotient_fresh_zero_label(LZ2):
    q = rees_quotient(LZ2, LZ2.all)
    assert q.semigroup.labels == ("0'",)


def test_zero_direct_union_of_nulls(N2):
    U = zero_direct_union([N2, N2])
    assert U.size == 3 and U.zero == 0
    assert all(U.table[a][b] == 0 for a in range(3) for b in range(3))


def test_zero_direct_union_singleton_and_groups(N2):
    assert zero_direct_union([N2]) is N2
    C20 = adjoin_zero(cyclic_group(2).semigroup)
    U = zero_direct_union([C20, C20])
    assert U.size == 5 and naive_associative(U.table)
    e1, e2 = U.index("e_1"), U.index("e_2")
    assert U.table[e1][e2] == U.zero and U.table[e1][e1] == e1


def test_zero_direct_union_needs_zero(LZ2, N2):
    with pytest.raises(MissingZero) as e:
        zero_direct_union([N2, LZ2])
    assert e.value.index == 1


def test_rees_matrix_diagonal(rees_diag):
    assert rees_diag.size == 9 and naive_associative(rees_diag.table)
    g = green_of(rees_diag)
    nonzero = sorted(len(R) for R in g.R if rees_diag.zero not in R)
    assert nonzero == [4, 4]
    a, b = rees_diag.index("(1,g,1)"), rees_diag.index("(1,e,2)")
    assert rees_diag.table[a][rees_diag.index("(2,e,1)")] == rees_diag.zero
    assert rees_diag.labels[rees_diag.table[a][a]] == "(1,e,1)"
    assert rees_diag.labels[rees_diag.table[a][b]] == "(1,g,2)"


def test_rees_matrix_trivial():
    S = rees_matrix_zero(ReesMatrixSpec(trivial_group(), 1, 1, ((0,),)))
    assert S.size == 2 and S.identity is not None


def test_rees_matrix_rejects_zero_row():
    with pytest.raises(BadSandwichMatrix):
        ReesMatrixSpec(trivial_group(), 1, 1, ((None,),))
    with pytest.raises(BadSandwichMatrix):
        ReesMatrixSpec(cyclic_group(2), 2, 2, ((0, 1), (None, None)))


def test_rees_matrix_regular_completely_0_simple(rees_full, rees_diag):
    for S in (rees_full, rees_diag):
        r = classify(S)
        assert r.is_completely_0_simple and r.is_regular


def test_u_construction_point_act():
    T = trivial_group().semigroup
    u = u_construction(T, point_act(T))
    U = u.semigroup
    assert U.labels == ("e", "x_*", "0")
    assert U.table[1][0] == 1 and U.table[0][1] == U.zero and U.table[1][1] == U.zero
    assert u.null_ideal == {1, 2}


def test_u_construction_regular_act():
    G = cyclic_group(2).semigroup
    u = u_construction(G, regular_act(G))
    U = u.semigroup
    assert U.size == 5 and naive_associative(U.table)
    for g in range(2):
        for h in range(2):
            assert U.table[u.x_map[g]][u.s_map[h]] == u.x_map[G.table[g][h]]
    assert is_ideal(U, u.null_ideal)


def test_null_semigroups():
    assert null_semigroup(0).size == 1
    N = null_semigroup(5)
    assert N.size == 6 and classify(N).is_null


def test_principal_factor_tags(chain2, N2):
    assert principal_factor(chain2, chain2.zero).tag is FactorTag.KERNEL
    f = principal_factor(chain2, chain2.index("1"))
    assert f.tag is FactorTag.ZERO_SIMPLE and f.semigroup.size == 2
    assert principal_factor(N2, N2.index("u")).tag is FactorTag.NULL


transformations = st.integers(2, 4).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.lists(st.integers(0, k - 1), min_size=k, max_size=k),
                         min_size=1, max_size=3)))


@settings(max_examples=60, deadline=None)
@given(transformations, st.data())
def test_third_isomorphism(km, data):
    k, ms = km
    S = transformation_semigroup(k, ms, 200)
    I = kernel(S)
    a = data.draw(st.integers(0, S.size - 1))
    J = generated_ideal(S, I | {a})
    q1 = rees_quotient(S, I)
    q2 = rees_quotient(q1.semigroup, {q1.image[x] for x in J})
    qJ = rees_quotient(S, J)
    phi = [None] * q2.semigroup.size
    for x in range(S.size):
        phi[q2.image[q1.image[x]]] = qJ.image[x]
    assert is_isomorphism(q2.semigroup, qJ.semigroup, phi)


@settings(max_examples=60, deadline=None)
@given(transformations, st.data())
def test_principal_factors_are_kernel_zero_simple_or_null(km, data):
    k, ms = km
    S = transformation_semigroup(k, ms, 200)
    a = data.draw(st.integers(0, S.size - 1))
    f = principal_factor(S, a)
    r = classify(f.semigroup)
    expected = {FactorTag.KERNEL: r.is_simple, FactorTag.NULL: r.is_null,
                FactorTag.ZERO_SIMPLE: r.is_0_simple}[f.tag]
    assert expected


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_rees_matrix_size_and_associativity(I, J, data):
    G = cyclic_group(data.draw(st.integers(1, 3)))
    cell = st.one_of(st.none(), st.integers(0, G.size - 1))
    P = data.draw(st.lists(st.lists(cell, min_size=I, max_size=I), min_size=J, max_size=J))
    try:
        spec = ReesMatrixSpec(G, I, J, tuple(map(tuple, P)))
    except BadSandwichMatrix:
        return
    S = rees_matrix_zero(spec)
    assert S.size == I * J * G.size + 1
    assert naive_associative(S.table)
