import itertools

import pytest
from hypothesis import given, settings, strategies as st

from sgchain.core import (
    adjoin_identity,
    adjoin_zero,
    associativity_witness,
    closure,
    from_table,
    from_transformations,
    has_local_right_identity,
    idempotents,
    is_regular,
    is_subsemigroup,
    product_set,
)
from sgchain.errors import (
    BadIdentity,
    BadZero,
    EmptyGenerators,
    NonAssociative,
    NotASubsemigroup,
    ShapeMismatch,
    SizeLimit,
)

from .conftest import naive_associative, transformation_semigroup


def test_left_zero_has_no_zero_or_identity(LZ2):
    assert LZ2.zero is None and LZ2.identity is None


def test_chain_detects_zero_and_identity(chain2):
    assert chain2.labels[chain2.zero] == "0"
    assert chain2.labels[chain2.identity] == "1"


def test_first_non_associative_2x2_table_is_rejected_with_witness():
    # oracle: brute force over all 16 tables
    bad = next(t for t in (
        [list(f[:2]), list(f[2:])] for f in itertools.product(range(2), repeat=4))
        if not naive_associative(t))
    with pytest.raises(NonAssociative) as e:
        from_table(["x", "y"], bad)
    i, j, k = e.value.triple
    assert bad[bad[i][j]][k] != bad[i][bad[j][k]]


def test_table_from_the_operation_examples_is_not_associative():
    with pytest.raises(NonAssociative):
        from_table(["x", "y"], [[0, 1], [0, 0]])


def test_three_element_tables_match_the_naive_oracle(order3_tables):
    accepted = 0
    for t, ok in order3_tables:
        assert (associativity_witness(t) is None) == ok
        accepted += ok
    assert accepted == 113


@pytest.mark.parametrize("labels, table", [
    (["x"], [[0, 0]]),
    (["x", "y"], [[0, 2], [0, 0]]),
    (["x", "x"], [[0, 0], [0, 0]]),
])
def test_shape_problems(labels, table):
    with pytest.raises(ShapeMismatch):
        from_table(labels, table)


def test_explicit_zero_and_identity_are_checked(LZ2):
    with pytest.raises(BadZero):
        from_table(["x", "y"], [[0, 0], [1, 1]], zero=0)
    with pytest.raises(BadIdentity):
        from_table(["x", "y"], [[0, 0], [1, 1]], identity=1)


def test_adjoin_identity(LZ2, chain2, N2):
    M = adjoin_identity(LZ2)
    assert M.size == 3 and M.identity == 2
    assert adjoin_identity(chain2) is chain2
    assert adjoin_identity(N2).size == 3
    assert adjoin_identity(M) is M


def test_adjoin_zero(C2, chain2, LZ2):
    Z = adjoin_zero(C2)
    assert Z.size == 3 and Z.zero == 2
    assert adjoin_zero(chain2) is chain2
    W = adjoin_zero(LZ2)
    assert all(W.table[W.zero][a] == W.zero == W.table[a][W.zero] for a in range(3))


def test_product_set(LZ2, N2, chain2):
    assert product_set(LZ2, {0}, {0, 1}) == {0}
    assert product_set(N2, {1}, {1}) == {N2.zero}
    assert product_set(chain2, {0}, {0, 1}) == {0, 1}


def test_closure(C2, N2, LZ2):
    assert closure(C2, {1}) == {0, 1}
    assert closure(N2, {1}) == {0, 1}
    assert closure(LZ2, {0}) == {0}
    with pytest.raises(EmptyGenerators):
        closure(LZ2, set())


def test_constant_maps_give_right_zero():
    S = from_transformations(2, [[0, 0], [1, 1]])
    # f*g = g o f: the product keeps the right factor
    assert S.table == ((0, 1), (0, 1))


def test_transformation_examples():
    assert from_transformations(1, [[0]]).size == 1
    C3 = from_transformations(3, [[1, 2, 0]])
    assert C3.size == 3 and C3.identity is not None
    with pytest.raises(EmptyGenerators):
        from_transformations(2, [])
    with pytest.raises(SizeLimit):
        from_transformations(5, [[1, 2, 3, 4, 0], [1, 0, 2, 3, 4], [0, 0, 2, 3, 4]], max_size=50)


def test_regular(LZ2, N2, C2):
    assert is_regular(LZ2)
    v = is_regular(N2)
    assert not v and N2.labels[v.witness] == "u"
    assert is_regular(C2)


def test_idempotents(LZ2, N2, C2):
    assert idempotents(LZ2) == {0, 1}
    assert idempotents(N2) == {N2.zero}
    assert idempotents(C2) == {C2.identity}


def test_local_right_identity(LZ2, N2):
    assert has_local_right_identity(LZ2, 0)
    assert not has_local_right_identity(N2, N2.index("u"))
    assert has_local_right_identity(N2, N2.zero)


def test_restrict_rejects_non_subsemigroups(C2):
    with pytest.raises(NotASubsemigroup):
        C2.restrict({1})
    assert not is_subsemigroup(C2, {1})


def test_opposite_reverses_products(LZ2, RZ2):
    assert LZ2.opposite() == RZ2


maps = st.integers(3, 4).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.lists(st.integers(0, k - 1), min_size=k, max_size=k),
                         min_size=1, max_size=3)))


@settings(max_examples=60, deadline=None)
@given(maps)
def test_transformation_semigroups_are_closed_and_associative(km):
    k, ms = km
    S = transformation_semigroup(k, ms, 300)
    assert naive_associative(S.table)


@settings(max_examples=60, deadline=None)
@given(maps, st.data())
def test_closure_is_idempotent(km, data):
    k, ms = km
    S = transformation_semigroup(k, ms, 300)
    X = data.draw(st.sets(st.integers(0, S.size - 1), min_size=1))
    C = closure(S, X)
    assert closure(S, C) == C and X <= C and product_set(S, C, C) <= C
