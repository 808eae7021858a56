import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sgchain.errors import EmptySubset
from sgchain.green import (
    Poset,
    _width_branch_and_bound,
    _width_matching,
    compute_green,
    down_sets,
    maximal_elements,
    maximum_antichain,
)

from .conftest import transformation_semigroup


def classes(S, parts):
    return sorted(sorted(S.labels[a] for a in c) for c in parts)


def test_left_zero_relations(LZ2):
    g = compute_green(LZ2)
    assert classes(LZ2, g.R) == [["x"], ["y"]]
    assert classes(LZ2, g.L) == [["x", "y"]]
    assert len(g.D) == len(g.J) == 1
    assert classes(LZ2, g.H) == [["x"], ["y"]]


def test_group_is_one_class_everywhere(C2):
    g = compute_green(C2)
    assert all(len(getattr(g, k)) == 1 for k in "RLJHD")


def test_null_semigroup_poset(N2):
    g = compute_green(N2)
    assert all(len(getattr(g, k)) == 2 for k in "RLJHD")
    z, u = g.r_of[N2.zero], g.r_of[N2.index("u")]
    assert g.r_poset.less(z, u) and not g.r_poset.less(u, z)
    assert maximal_elements(g.r_poset, {z, u}) == {u}


def chain(n):
    return Poset(n, np.array([[i <= j for j in range(n)] for i in range(n)]))


def antichain(n):
    return Poset(n, np.eye(n, dtype=bool))


def grid():
    pts = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return Poset(4, np.array([[p[0] <= q[0] and p[1] <= q[1] for q in pts] for p in pts]))


def test_maximal_elements():
    assert maximal_elements(chain(3), {0, 1, 2}) == {2}
    assert maximal_elements(antichain(3), {0, 1, 2}) == {0, 1, 2}
    with pytest.raises(EmptySubset):
        maximal_elements(chain(3), set())


def test_maximum_antichain_examples(rees_full):
    assert maximum_antichain(chain(5)) == {0}
    assert maximum_antichain(grid()) == {1, 2}
    g = compute_green(rees_full)
    A = maximum_antichain(g.r_poset)
    assert len(A) == 2 and g.r_of[rees_full.zero] not in A


def test_from_relation_closes_and_rejects_cycles():
    P = Poset.from_relation(3, [(0, 1), (1, 2)])
    assert P.leq[0, 2] and P.is_partial_order()
    with pytest.raises(Exception):
        Poset.from_relation(2, [(0, 1), (1, 0)])


def brute_width(P):
    for k in range(P.n, 0, -1):
        for xs in itertools.combinations(range(P.n), k):
            if P.is_antichain(xs):
                return k
    return 0


posets = st.integers(1, 9).flatmap(lambda n: st.lists(
    st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n).map(
    lambda pairs: Poset.from_relation(n, [(min(a, b), max(a, b)) for a, b in pairs if a != b])))


@settings(max_examples=150, deadline=None)
@given(posets)
def test_width_algorithms_agree_with_exhaustive_search(P):
    w = brute_width(P)
    cands = list(range(P.n))
    assert _width_branch_and_bound(P, cands) == w
    assert _width_matching(P, cands) == w
    A = maximum_antichain(P)
    assert len(A) == w and P.is_antichain(A)
    # lexicographic tie-break: no antichain of the same size is lexicographically smaller
    best = min(sorted(xs) for xs in itertools.combinations(range(P.n), w) if P.is_antichain(xs))
    assert sorted(A) == best


@settings(max_examples=40, deadline=None)
@given(posets)
def test_down_sets_are_down_closed(P):
    for ds in down_sets(P):
        assert ds
        for j in ds:
            assert all(i in ds for i in range(P.n) if P.leq[i, j])


transformations = st.integers(3, 4).flatmap(lambda k: st.tuples(
    st.just(k), st.lists(st.lists(st.integers(0, k - 1), min_size=k, max_size=k),
                         min_size=2, max_size=3)))


@settings(max_examples=60, deadline=None)
@given(transformations)
def test_green_laws_on_transformation_semigroups(km):
    k, ms = km
    S = transformation_semigroup(k, ms, 400)
    g = compute_green(S)
    n, t = S.size, S.table
    right = [frozenset(t[a]) | {a} for a in range(n)]
    left = [frozenset(t[s][a] for s in range(n)) | {a} for a in range(n)]
    R = np.array([[right[a] == right[b] for b in range(n)] for a in range(n)])
    L = np.array([[left[a] == left[b] for b in range(n)] for a in range(n)])
    H = np.array([[g.h_of[a] == g.h_of[b] for b in range(n)] for a in range(n)])
    D = np.array([[g.d_of[a] == g.d_of[b] for b in range(n)] for a in range(n)])
    assert np.array_equal(H, R & L)
    RL = (R.astype(int) @ L.astype(int)) > 0
    LR = (L.astype(int) @ R.astype(int)) > 0
    assert np.array_equal(D, RL) and np.array_equal(RL, LR)
    # R is compatible with left multiplication
    for a, b in zip(*np.nonzero(R)):
        assert all(R[t[s][a], t[s][b]] for s in range(n))
    # principal right ideals are unions of R-classes
    for I in right:
        assert all(g.r_class(x) <= I for x in I)
