import pytest
from hypothesis import given, strategies as st

from ngpd.corpus import bisimplicial_corpus
from ngpd.groupoid import cyclic, discrete_groupoid, iso_classes, nerve, spread, trivial_group
from ngpd.multisimplicial import (MultiSSet, MultiSSetMap, T_power, compose_multimaps,
                                  external_product, from_sset, identity_multimap, inner_diag, lift,
                                  outer_level, p_object, permute_axes, pi0_in_axis_order,
                                  pi0_innermost, to_sset, total_diag, truncate_T,
                                  validate_multimap, validate_multisset)
from ngpd.ngroupoid import k2_carrier
from ngpd.simplicial import (boundary_simplex, coproduct, discrete_sset, point, standard_simplex,
                             truncate, validate_sset)

BISIMPLICIAL = bisimplicial_corpus()


def test_product_of_intervals_is_valid():
    assert validate_multisset(external_product(standard_simplex(1, 2), standard_simplex(1, 2))).ok


def test_broken_commutation_names_axes_and_cell():
    P = external_product(standard_simplex(1, 1), standard_simplex(1, 1))
    faces = {k: dict(v) for k, v in P.faces.items()}
    cell = ((0, 1), (0, 1))
    faces[(0, (1, 1))][cell] = (((1,), (0, 0)), ((0,), (0, 1)))
    bad = MultiSSet(P.dim_bounds, P.cells, faces, P.degens)
    report = validate_multisset(bad)
    assert not report.ok
    assert any("axes (0,1)" in v.where and "((0,1),(0,1))" in v.where for v in report
               if v.rule.startswith("commute"))


def test_double_nerve_product():
    Z2 = cyclic(2)
    P = external_product(nerve(Z2, 2), nerve(Z2, 2))
    assert validate_multisset(P).ok
    assert len(P.cells[(1, 1)]) == 4


def test_outer_level_of_product_is_levelwise_product():
    X, Y = nerve(cyclic(3), 2), boundary_simplex(2, 2)
    P = external_product(X, Y)
    for m in range(3):
        L = outer_level(P, m)
        assert [len(L.cells[(k,)]) for k in range(3)] == [len(X.cells[m]) * n for n in Y.counts()]


def test_outer_level_zero_of_k2_is_constant():
    L = outer_level(k2_carrier(cyclic(2)), 0)
    assert [len(L.cells[(k,)]) for k in range(3)] == [1, 1, 1]


def test_outer_level_commutes_with_maps():
    P = external_product(nerve(cyclic(2), 2), standard_simplex(1, 2))
    f = identity_multimap(P)
    g = compose_multimaps(f, f)
    assert validate_multimap(g).ok
    for m in range(3):
        L = outer_level(P, m)
        restricted = MultiSSetMap(L, L, {J: dict(g.levels[(m,) + J]) for J in L.indices()})
        assert validate_multimap(restricted).ok


def test_diag_of_constant_inner_axis_is_outer_set():
    X = nerve(spread(cyclic(2), 2), 3)
    D = total_diag(lift(X, 2))
    Y = truncate(X, 2)
    assert D.cells == Y.cells and D.faces == Y.faces and D.degens == Y.degens


def test_iterated_pairwise_diagonal():
    P = external_product(external_product(nerve(cyclic(2), 2), standard_simplex(1, 2)),
                         boundary_simplex(2, 2))
    assert P.arity == 3
    a, b = total_diag(inner_diag(P)), total_diag(P)
    assert a.cells == b.cells and a.faces == b.faces and a.degens == b.degens


def test_point_is_unit():
    Y = nerve(cyclic(3), 2)
    P = external_product(point(2), Y)
    for k in range(3):
        assert len(P.cells[(0, k)]) == len(Y.cells[k])
    assert to_sset(outer_level(P, 0)).counts() == Y.counts()


def test_pi0_innermost_examples():
    # discrete along the last axis: classes are singletons
    P = lift(nerve(cyclic(2), 2), 2)
    t = pi0_innermost(P)
    assert all(len(part) == len(P.cells[I + (0,)]) for I, part in t.partitions.items())
    # one-object inner factor collapses to the outer nerve
    Q = external_product(nerve(cyclic(2), 2), nerve(cyclic(3), 2))
    T = truncate_T(Q)
    assert [len(T.cells[(m,)]) for m in range(3)] == list(nerve(cyclic(2), 2).counts())
    # constant along the last axis with two components
    R = lift(coproduct(standard_simplex(1, 2), point(2)), 2)
    assert len(T_power(R, 2).cells[()]) == 2


@pytest.mark.parametrize("G", [spread(cyclic(2), 2), discrete_groupoid("abc"),
                               spread(trivial_group(), 3)])
def test_truncation_of_nerve_is_iso_classes(G):
    assert len(T_power(from_sset(nerve(G, 2)), 1).cells[()]) == len(iso_classes(G))


def test_truncation_examples():
    assert T_power(k2_carrier(cyclic(3)), 2).cells[()] == ((),)
    P = from_sset(discrete_sset([0, 1, 2], 2))
    assert T_power(P, 1).cells[()] == P.cells[(0,)]


def test_p_object_of_product():
    X, Y = nerve(cyclic(2), 2), boundary_simplex(2, 2)
    p = p_object(external_product(X, Y))
    for m in range(3):
        assert p.level(m).counts() == tuple(len(X.cells[m]) * n for n in Y.counts())
        assert validate_sset(p.level(m)).ok


@pytest.mark.parametrize("fx", BISIMPLICIAL, ids=lambda f: f.name)
def test_corpus_objects_valid_and_truncation_order_free(fx):
    P = fx.value
    assert validate_multisset(P).ok
    assert pi0_in_axis_order(P, (1, 0)) == pi0_in_axis_order(P, (0, 1))


@given(st.sampled_from(BISIMPLICIAL))
def test_swapping_axes_twice_is_identity(fx):
    P = fx.value
    assert permute_axes(permute_axes(P, (1, 0)), (1, 0)) == P


def test_round_trip_through_one_fold():
    X = nerve(cyclic(3), 2)
    assert to_sset(from_sset(X)) == X
