import pytest
from hypothesis import given, strategies as st

from ngpd.groupoid import cyclic, nerve, spread
from ngpd.monotone import (MonotoneMap, act, codegeneracy, coface, compose_monotone, identity,
                           spine_edge, vertex)
from ngpd.simplicial import standard_simplex


def test_identity_composite():
    assert compose_monotone(identity(2), identity(2)) == identity(2)


def test_coface_then_codegeneracy_is_identity():
    f = compose_monotone(coface(1, 2), codegeneracy(0, 1))
    assert f.values == (0, 1)


def test_vertex_then_coface():
    # [0] -> [1] hitting 0, then [1] -> [2] missing 2
    assert compose_monotone(vertex(0, 1), coface(2, 2)).values == (0,)
    # the coface that misses 0 hits 1 instead
    assert compose_monotone(coface(0, 1), coface(2, 2)).values == (1,)


def test_rejects_bad_maps():
    with pytest.raises(ValueError):
        MonotoneMap(1, 2, (2, 1))
    with pytest.raises(ValueError):
        MonotoneMap(1, 1, (0, 2))
    with pytest.raises(ValueError):
        compose_monotone(identity(1), identity(2))


def monotone(m, n):
    return st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1).map(
        lambda v: MonotoneMap(m, n, tuple(sorted(v))))


@st.composite
def composable(draw):
    a, b, c = (draw(st.integers(0, 3)) for _ in range(3))
    return draw(monotone(a, b)), draw(monotone(b, c))


@given(composable())
def test_act_on_simplex_matches_vertex_lookup(fg):
    f, g = fg
    X = standard_simplex(3, 3)
    for c in X.cells[g.target_rank]:
        # oracle: a cell of the standard simplex is its vertex sequence
        expected = tuple(c[g(f(j))] for j in range(f.source_rank + 1))
        assert X.act(compose_monotone(f, g), c) == expected


@given(composable())
def test_act_is_contravariant_functor(fg):
    f, g = fg
    X = nerve(spread(cyclic(2), 2), 3)
    for c in X.cells[g.target_rank]:
        assert X.act(compose_monotone(f, g), c) == X.act(f, X.act(g, c))


def test_spine_edges_of_a_chain():
    X = nerve(cyclic(3), 3)
    c = (1, 2, 0)
    assert [X.act(spine_edge(i, 3), c) for i in range(3)] == [(1,), (2,), (0,)]
    assert act(identity(3), c, X.d, X.s) == c
