from collections import deque

from hypothesis import given, strategies as st

from ngpd.groupoid import (cyclic, discrete_groupoid, disjoint_union, find_groupoid_isomorphism,
                           nerve, spread, trivial_group)
from ngpd.simplicial import (SimplicialSet, SSetMap, boundary_simplex, coproduct, discrete_sset,
                             fiber_product, horn, identity_map, is_nerve_of_groupoid, pi0, point,
                             segal_map, simplicial_complex, standard_simplex, validate_map,
                             validate_sset)


def test_interval_is_valid():
    X = standard_simplex(1, 2)
    assert validate_sset(X).ok
    assert X.counts() == (2, 3, 4)
    assert X.nondegenerate(1) == ((0, 1),)


def test_broken_face_is_reported_with_cell():
    X = standard_simplex(1, 2)
    faces = [dict(t) for t in X.faces]
    faces[1][(0, 1)] = ((0,), (1,))
    bad = SimplicialSet(2, X.cells, tuple(faces), X.degens)
    report = validate_sset(bad)
    assert not report.ok
    assert any("(0,1)" in v.where or "(0,1)" in v.witness for v in report)


def test_nerve_of_four_morphism_groupoid_is_valid():
    G = spread(trivial_group(), 2)
    assert G.order == 4
    assert validate_sset(nerve(G, 3)).ok


def test_pi0_examples():
    assert len(pi0(standard_simplex(1, 2))) == 1
    assert len(pi0(discrete_sset([0, 1], 2))) == 2
    G = disjoint_union(spread(trivial_group(), 2), trivial_group())
    classes = {frozenset(pi0(nerve(G, 2)).class_of(x)) for x in G.objects}
    a, b = spread(trivial_group(), 2).objects
    assert classes == {frozenset({(0, a), (0, b)}), frozenset({(1, "*")})}


def bfs_components(X):
    adj = {v: set() for v in X.cells[0]}
    for e in X.cells[1]:
        u, v = X.d(1, 1, e), X.d(1, 0, e)
        adj[u].add(v)
        adj[v].add(u)
    seen, count = set(), 0
    for v in X.cells[0]:
        if v in seen:
            continue
        count += 1
        queue = deque([v])
        seen.add(v)
        while queue:
            for w in adj[queue.popleft()]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return count


facets = st.lists(st.lists(st.integers(0, 5), min_size=1, max_size=3, unique=True), min_size=1, max_size=6)


@given(facets)
def test_random_complexes_are_valid_and_pi0_matches_bfs(fs):
    X = simplicial_complex(fs, 2)
    assert validate_sset(X).ok
    assert len(pi0(X)) == bfs_components(X)


def test_fiber_product_over_point_is_product():
    X, Y = standard_simplex(1, 2), boundary_simplex(2, 2)
    P = point(2)
    to_point = lambda Z: SSetMap(Z, P, tuple({c: P.cells[k][0] for c in Z.cells[k]} for k in range(3)))  # noqa: E731
    F = fiber_product(to_point(X), to_point(Y))
    assert F.sset.counts() == tuple(a * b for a, b in zip(X.counts(), Y.counts()))
    assert validate_sset(F.sset).ok
    assert validate_map(F.pr1).ok and validate_map(F.pr2).ok


def test_fiber_product_of_identities_is_diagonal():
    X = nerve(cyclic(3), 2)
    F = fiber_product(identity_map(X), identity_map(X))
    assert F.sset.counts() == X.counts()
    assert F.pr1.is_levelwise_bijective()


def test_fiber_product_of_nerves_over_trivial_group():
    Z2, one = cyclic(2), trivial_group()
    X, T = nerve(Z2, 2), nerve(one, 2)
    kill = SSetMap(X, T, tuple({c: T.cells[k][0] for c in X.cells[k]} for k in range(3)))
    F = fiber_product(kill, kill)
    assert len(F.sset.cells[1]) == 4


def test_segal_map_examples():
    X = nerve(cyclic(2), 3)
    S1 = segal_map(X, 1)
    assert all(S1.mapping[e] == (e,) for e in X.cells[1])
    S2 = segal_map(X, 2)
    assert len(S2.source) == len(S2.target) == 4 and S2.bijective
    L = horn(2, 1, 2)
    S = segal_map(L, 2)
    assert not S.surjective
    assert S.unfilled() == (((0, 1), (1, 2)),)


def test_nerve_recognition():
    r = is_nerve_of_groupoid(nerve(cyclic(2), 3))
    assert r.ok and find_groupoid_isomorphism(r.groupoid, cyclic(2)) is not None
    r = is_nerve_of_groupoid(standard_simplex(2, 2))
    assert not r.ok and r.is_category
    r = is_nerve_of_groupoid(discrete_sset([0, 1, 2], 3))
    assert r.ok and r.groupoid.order == 3
    assert not is_nerve_of_groupoid(boundary_simplex(2, 2)).ok


def test_coproduct_tags_parts():
    X = coproduct(point(1), point(1))
    assert X.cells[0] == ((0, (0,)), (1, (0,)))
    assert len(pi0(X)) == 2


def test_nerve_needs_two_cells_stored():
    r = is_nerve_of_groupoid(nerve(discrete_groupoid([0]), 1))
    assert not r.ok and "dim_bound" in r.reasons[0]
