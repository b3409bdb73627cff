import pytest

from ngpd.corpus import nfunctor_corpus, two_groupoid_corpus
from ngpd.groupoid import (GroupoidFunctor, automorphism_group, compose_functors, cyclic,
                           discrete_groupoid,
                           disjoint_union, find_group_isomorphism, find_groupoid_isomorphism,
                           small_groups, spread, symmetric3, trivial_group)
from ngpd.multisimplicial import from_sset, lift
from ngpd.ngroupoid import (NGroupoid, arrow_object, compose_nfunctors, coproduct_ngroupoid,
                            functor_as_nfunctor, groupoid_as_ngroupoid, homotopy_group,
                            identity_arrow, identity_nfunctor, k2, k2_carrier, k2_functor,
                            lifted_functor, lifted_groupoid, n_equivalence, n_equivalence_report,
                            objects, pi0_set, product_ngroupoid, unit_check_n1,
                            unit_invariants_n2, validate_ngroupoid)
from ngpd.simplicial import standard_simplex

TWO_GROUPOIDS = two_groupoid_corpus()
Z2, Z3 = cyclic(2), cyclic(3)


def test_validation_examples():
    assert validate_ngroupoid(groupoid_as_ngroupoid(spread(Z2, 2))).ok
    assert validate_ngroupoid(k2(Z3)).ok
    bad = NGroupoid(1, from_sset(standard_simplex(2, 3)))
    report = validate_ngroupoid(bad)
    assert not report.ok and {v.rule for v in report} == {"G2"}


def test_k2_needs_abelian_group():
    with pytest.raises(ValueError):
        k2_carrier(symmetric3())


def test_objects():
    G = spread(Z2, 3)
    assert set(objects(lifted_groupoid(G))) == set(G.objects)
    assert objects(k2(Z2)) == ((),)
    P = product_ngroupoid(lifted_groupoid(discrete_groupoid("ab")), lifted_groupoid(spread(Z2, 2)))
    assert len(objects(P)) == 2 * 2


def test_arrow_objects():
    G = spread(Z2, 2)
    L = groupoid_as_ngroupoid(G)
    A = arrow_object(L, 0, 1)
    assert A.n == 0 and set(A.carrier.cells[()]) == {(f,) for f in G.hom(0, 1)}
    D = groupoid_as_ngroupoid(discrete_groupoid("ab"))
    assert arrow_object(D, "a", "b").carrier.cells[()] == ()
    with pytest.raises(KeyError):
        arrow_object(L, 0, 7)
    H = arrow_object(k2(Z3), (), ())
    assert H.n == 1 and H.ok
    assert len(H.groupoid.objects) == 1
    assert find_groupoid_isomorphism(H.groupoid, Z3) is not None


def test_pi0_sets():
    assert len(pi0_set(lifted_groupoid(spread(Z2, 2)))[0]) == 1
    two = coproduct_ngroupoid(lifted_groupoid(Z2), lifted_groupoid(Z3))
    assert len(pi0_set(two)[0]) == 2
    assert len(pi0_set(k2(Z2))[0]) == 1


def test_equivalence_examples():
    assert n_equivalence(identity_nfunctor(k2(Z2)))
    incl = GroupoidFunctor(Z2, spread(Z2, 2), {"*": 0}, {a: (0, a, 0) for a in Z2.morphism_list})
    assert n_equivalence(lifted_functor(incl))
    F = k2_functor(Z2, trivial_group(), {0: 0, 1: 0})
    w = n_equivalence_report(F)
    assert w is not None and "not injective" in w


@pytest.mark.parametrize("name,F,expected", nfunctor_corpus(), ids=lambda v: v if isinstance(v, str) else "")
def test_nfunctor_corpus_labels(name, F, expected):
    assert n_equivalence(F) == expected


def test_composition_closure():
    Z2pair = spread(Z2, 2)
    incl = GroupoidFunctor(Z2, Z2pair, {"*": 0}, {a: (0, a, 0) for a in Z2.morphism_list})
    back = GroupoidFunctor(Z2pair, Z2, {0: "*", 1: "*"}, {f: f[1] for f in Z2pair.morphism_list})
    F, K = lifted_functor(incl), lifted_functor(back)
    assert n_equivalence(compose_nfunctors(F, K))
    assert n_equivalence(compose_nfunctors(K, F))
    kill = GroupoidFunctor(Z2, trivial_group(), {"*": "*"}, {0: 0, 1: 0})
    assert not n_equivalence(compose_nfunctors(F, lifted_functor(compose_functors(back, kill))))


def test_pi1_of_groupoid_is_automorphism_group():
    G = disjoint_union(spread(Z2, 2), symmetric3())
    for L in (groupoid_as_ngroupoid(G), lifted_groupoid(G)):
        for x in G.objects:
            assert find_group_isomorphism(homotopy_group(L, x, 1), automorphism_group(G, x)) is not None


def test_homotopy_groups_of_k2():
    for name, A in small_groups():
        if A.order > 4 or not A.is_abelian():
            continue
        K = k2(A)
        assert homotopy_group(K, (), 1).order == 1
        assert find_group_isomorphism(homotopy_group(K, (), 2), A) is not None


def test_lifted_groupoid_has_trivial_pi2():
    L = lifted_groupoid(symmetric3())
    assert find_group_isomorphism(homotopy_group(L, "*", 1), symmetric3()) is not None
    assert homotopy_group(L, "*", 2).order == 1


def test_homotopy_group_degree_out_of_range():
    with pytest.raises(ValueError):
        homotopy_group(k2(Z2), (), 3)
    with pytest.raises(ValueError):
        homotopy_group(k2(Z2), (), 0)
    with pytest.raises(KeyError):
        homotopy_group(k2(Z2), "nope", 1)


@pytest.mark.parametrize("fx", TWO_GROUPOIDS, ids=lambda f: f.name)
def test_corpus_two_groupoid(fx):
    G = fx.value
    assert G.ok
    for x in objects(G):
        assert homotopy_group(G, x, 2).is_abelian()
        loops = arrow_object(G, x, x)
        assert loops.ok
        # loop shift: one step of the recursion unrolled
        lhs = homotopy_group(loops, identity_arrow(G, x), 1)
        assert find_group_isomorphism(lhs, homotopy_group(G, x, 2)) is not None
        for y in objects(G):
            A = arrow_object(G, x, y)
            if A.carrier.cells[(0,)]:
                assert A.ok


def test_unit_check_n1_examples():
    r = unit_check_n1(Z2)
    assert r.ok and r.checks[0].witness == "4 2-cells"
    r = unit_check_n1(discrete_groupoid("abc"))
    assert r.ok and dict(r.facts)["generators"] == "0"
    assert r.not_checked


def test_unit_invariants_n2_examples():
    r = unit_invariants_n2(k2(Z3))
    assert r.ok and "pi_2 comparison" in r.not_checked
    assert r.checks[-1].witness.startswith("ab=1 ")
    assert unit_invariants_n2(lifted_groupoid(symmetric3())).ok
    two = coproduct_ngroupoid(k2(Z2), lifted_groupoid(Z3))
    r = unit_invariants_n2(two)
    assert r.ok and r.checks[0].witness == "2 classes"


def test_lift_of_nongroupoid_is_invalid():
    G = NGroupoid(2, lift(standard_simplex(2, 3), 2))
    assert not G.ok
    with pytest.raises(ValueError):
        G.require_valid()


def test_functor_as_nfunctor_round_trip():
    F = functor_as_nfunctor(GroupoidFunctor(Z2, Z2, {"*": "*"}, {0: 0, 1: 1}))
    assert n_equivalence(F)
