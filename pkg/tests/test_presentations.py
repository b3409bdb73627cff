from itertools import product

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ngpd.groupoid import small_groups
from ngpd.presentations import (AbelianInvariants, FpGroup, abelianization, free_group,
                                free_reduce, group_invariants, hom_count, presentation_of,
                                simplify, smith_diagonal)

GROUPS = dict(small_groups())


def word(*letters):
    return tuple((g, e) for g, e in letters)


def test_abelianization_examples():
    assert abelianization(free_group(1)) == AbelianInvariants(1, ())
    assert abelianization(FpGroup(("a",), (word(("a", 1), ("a", 1)),))) == AbelianInvariants(0, (2,))
    P = FpGroup(("a", "b"), (word(("a", 1), ("b", 1), ("a", -1), ("b", -1)),
                             word(("a", 1),) * 3 + word(("b", 1),) * 3))
    assert abelianization(P) == AbelianInvariants(1, (3,))


def test_hom_count_examples():
    sq = FpGroup(("a",), (word(("a", 1), ("a", 1)),))
    assert hom_count(free_group(1), GROUPS["Z2"]) == 2
    assert hom_count(sq, GROUPS["Z3"]) == 1
    assert hom_count(sq, GROUPS["Z2"]) == 2


def sympy_factors(rows):
    M = Matrix(rows)
    if M.rows == 0 or all(x == 0 for x in M):
        return []
    S = smith_normal_form(M, domain=ZZ)
    return [abs(S[i, i]) for i in range(min(S.shape)) if S[i, i] != 0]


matrices = st.integers(1, 4).flatmap(lambda c: st.lists(
    st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=1, max_size=4))


@given(matrices)
def test_smith_diagonal_matches_sympy(rows):
    assert smith_diagonal(rows) == sympy_factors(rows)


def brute_hom_count(P, T):
    """Oracle: try every assignment of generators and multiply relators out."""
    count = 0
    e = T.identity_element()
    for images in product(T.morphism_list, repeat=len(P.generators)):
        val = dict(zip(P.generators, images))
        ok = True
        for w in P.relators:
            x = e
            for g, s in w:
                x = T.compose(x, val[g] if s == 1 else T.inverse[val[g]])
            if x != e:
                ok = False
                break
        count += ok
    return count


letters = st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1]))
presentations = st.lists(st.lists(letters, min_size=1, max_size=6), max_size=3).map(
    lambda rels: FpGroup(("a", "b", "c"), tuple(tuple(r) for r in rels)))


@given(presentations, st.sampled_from(["Z2", "Z3", "S3", "Q8"]))
def test_hom_count_matches_brute_force(P, target):
    T = GROUPS[target]
    assert hom_count(P, T) == brute_hom_count(P, T)


@given(presentations)
def test_simplify_preserves_invariants(P):
    Q = simplify(P)
    assert abelianization(Q) == abelianization(P)
    for name in ("Z2", "S3"):
        assert brute_hom_count(Q, GROUPS[name]) == brute_hom_count(P, GROUPS[name])


def brute_group_homs(G, H):
    """Oracle: homomorphisms between finite groups by backtracking over elements."""
    els = G.morphism_list
    out = 0
    f = {}

    def consistent():
        for a in f:
            for b in f:
                c = G.compose(a, b)
                if c in f and f[c] != H.compose(f[a], f[b]):
                    return False
        return True

    def rec(i):
        nonlocal out
        if i == len(els):
            out += 1
            return
        for h in H.morphism_list:
            f[els[i]] = h
            if consistent():
                rec(i + 1)
        del f[els[i]]

    rec(0)
    return out


@pytest.mark.parametrize("source", ["Z2", "Z4", "Z2xZ2", "S3"])
@pytest.mark.parametrize("target", ["Z2", "Z3", "Z4", "S3", "Q8"])
def test_multiplication_table_presentation(source, target):
    P = presentation_of(GROUPS[source])
    assert hom_count(P, GROUPS[target]) == brute_group_homs(GROUPS[source], GROUPS[target])


def test_known_abelianizations():
    expected = {"S3": (0, (2,)), "Q8": (0, (2, 2)), "D4": (0, (2, 2)), "Z6": (0, (6,)),
                "Z4xZ2": (0, (2, 4)), "1": (0, ())}
    for name, (rank, torsion) in expected.items():
        assert abelianization(presentation_of(GROUPS[name])) == AbelianInvariants(rank, torsion)


def test_invariants_separate_small_groups():
    invs = [group_invariants(presentation_of(G)) for _, G in small_groups()]
    assert len(set(invs)) == len(invs)


def test_free_reduce():
    assert free_reduce(word(("a", 1), ("b", 1), ("b", -1), ("a", -1), ("c", 1))) == word(("c", 1))
