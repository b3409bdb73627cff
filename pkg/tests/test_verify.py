import pytest

from ngpd.corpus import pullback_corpus, sset_corpus, terminal_map
from ngpd.groupoid import cyclic, disjoint_union, nerve, nerve_map, spread, trivial_group
from ngpd.groupoid import GroupoidFunctor
from ngpd.multisimplicial import (external_product, external_product_map, from_sset_map,
                                  identity_multimap, outer_face, outer_level)
from ngpd.ngroupoid import NGroupoid, k2, k2_carrier, lifted_groupoid
from ngpd.multisimplicial import lift
from ngpd.report import ERROR, FAIL
from ngpd.simplicial import (boundary_simplex, coproduct, discrete_sset, identity_map, pi0,
                             standard_simplex)
from ngpd.verify import (LevelCertificate, check_pr_weak_equiv, components_decomposition,
                         diag_fiber_product_check, levelwise_equiv_to_diag,
                         make_levelwise_certificate, segal_pi0_law, segal_report_for_P,
                         weak_equivalence_witness)

Z2, Z3 = cyclic(2), cyclic(3)


def test_decomposition_examples():
    X = nerve(Z3, 2)
    dec = components_decomposition(X)
    assert len(dec.components) == 1 and dec.components[0].counts() == X.counts()
    edges = coproduct(standard_simplex(1, 2), standard_simplex(1, 2))
    assert len(components_decomposition(edges).components) == 2
    G = disjoint_union(spread(trivial_group(), 2), trivial_group())
    dec = components_decomposition(nerve(G, 3))
    sizes = sorted(C.counts() for C in dec.components)
    # oracle: the contractible pair has 2^(k+1) chains of length k, the point has one
    assert sizes == [(1, 1, 1, 1), tuple(2 ** (k + 1) for k in range(4))]


def test_pr_checks_examples():
    r = check_pr_weak_equiv(discrete_sset([0, 1, 2], 2))
    assert r.ok and dict(r.facts)["zero_truncated"] == "true"
    r = check_pr_weak_equiv(coproduct(boundary_simplex(2, 2), standard_simplex(1, 2)))
    assert r.ok and dict(r.facts)["zero_truncated"] == "false"
    assert any("pi_i" in item for item in r.not_checked)


@pytest.mark.parametrize("fx", sset_corpus(0), ids=lambda f: f.name)
def test_pr_checks_on_corpus(fx):
    r = check_pr_weak_equiv(fx.value)
    assert r.ok
    assert dict(r.facts)["components"] == str(len(pi0(fx.value)))


def test_segal_pi0_law_examples():
    r = segal_pi0_law(external_product(nerve(Z2, 2), nerve(Z3, 2)))
    assert r.ok and dict(r.facts)["pi0(diag)"] == "1"
    r = segal_pi0_law(external_product(discrete_sset([0, 1], 2), nerve(Z3, 2)))
    assert r.ok and dict(r.facts)["pi0(diag)"] == dict(r.facts)["T(pi0)"] == "2"
    r = segal_pi0_law(k2_carrier(Z2, (2, 2)))
    assert r.ok and dict(r.facts)["T(pi0)"] == "1"


def product_map(G, H, H2, phi):
    """``N(G) x N(H) -> N(G) x N(H2)`` induced by a group homomorphism ``phi``."""
    F = GroupoidFunctor(H, H2, {"*": "*"}, phi)
    return external_product_map(from_sset_map(identity_map(nerve(G, 2))), from_sset_map(nerve_map(F, 2)))


def test_levelwise_transfer_examples():
    t = identity_multimap(external_product(nerve(Z2, 2), nerve(Z3, 2)))
    assert levelwise_equiv_to_diag(t, make_levelwise_certificate(t)).ok
    iso = product_map(Z2, Z3, Z3, {0: 0, 1: 2, 2: 1})
    assert levelwise_equiv_to_diag(iso, make_levelwise_certificate(iso)).ok
    collapse = product_map(Z3, Z2, trivial_group(), {0: 0, 1: 0})
    certs = make_levelwise_certificate(collapse)
    assert not certs[1].ok and "hom count" in certs[1].witness
    r = levelwise_equiv_to_diag(collapse, certs)
    assert r.verdict == FAIL and "PI_HIGHER" not in r.not_checked


def test_levelwise_transfer_certificate_errors():
    t = identity_multimap(external_product(nerve(Z2, 2), nerve(Z3, 2)))
    with pytest.raises(ValueError):
        levelwise_equiv_to_diag(t, {0: LevelCertificate(0, True)})
    forged = {m: LevelCertificate(m, m != 1, "forged") for m in range(3)}
    assert levelwise_equiv_to_diag(t, forged).verdict == ERROR


def test_weak_equivalence_witness_detects_pi0():
    X = discrete_sset([0, 1], 2)
    Y = discrete_sset([0], 2)
    from ngpd.simplicial import SSetMap
    f = SSetMap(X, Y, tuple({c: Y.cells[k][0] for c in X.cells[k]} for k in range(3)))
    assert "not injective" in weak_equivalence_witness(f)


def test_fiber_product_examples():
    A = external_product(nerve(Z2, 2), nerve(Z3, 2))
    f = terminal_map(A)
    assert diag_fiber_product_check(f, f)
    K = k2_carrier(Z2, (2, 2))
    P = external_product(nerve(Z2, 2), K)
    d0 = outer_face(P, 1, 0, outer_level(P, 1), outer_level(P, 0))
    d1 = outer_face(P, 1, 1, outer_level(P, 1), outer_level(P, 0))
    assert diag_fiber_product_check(d0, d1)


@pytest.mark.parametrize("name,f,g", pullback_corpus(), ids=lambda v: v if isinstance(v, str) else "")
def test_corpus_pullbacks(name, f, g):
    assert diag_fiber_product_check(f, g)


def test_segal_report_for_P_examples():
    r = segal_report_for_P(lifted_groupoid(spread(Z2, 2)))
    assert r.ok and len(r.checks) == 1 + 2 + 1
    assert segal_report_for_P(k2(Z3)).ok
    r = segal_report_for_P(NGroupoid(2, lift(standard_simplex(2, 3), 2)))
    assert r.verdict == FAIL and "G2" in r.checks[0].witness
    with pytest.raises(ValueError):
        segal_report_for_P(NGroupoid(1, k2_carrier(Z2)))
