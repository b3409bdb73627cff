"""Acceptance criteria as reports over the deterministic corpus."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ._util import cell_key, fmt
from .corpus import (bisimplicial_corpus, diag_pairs, equivalence_corpus, groupoid_corpus,
                     nfunctor_corpus, pullback_corpus, sset_corpus, two_groupoid_corpus, _group)
from .edgepath import edge_path_groupoid, vertex_group
from .groupoid import (direct_product, find_group_isomorphism, groups_isomorphic, is_equivalence,
                       nerve, product_groupoid)
from .multisimplicial import external_product, total_diag
from .ngroupoid import (PI_HIGHER, homotopy_group, k2, lifted_groupoid, n_equivalence_report,
                        objects, pi0_set, unit_check_n1)
from .oracles import enumerate_functors, has_equivalence_data
from .presentations import group_invariants, presentation_of
from .report import Report, check
from .simplicial import SSetMap, is_nerve_of_groupoid, pi0, segal_map, validate_map
from .verify import check_pr_weak_equiv, diag_fiber_product_check, segal_pi0_law

TITLES = {
    1: "nerve Segal exactness",
    2: "unit at n=1",
    3: "Segal pi0 law",
    4: "equivalence oracle agreement",
    5: "recursive homotopy groups",
    6: "diagonal realization",
    7: "strict diagonal/fiber-product law",
    8: "equivalence implies homotopy-group isomorphism",
    9: "component decomposition",
}


@dataclass
class Fixtures:
    """Corpus objects shared across criteria so validation caches are reused."""
    seed: int = 0

    @cached_property
    def groupoids(self):
        return groupoid_corpus(self.seed)

    @cached_property
    def two_groupoids(self):
        return two_groupoid_corpus()

    @cached_property
    def nfunctors(self):
        return nfunctor_corpus()


def criterion1(fx: Fixtures) -> Report:
    checks = []
    for name, G in fx.groupoids:
        X = nerve(G, 3)
        for m in (2, 3):
            S = segal_map(X, m)
            w = ""
            if not S.bijective:
                w = f"unfilled {fmt(S.unfilled()[0])}" if S.unfilled() else f"collision {fmt(S.collisions()[0])}"
            checks.append(check(f"{name}: segal m={m}", S.bijective, w))
        nr = is_nerve_of_groupoid(X)
        checks.append(check(f"{name}: nerve of a groupoid", nr.ok, "; ".join(nr.reasons[:2])))
    return Report("criterion 1", tuple(checks), (), (("groupoids", str(len(fx.groupoids))),))


def criterion2(fx: Fixtures) -> Report:
    checks = []
    for name, G in fx.groupoids:
        r = unit_check_n1(G)
        bad = r.failures()
        checks.append(check(f"{name}: unit-n1", r.ok, f"{bad[0].id}: {bad[0].witness}" if bad else ""))
    return Report("criterion 2", tuple(checks), (PI_HIGHER,))


def criterion3(fx: Fixtures) -> Report:
    checks = []
    disconnected = 0
    for f in bisimplicial_corpus():
        r = segal_pi0_law(f.value)
        facts = dict(r.facts)
        disconnected += facts["pi0(diag)"] != "1"
        bad = r.failures()
        checks.append(check(f"{f.name}", r.ok, bad[0].witness if bad else "",
                            f"{facts['pi0(diag)']} classes: {facts['bijection']}"))
    return Report("criterion 3", tuple(checks), (),
                  (("objects", str(len(checks))), ("disconnected", str(disconnected))))


def criterion4(fx: Fixtures) -> Report:
    corpus = equivalence_corpus()
    total = equivalences = 0
    disagreements = []
    for gname, G in corpus:
        for hname, H in corpus:
            for F in enumerate_functors(G, H):
                total += 1
                fast, slow = is_equivalence(F), has_equivalence_data(F)
                equivalences += fast
                if fast != slow:
                    disagreements.append(f"{gname}->{hname} objects {fmt(F.object_map)}: "
                                         f"checker {fast}, oracle {slow}")
    checks = (check("checker agrees with quasi-inverse search", not disagreements,
                    disagreements[0] if disagreements else "",
                    f"{total} functors, {equivalences} equivalences"),)
    facts = (("pairs", str(len(corpus) ** 2)), ("functors", str(total)),
             ("equivalences", str(equivalences)), ("disagreements", str(len(disagreements))))
    return Report("criterion 4", checks, (), facts)


PI1_GROUPS = ("1", "Z2", "Z3", "Z4", "Z2xZ2", "S3")
PI2_GROUPS = ("Z2", "Z3", "Z2xZ2")


def criterion5(fx: Fixtures) -> Report:
    checks = []
    for name in PI1_GROUPS:
        A = _group(name)
        L = lifted_groupoid(A)
        (x,) = objects(L)
        iso = find_group_isomorphism(homotopy_group(L, x, 1), A)
        checks.append(check(f"pi1(lift {name}) = {name}", iso is not None, "no table isomorphism"))
    for name in PI2_GROUPS:
        A = _group(name)
        K = k2(A)
        (x,) = objects(K)
        p1 = homotopy_group(K, x, 1)
        checks.append(check(f"pi1(K({name},2)) trivial", p1.order == 1, f"order {p1.order}"))
        iso = find_group_isomorphism(homotopy_group(K, x, 2), A)
        checks.append(check(f"pi2(K({name},2)) = {name}", iso is not None, "no table isomorphism"))
    for f in fx.two_groupoids:
        G = f.value
        if not G.ok:
            continue
        bad = [x for x in objects(G) if not homotopy_group(G, x, 2).is_abelian()]
        checks.append(check(f"{f.name}: pi2 abelian", not bad, f"base point {fmt(bad[0])}" if bad else ""))
    return Report("criterion 5", tuple(checks))


def product_nerve_iso(G, H, D: int = 3) -> SSetMap:
    """``diag(N G ⊠ N H) -> N(G x H)``: zip the two chains."""
    X = total_diag(external_product(nerve(G, D), nerve(H, D)))
    Y = nerve(product_groupoid(G, H), D)
    levels = [{c: c for c in X.cells[0]}]
    levels += [{c: tuple(zip(c[0], c[1])) for c in X.cells[k]} for k in range(1, D + 1)]
    return SSetMap(X, Y, tuple(levels))


def criterion6(fx: Fixtures) -> Report:
    checks = []
    for a, b in diag_pairs():
        G, H = _group(a), _group(b)
        f = product_nerve_iso(G, H)
        iso = validate_map(f).ok and f.is_levelwise_bijective()
        checks.append(check(f"diag(N {a} x N {b}) = N({a}x{b}) up to D=3", iso,
                            "zip map is not a simplicial isomorphism"))
        if G.is_abelian() and H.is_abelian():
            X = f.source
            (v,) = X.cells[0]
            mine = group_invariants(vertex_group(edge_path_groupoid(X), v))
            theirs = group_invariants(presentation_of(direct_product(G, H)))
            checks.append(check(f"pi1 invariants of diag = {a}x{b}", mine == theirs,
                                f"abelianization {mine[0]} vs {theirs[0]}", str(mine[0])))
    return Report("criterion 6", tuple(checks), (PI_HIGHER,))


def criterion7(fx: Fixtures) -> Report:
    checks = tuple(check(name, diag_fiber_product_check(f, g), "cells or structure maps differ")
                   for name, f, g in pullback_corpus())
    return Report("criterion 7", checks)


def invariant_difference(F) -> str | None:
    """First ``pi0_set`` or ``pi_i`` difference between source and target of an n-functor."""
    S, T = F.source, F.target
    cs, _ = pi0_set(S)
    ct, _ = pi0_set(T)
    if len(cs) != len(ct):
        return f"pi0_set sizes {len(cs)} vs {len(ct)}"
    obj = F.carrier_map.levels[(0,) * S.n]
    for x in sorted(objects(S), key=cell_key):
        for i in range(1, S.n + 1):
            if not groups_isomorphic(homotopy_group(S, x, i), homotopy_group(T, obj[x], i)):
                return f"pi{i} at {fmt(x)}"
    return None


def criterion8(fx: Fixtures) -> Report:
    checks = []
    for name, F, expected in fx.nfunctors:
        w = n_equivalence_report(F)
        checks.append(check(f"{name}: verdict", (w is None) == expected,
                            f"expected equivalence={expected}, witness {w}"))
        diff = invariant_difference(F)
        if w is None:
            checks.append(check(f"{name}: invariants preserved", diff is None, diff or ""))
        else:
            detail = f"invariant {diff}" if diff else f"recursion {w}"
            checks.append(check(f"{name}: failure witnessed", True, detail=detail))
    return Report("criterion 8", tuple(checks), (PI_HIGHER,))


def criterion9(fx: Fixtures) -> Report:
    checks = []
    for f in sset_corpus(fx.seed):
        r = check_pr_weak_equiv(f.value)
        facts = dict(r.facts)
        bad = r.failures()
        checks.append(check(f"{f.name}: pr1", r.ok, bad[0].witness if bad else ""))
        n = len(pi0(f.value))
        checks.append(check(f"{f.name}: components", facts["components"] == str(n),
                            f"{facts['components']} components, {n} union-find classes"))
        want = "true" if "homotopy-discrete" in f.tags else "false"
        checks.append(check(f"{f.name}: zero_truncated", facts["zero_truncated"] == want,
                            f"flag {facts['zero_truncated']}, expected {want}"))
    return Report("criterion 9", tuple(checks))


CRITERIA = {1: criterion1, 2: criterion2, 3: criterion3, 4: criterion4, 5: criterion5,
            6: criterion6, 7: criterion7, 8: criterion8, 9: criterion9}


def run_criterion(k: int, fx: Fixtures | None = None) -> Report:
    return CRITERIA[k](fx or Fixtures())


def run_suite(seed: int = 0) -> list:
    fx = Fixtures(seed)
    return [CRITERIA[k](fx) for k in sorted(CRITERIA)]
