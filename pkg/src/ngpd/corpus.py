"""Deterministic fixtures for the test suites and the ``suite`` command."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .groupoid import (FinGroupoid, GroupoidFunctor, action_groupoid, discrete_groupoid,
                       disjoint_union, identity_functor, nerve, small_groups, spread)
from .io import to_document
from .multisimplicial import (MultiSSet, MultiSSetMap, external_product, identity_multimap, lift,
                              multi_coproduct, outer_face, outer_level)
from .ngroupoid import (coproduct_ngroupoid, functor_as_nfunctor, identity_nfunctor, k2, k2_carrier,
                        k2_functor, lifted_functor, lifted_groupoid, product_ngroupoid)
from .simplicial import boundary_simplex, coproduct, discrete_sset, horn, standard_simplex


@dataclass(frozen=True)
class Fixture:
    name: str
    value: object
    tags: frozenset = field(default_factory=frozenset)


def _group(name: str) -> FinGroupoid:
    return dict(small_groups())[name]


# ----------------------------------------------------------------- groupoids

def fixed_groupoids() -> list:
    g = _group
    return [
        ("trivial", g("1")), ("Z2", g("Z2")), ("Z3", g("Z3")), ("Z4", g("Z4")),
        ("Z2xZ2", g("Z2xZ2")), ("S3", g("S3")), ("Z8", g("Z8")), ("D4", g("D4")), ("Q8", g("Q8")),
        ("discrete3", discrete_groupoid(["a", "b", "c"])),
        ("iso_pair", spread(g("1"), 2)),
        ("iso_pair+point", disjoint_union(spread(g("1"), 2), g("1"))),
        ("Z2_on_2", spread(g("Z2"), 2)),
        ("Z3_on_2", spread(g("Z3"), 2)),
        ("Z4_on_2", spread(g("Z4"), 2)),
        ("trivial_on_3", spread(g("1"), 3)),
        ("Z2_on_2+Z2", disjoint_union(spread(g("Z2"), 2), g("Z2"))),
        ("Z4_acting_on_2", action_groupoid(g("Z4"), [0, 1], lambda a, p: (p + a) % 2)),
    ]


def random_groupoid(rng: random.Random, max_objects: int = 5, max_morphisms: int = 16) -> FinGroupoid:
    """A disjoint union of groups spread over 1-3 objects, within the budgets."""
    pool = [name for name, G in small_groups() if G.order <= 4]
    pieces = []
    objs = mors = 0
    while True:
        options = [(name, k) for name in pool for k in (1, 2, 3)
                   if objs + k <= max_objects and mors + _group(name).order * k * k <= max_morphisms]
        if not options or (pieces and rng.random() < 0.35):
            break
        name, k = rng.choice(options)
        pieces.append(spread(_group(name), k))
        objs += k
        mors += _group(name).order * k * k
    return disjoint_union(*pieces)


def groupoid_corpus(seed: int = 0, extra: int = 8) -> list:
    rng = random.Random(seed)
    out = fixed_groupoids()
    out += [(f"random{seed}_{i}", random_groupoid(rng)) for i in range(extra)]
    return out


def equivalence_corpus() -> list:
    """Groupoids with at most 3 objects and 8 morphisms."""
    g = _group
    return [
        ("trivial", g("1")), ("Z2", g("Z2")), ("Z3", g("Z3")), ("Z4", g("Z4")),
        ("Z2xZ2", g("Z2xZ2")), ("S3", g("S3")),
        ("discrete2", discrete_groupoid([0, 1])), ("discrete3", discrete_groupoid([0, 1, 2])),
        ("iso_pair", spread(g("1"), 2)), ("Z2_on_2", spread(g("Z2"), 2)),
        ("Z2+point", disjoint_union(g("Z2"), g("1"))),
        ("iso_pair+point", disjoint_union(spread(g("1"), 2), g("1"))),
    ]


# ----------------------------------------------------------- simplicial sets

def sset_corpus(seed: int = 0, D: int = 2) -> list:
    """Fixtures tagged ``homotopy-discrete`` when every component has trivial π₁."""
    hd = frozenset({"homotopy-discrete"})
    out = [
        Fixture("point", discrete_sset([0], D), hd),
        Fixture("three_points", discrete_sset([0, 1, 2], D), hd),
        Fixture("simplex1", standard_simplex(1, D), hd),
        Fixture("simplex2", standard_simplex(2, D), hd),
        Fixture("horn2_1", horn(2, 1, D), hd),
        Fixture("simplex1+point", coproduct(standard_simplex(1, D), discrete_sset([0], D)), hd),
        Fixture("boundary2", boundary_simplex(2, D)),
        Fixture("boundary2+simplex1", coproduct(boundary_simplex(2, D), standard_simplex(1, D))),
        Fixture("boundary2+boundary2", coproduct(boundary_simplex(2, D), boundary_simplex(2, D))),
    ]
    for name, G in groupoid_corpus(seed):
        trivial = all(len(G.hom(x, x)) == 1 for x in G.objects)
        out.append(Fixture(f"nerve_{name}", nerve(G, D), hd if trivial else frozenset()))
    return out


def spine_failure_examples(D: int = 2) -> list:
    """Simplicial sets whose Segal map at ``m = 2`` is not surjective."""
    return [("horn2_1", horn(2, 1, D)), ("boundary2", boundary_simplex(2, D))]


# ------------------------------------------------------------ bisimplicial

def bisimplicial_corpus(D: int = 2) -> list:
    g = _group
    N = lambda G: nerve(G, D)  # noqa: E731
    out = [
        Fixture("N(Z2)xN(Z3)", external_product(N(g("Z2")), N(g("Z3")))),
        Fixture("N(Z2)xN(Z2)", external_product(N(g("Z2")), N(g("Z2")))),
        Fixture("disc2xN(Z3)", external_product(discrete_sset([0, 1], D), N(g("Z3"))), frozenset({"disconnected"})),
        Fixture("N(Z2)xdisc2", external_product(N(g("Z2")), discrete_sset([0, 1], D)), frozenset({"disconnected"})),
        Fixture("N(iso_pair+pt)xN(Z2)", external_product(N(disjoint_union(spread(g("1"), 2), g("1"))), N(g("Z2"))),
                frozenset({"disconnected"})),
        Fixture("boundary2xsimplex1", external_product(boundary_simplex(2, D), standard_simplex(1, D))),
        Fixture("horn2_1xboundary2", external_product(horn(2, 1, D), boundary_simplex(2, D))),
        Fixture("K(Z2,2)", k2_carrier(g("Z2"), (D, D))),
        Fixture("K(Z3,2)", k2_carrier(g("Z3"), (D, D))),
        Fixture("lift(N(Z2_on_2+1))", lift(N(disjoint_union(spread(g("Z2"), 2), g("1"))), D),
                frozenset({"disconnected"})),
        Fixture("K(Z2,2)+N(Z2)xN(Z3)", multi_coproduct(k2_carrier(g("Z2"), (D, D)),
                                                      external_product(N(g("Z2")), N(g("Z3")))),
                frozenset({"disconnected"})),
        Fixture("disc3xdisc2", external_product(discrete_sset([0, 1, 2], D), discrete_sset([0, 1], D)),
                frozenset({"disconnected"})),
    ]
    return out


# ---------------------------------------------------------------- 2-groupoids

def two_groupoid_corpus() -> list:
    g = _group
    return [
        Fixture("lift(trivial)", lifted_groupoid(g("1"))),
        Fixture("lift(Z2)", lifted_groupoid(g("Z2"))),
        Fixture("lift(Z3)", lifted_groupoid(g("Z3"))),
        Fixture("lift(S3)", lifted_groupoid(g("S3"))),
        Fixture("lift(Z2_on_2)", lifted_groupoid(spread(g("Z2"), 2))),
        Fixture("lift(Z2+point)", lifted_groupoid(disjoint_union(g("Z2"), g("1")))),
        Fixture("K(Z2,2)", k2(g("Z2"))),
        Fixture("K(Z3,2)", k2(g("Z3"))),
        Fixture("K(Z2xZ2,2)", k2(g("Z2xZ2"))),
        Fixture("K(Z2,2)+lift(Z3)", coproduct_ngroupoid(k2(g("Z2")), lifted_groupoid(g("Z3")))),
        Fixture("K(Z2,2)*lift(Z2)", product_ngroupoid(k2(g("Z2")), lifted_groupoid(g("Z2")))),
    ]


def nfunctor_corpus() -> list:
    """``(name, functor, is_equivalence)`` triples at ``n = 1`` and ``n = 2``."""
    g = _group
    Z2, Z3, one = g("Z2"), g("Z3"), g("1")
    pair = spread(Z2, 2)
    # skeleton inclusion Z2 -> Z2_on_2 at object 0
    incl = GroupoidFunctor(Z2, pair, {"*": 0}, {a: (0, a, 0) for a in Z2.morphism_list})
    # collapse Z2_on_2 -> Z2
    collapse = GroupoidFunctor(pair, Z2, {0: "*", 1: "*"}, {f: f[1] for f in pair.morphism_list})
    kill = GroupoidFunctor(Z2, one, {"*": "*"}, {a: 0 for a in Z2.morphism_list})
    unit = GroupoidFunctor(one, Z2, {"*": "*"}, {0: 0})
    two = discrete_groupoid([0, 1])
    fold = GroupoidFunctor(two, one, {0: "*", 1: "*"}, {("id", 0): 0, ("id", 1): 0})
    neg = {a: (-a) % 3 for a in Z3.morphism_list}
    return [
        ("n1:id(S3)", functor_as_nfunctor(identity_functor(g("S3"))), True),
        ("n1:skeleton", functor_as_nfunctor(incl), True),
        ("n1:collapse", functor_as_nfunctor(collapse), True),
        ("n1:Z2->1", functor_as_nfunctor(kill), False),
        ("n1:1->Z2", functor_as_nfunctor(unit), False),
        ("n1:fold", functor_as_nfunctor(fold), False),
        ("n2:id(K(Z3,2))", identity_nfunctor(k2(Z3)), True),
        ("n2:K(neg)", k2_functor(Z3, Z3, neg), True),
        ("n2:lift(skeleton)", lifted_functor(incl), True),
        ("n2:lift(collapse)", lifted_functor(collapse), True),
        ("n2:K(Z2)->K(1)", k2_functor(Z2, one, {0: 0, 1: 0}), False),
        ("n2:K(1)->K(Z2)", k2_functor(one, Z2, {0: 0}), False),
        ("n2:lift(Z2->1)", lifted_functor(kill), False),
        ("n2:lift(fold)", lifted_functor(fold), False),
    ]


# ------------------------------------------------------------------ pullbacks

def terminal_map(P: MultiSSet) -> MultiSSetMap:
    bounds = P.dim_bounds
    T = MultiSSet.from_functions(bounds, lambda idx: ["*"], lambda a, idx, i, c: "*",
                                 lambda a, idx, i, c: "*")
    return MultiSSetMap(P, T, {idx: {c: "*" for c in cs} for idx, cs in P.cells.items()})


def _retarget(f: MultiSSetMap, target: MultiSSet) -> MultiSSetMap:
    return MultiSSetMap(f.source, target, f.levels)


def pullback_corpus(D: int = 2) -> list:
    """``(name, f, g)`` with a common target."""
    g = _group
    out = []
    A = external_product(nerve(g("Z2"), D), nerve(g("Z3"), D))
    B = external_product(boundary_simplex(2, D), standard_simplex(1, D))
    fa, fb = terminal_map(A), terminal_map(B)
    out.append(("terminal: N(Z2)xN(Z3) , boundary2xsimplex1", fa, _retarget(fb, fa.target)))
    K = k2_carrier(g("Z2"), (D, D))
    out.append(("terminal: K(Z2,2) , N(Z2)xN(Z3)", terminal_map(K), _retarget(terminal_map(A), terminal_map(K).target)))
    # projection pullbacks: N(G)xN(H) -> N(G)xpoint along two maps
    idA = identity_multimap(A)
    out.append(("identity pair", idA, idA))
    # spine pullbacks of arity-3 objects over their outer level 0
    for name, P in (("N(Z2)xK(Z2,2)", external_product(nerve(g("Z2"), D), K)),
                    ("lift(K(Z2,2))", lift(K, D)),
                    ("N(Z2)xN(Z2)xsimplex1", external_product(external_product(nerve(g("Z2"), D),
                                                                               nerve(g("Z2"), D)),
                                                              standard_simplex(1, D)))):
        level1, level0 = outer_level(P, 1), outer_level(P, 0)
        d0 = outer_face(P, 1, 0, level1, level0)
        d1 = outer_face(P, 1, 1, level1, level0)
        out.append((f"spine: {name}", d0, d1))
    return out


def diag_pairs() -> list:
    """Pairs ``(G, H)`` of abelian groups for the diagonal realization check."""
    return [("Z2", "Z3"), ("Z2", "Z2"), ("Z3", "1"), ("Z4", "Z2")]


# --------------------------------------------------------------- documents

SIZE_CLASSES = ("small", "standard")


def generate_corpus(seed: int = 0, size_class: str = "small") -> list:
    """Corpus documents; ``small`` is a fixed list, ``standard`` adds seeded random groupoids."""
    if size_class not in SIZE_CLASSES:
        raise ValueError(f"unknown size class {size_class!r}")
    docs = []

    def add(name, value):
        docs.append(to_document(value, name=name, seed=str(seed), provenance="ngpd.corpus"))

    extra = 0 if size_class == "small" else 8
    for name, G in groupoid_corpus(seed, extra):
        add(f"groupoid/{name}", G)
        add(f"nerve/{name}", nerve(G, 3))
    for name, X in spine_failure_examples():
        add(f"spine-failure/{name}", X)
    for fx in bisimplicial_corpus():
        add(f"bisimplicial/{fx.name}", fx.value)
    for fx in two_groupoid_corpus():
        add(f"2-groupoid/{fx.name}", fx.value)
    for name, F, _ in nfunctor_corpus():
        add(f"nfunctor/{name}", F)
    return docs
