"""n-groupoids on n-fold simplicial carriers.

A carrier of arity ``n`` is an ``n``-groupoid when

* (G0) its outer level 0 is iso-constant: every inner structure map there is
  a bijection, so its cells at ``(0, ..., 0)`` are the objects;
* (G1) every outer Segal map ``Φ_m -> Φ_1 x_{Φ_0} ... x_{Φ_0} Φ_1``
  (``m >= 2``) is an ``(n-1)``-equivalence, a bijection when ``n = 1``;
* (G2) ``T^{n-1}`` of the carrier is the nerve of a groupoid;
* (G3) every outer level is an ``(n-1)``-groupoid.

A 0-groupoid is a finite set.  Equivalences are recursive: surjective on
``T^n`` and an ``(n-1)``-equivalence on every arrow object.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from ._util import cell_key, fmt
from .edgepath import edge_path_groupoid, edge_word, vertex_group
from .groupoid import (FinGroupoid, GroupoidFunctor, automorphism_group, equivalence_witness,
                       nerve, nerve_map)
from .multisimplicial import (MultiSSet, MultiSSetMap, T_power, T_power_map,
                              T_power_with_quotient, lift, lift_map, outer_level,
                              outer_segal_map, put, to_sset, total_diag,
                              validate_multimap, validate_multisset, vertex_restriction,
                              levelwise_product, from_sset, from_sset_map)
from .presentations import evaluate_word, group_invariants, presentation_of
from .report import Report, check
from .simplicial import ValidationReport, Violation, is_nerve_of_groupoid, pi0

PI_HIGHER = "pi_i for i >= 2 of the realization (not finitely checkable here)"


# ------------------------------------------------------------ arrow objects

def object_of(P: MultiSSet, J: tuple, z):
    """The object (level ``(0,...,0)`` cell) under a cell ``z`` at outer index 0 and inner ``J``."""
    idx = (0,) + J
    return vertex_restriction(P, idx, z, range(1, P.arity))[1]


def arrow_endpoints(P: MultiSSet) -> dict:
    """For every outer-level-1 cell: ``(source object, target object)``."""
    out = {}
    for J in outer_level(P, 1).indices() if P.arity > 1 else [()]:
        idx = (1,) + J
        for c in P.cells[idx]:
            out[(J, c)] = (object_of(P, J, P.d(0, idx, 1, c)), object_of(P, J, P.d(0, idx, 0, c)))
    return out


def sub_multisset(P: MultiSSet, keep: dict) -> MultiSSet:
    """Restrict ``P`` to ``keep[idx]`` at every index (must be closed under structure maps)."""
    faces = {k: {c: tab[c] for c in keep[k[1]]} for k, tab in P.faces.items()}
    degens = {k: {c: tab[c] for c in keep[k[1]]} for k, tab in P.degens.items()}
    return MultiSSet(P.dim_bounds, {idx: tuple(keep[idx]) for idx in P.indices()}, faces, degens)


def arrow_objects(P: MultiSSet) -> dict:
    """All nonempty arrow carriers of ``P`` keyed by ``(x, y)``."""
    level1 = outer_level(P, 1)
    groups = defaultdict(lambda: defaultdict(list))
    for (J, c), ends in arrow_endpoints(P).items():
        groups[ends][J].append(c)
    return {ends: sub_multisset(level1, {J: by_J.get(J, ()) for J in level1.indices()})
            for ends, by_J in groups.items()}


def arrow_carrier(P: MultiSSet, x, y) -> MultiSSet:
    level1 = outer_level(P, 1)
    keep = {J: [c for c in level1.cells[J]] for J in level1.indices()}
    ends = arrow_endpoints(P)
    keep = {J: [c for c in cs if ends[(J, c)] == (x, y)] for J, cs in keep.items()}
    return sub_multisset(level1, keep)


def restrict_map(f: MultiSSetMap, source: MultiSSet, target: MultiSSet) -> MultiSSetMap:
    return MultiSSetMap(source, target, {idx: {c: f.levels[idx][c] for c in source.cells[idx]}
                                         for idx in source.indices()})


def outer_level_map(f: MultiSSetMap, m: int) -> MultiSSetMap:
    src, tgt = outer_level(f.source, m), outer_level(f.target, m)
    return MultiSSetMap(src, tgt, {J: dict(f.levels[(m,) + J]) for J in src.indices()})


# ------------------------------------------------------------ equivalences

def equivalence_report(f: MultiSSetMap, k: int) -> str | None:
    """``None`` if ``f`` is a ``k``-equivalence, else a witness of the first failure."""
    X, Y = f.source, f.target
    if k == 0:
        image = [f.levels[()][c] for c in X.cells[()]]
        if len(set(image)) != len(image):
            return "not injective on elements"
        missed = sorted(set(Y.cells[()]) - set(image), key=cell_key)
        if missed:
            return f"element {fmt(missed[0])} not hit"
        return None
    Tf = T_power_map(f, k)
    hit = set(Tf.levels[()].values())
    for r in Tf.target.cells[()]:
        if r not in hit:
            return f"pi0 not surjective: class {fmt(r)} missed"
    zero = (0,) * k
    fobj = f.levels[zero]
    src_arrows, tgt_arrows = arrow_objects(X), arrow_objects(Y)
    preimage = defaultdict(list)
    for x in X.cells[zero]:
        preimage[fobj[x]].append(x)
    for (u, v) in tgt_arrows:
        for x in preimage.get(u, ()):
            for y in preimage.get(v, ()):
                if (x, y) not in src_arrows:
                    return f"arrow object ({fmt(x)},{fmt(y)}) empty, image ({fmt(u)},{fmt(v)}) is not"
    level1 = outer_level_map(f, 1)
    for (x, y) in sorted(src_arrows, key=cell_key):
        A = src_arrows[(x, y)]
        B = tgt_arrows.get((fobj[x], fobj[y]))
        if B is None:
            return f"arrows ({fmt(x)},{fmt(y)}) have no image arrows"
        w = equivalence_report(restrict_map(level1, A, B), k - 1)
        if w is not None:
            return f"on arrows ({fmt(x)},{fmt(y)}): {w}"
    return None


# ---------------------------------------------------------------- NGroupoid

@dataclass(frozen=True)
class NValidation:
    report: ValidationReport
    groupoid: FinGroupoid | None  # the groupoid read off T^{n-1}, when (G2) holds


def check_iso_constant(P: MultiSSet) -> list:
    """(G0): all inner structure maps on outer level 0 are bijections."""
    out = []
    base = outer_level(P, 0)
    for J in base.indices():
        for a, m in enumerate(J):
            size = len(base.cells[J])
            if m >= 1:
                for i in range(m + 1):
                    img = {base.d(a, J, i, c) for c in base.cells[J]}
                    if len(img) != size or len(base.cells[put(J, a, m - 1)]) != size:
                        out.append(Violation("G0", f"outer level 0, inner index ({','.join(map(str, J))})",
                                             f"d{i} on axis {a + 1} is not a bijection"))
            if m < base.dim_bounds[a]:
                for i in range(m + 1):
                    img = {base.s(a, J, i, c) for c in base.cells[J]}
                    if len(img) != size or len(base.cells[put(J, a, m + 1)]) != size:
                        out.append(Violation("G0", f"outer level 0, inner index ({','.join(map(str, J))})",
                                             f"s{i} on axis {a + 1} is not a bijection"))
    return out


def _validate(n: int, P: MultiSSet) -> NValidation:
    if P.arity != n:
        return NValidation(ValidationReport((Violation("shape", "carrier", f"arity {P.arity} != {n}"),)), None)
    base = validate_multisset(P)
    if not base.ok:
        return NValidation(base, None)
    if n == 0:
        return NValidation(ValidationReport(()), None)
    out = check_iso_constant(P)
    if P.dim_bounds[0] < 2:
        out.append(Violation("G2", "outer axis", "outer bound < 2: composition not stored"))
        return NValidation(ValidationReport(tuple(out)), None)
    for m in range(2, P.dim_bounds[0] + 1):
        w = equivalence_report(outer_segal_map(P, m), n - 1)
        if w is not None:
            out.append(Violation("G1", f"outer level {m}", f"Segal map is not an equivalence: {w}"))
    groupoid = None
    if n > 1 and any(b < 1 for b in P.dim_bounds[1:]):
        out.append(Violation("G2", "inner axes", "inner bounds must be >= 1 to truncate"))
    else:
        nr = is_nerve_of_groupoid(to_sset(T_power(P, n - 1)))
        if nr.ok:
            groupoid = nr.groupoid
        else:
            out.append(Violation("G2", f"T^{n - 1}", "; ".join(nr.reasons[:3])))
    if n > 1:
        for m in range(P.dim_bounds[0] + 1):
            sub = _validate(n - 1, outer_level(P, m))
            for v in sub.report.violations[:3]:
                out.append(Violation("G3", f"outer level {m}", f"{v.rule} at {v.where}: {v.witness}"))
    return NValidation(ValidationReport(tuple(out)), groupoid)


@dataclass(frozen=True)
class NGroupoid:
    n: int
    carrier: MultiSSet

    @cached_property
    def validation(self) -> NValidation:
        return _validate(self.n, self.carrier)

    @property
    def ok(self) -> bool:
        return self.validation.report.ok

    def require_valid(self):
        if not self.ok:
            v = self.validation.report.violations[0]
            raise ValueError(f"not a valid {self.n}-groupoid: {v}")

    @property
    def groupoid(self) -> FinGroupoid:
        """The groupoid whose nerve is ``T^{n-1}`` of the carrier."""
        self.require_valid()
        return self.validation.groupoid


def validate_ngroupoid(G: NGroupoid) -> ValidationReport:
    return G.validation.report


def objects(G: NGroupoid) -> tuple:
    if G.n == 0:
        return G.carrier.cells[()]
    if check_iso_constant(G.carrier):
        raise ValueError("(G0) fails: outer level 0 is not constant")
    return G.carrier.cells[(0,) * G.n]


def arrow_object(G: NGroupoid, x, y) -> NGroupoid:
    if G.n < 1:
        raise ValueError("a 0-groupoid has no arrows")
    obs = set(objects(G))
    for z in (x, y):
        if z not in obs:
            raise KeyError(f"{fmt(z)} is not an object")
    return NGroupoid(G.n - 1, arrow_carrier(G.carrier, x, y))


def pi0_set(G: NGroupoid) -> tuple:
    """``(classes, quotient)``: representatives of ``T^n`` and the map from objects."""
    G.require_valid()
    T, q = T_power_with_quotient(G.carrier, G.n)
    return T.cells[()], q


def identity_arrow(G: NGroupoid, x):
    return G.carrier.s(0, (0,) * G.n, 0, x)


def homotopy_group(G: NGroupoid, x, i: int) -> FinGroupoid:
    """``π_i(G, x)``: automorphisms in the (G2) groupoid for ``i = 1``, else
    ``π_{i-1}`` of the loop arrow object at the identity of ``x``."""
    if not 1 <= i <= G.n:
        raise ValueError(f"homotopy degree {i} out of range 1..{G.n}")
    G.require_valid()
    if x not in set(objects(G)):
        raise KeyError(f"{fmt(x)} is not an object")
    if i == 1:
        _, q = T_power_with_quotient(G.carrier, G.n - 1)
        return automorphism_group(G.groupoid, q[x])
    return homotopy_group(arrow_object(G, x, x), identity_arrow(G, x), i - 1)


# ---------------------------------------------------------------- functors

@dataclass(frozen=True)
class NFunctor:
    source: NGroupoid
    target: NGroupoid
    carrier_map: MultiSSetMap


def groupoid_functor_of(F: NFunctor) -> GroupoidFunctor:
    """At ``n = 1``: the functor between the groupoids read off the carriers."""
    G, H = F.source.groupoid, F.target.groupoid
    return GroupoidFunctor(G, H, dict(F.carrier_map.levels[(0,)]), dict(F.carrier_map.levels[(1,)]))


def n_equivalence_report(F: NFunctor) -> str | None:
    if F.source.n != F.target.n:
        raise ValueError("functor between groupoids of different n")
    F.source.require_valid()
    F.target.require_valid()
    if not validate_multimap(F.carrier_map).ok:
        raise ValueError("carrier map does not commute with structure maps")
    if F.source.n == 1:
        return equivalence_witness(groupoid_functor_of(F))
    return equivalence_report(F.carrier_map, F.source.n)


def n_equivalence(F: NFunctor) -> bool:
    return n_equivalence_report(F) is None


def identity_nfunctor(G: NGroupoid) -> NFunctor:
    from .multisimplicial import identity_multimap
    return NFunctor(G, G, identity_multimap(G.carrier))


def compose_nfunctors(F: NFunctor, K: NFunctor) -> NFunctor:
    from .multisimplicial import compose_multimaps
    return NFunctor(F.source, K.target, compose_multimaps(F.carrier_map, K.carrier_map))


# ---------------------------------------------------------------- builders

def groupoid_as_ngroupoid(G: FinGroupoid, D: int = 3) -> NGroupoid:
    return NGroupoid(1, from_sset(nerve(G, D)))


def lifted_groupoid(G: FinGroupoid, bounds=(3, 2)) -> NGroupoid:
    """``N(G)`` as a 2-groupoid with a constant inner axis (discrete 2-cells)."""
    return NGroupoid(2, lift(nerve(G, bounds[0]), bounds[1]))


def functor_as_nfunctor(F: GroupoidFunctor, D: int = 3) -> NFunctor:
    f = from_sset_map(nerve_map(F, D))
    return NFunctor(NGroupoid(1, f.source), NGroupoid(1, f.target), f)


def lifted_functor(F: GroupoidFunctor, bounds=(3, 2)) -> NFunctor:
    f = lift_map(from_sset_map(nerve_map(F, bounds[0])), bounds[1])
    return NFunctor(NGroupoid(2, f.source), NGroupoid(2, f.target), f)


def _row_face(A: FinGroupoid, row: tuple, i: int) -> tuple:
    k = len(row)
    if i == 0:
        return row[1:]
    if i == k:
        return row[:-1]
    return row[:i - 1] + (A.compose(row[i - 1], row[i]),) + row[i + 1:]


def k2_carrier(A: FinGroupoid, bounds=(3, 2)) -> MultiSSet:
    """Double nerve of an abelian group: cells at ``(m, k)`` are ``m x k`` matrices.

    Each row is a ``k``-chain in ``A`` (inner axis); outer faces multiply
    adjacent rows entrywise and outer degeneracies insert a row of identities.
    """
    if not A.is_group or not A.is_abelian():
        raise ValueError("K(A,2) needs an abelian group")
    e = A.identity_element()
    els = A.morphism_list
    from itertools import product as cartesian

    def cells(idx):
        m, k = idx
        rows = list(cartesian(els, repeat=k))
        return [tuple(r) for r in cartesian(rows, repeat=m)]

    def d(a, idx, i, c):
        m, k = idx
        if a == 1:
            return tuple(_row_face(A, r, i) for r in c)
        if i == 0:
            return c[1:]
        if i == m:
            return c[:-1]
        merged = tuple(A.compose(x, y) for x, y in zip(c[i - 1], c[i]))
        return c[:i - 1] + (merged,) + c[i + 1:]

    def s(a, idx, i, c):
        m, k = idx
        if a == 1:
            return tuple(r[:i] + (e,) + r[i:] for r in c)
        return c[:i] + ((e,) * k,) + c[i:]

    return MultiSSet.from_functions(bounds, cells, d, s)


def k2(A: FinGroupoid, bounds=(3, 2)) -> NGroupoid:
    return NGroupoid(2, k2_carrier(A, bounds))


def k2_functor(A: FinGroupoid, B: FinGroupoid, phi: dict, bounds=(3, 2)) -> NFunctor:
    """The map ``K(A,2) -> K(B,2)`` induced entrywise by a homomorphism ``phi``."""
    src, tgt = k2(A, bounds), k2(B, bounds)
    levels = {idx: {c: tuple(tuple(phi[x] for x in r) for r in c) for c in cs}
              for idx, cs in src.carrier.cells.items()}
    return NFunctor(src, tgt, MultiSSetMap(src.carrier, tgt.carrier, levels))


def product_ngroupoid(G: NGroupoid, H: NGroupoid) -> NGroupoid:
    if G.n != H.n:
        raise ValueError("product needs equal n")
    return NGroupoid(G.n, levelwise_product(G.carrier, H.carrier))


def coproduct_ngroupoid(*parts: NGroupoid) -> NGroupoid:
    from .multisimplicial import multi_coproduct
    return NGroupoid(parts[0].n, multi_coproduct(*(p.carrier for p in parts)))


# --------------------------------------------------------------- unit checks

def unit_check_n1(G: FinGroupoid, D: int = 2) -> Report:
    """The unit ``L : G -> Π₁(N G)`` against evaluation ``ev : Π₁(N G) -> G``."""
    X = nerve(G, D)
    P = edge_path_groupoid(X)
    degenerate = X.degenerate_cells(1)
    ev = {e: e[0] for e in P.generators}

    def L(f):
        return edge_word(X, (f,), degenerate)

    checks = []
    bad = []
    # every 2-cell, including those whose relation is trivial after dropping identities
    for sigma in X.cells[2]:
        e2, e0, e1 = (X.d(2, i, sigma) for i in (2, 0, 1))
        lhs = edge_word(X, e2, degenerate) + edge_word(X, e0, degenerate)
        rhs = edge_word(X, e1, degenerate)
        start = X.d(1, 1, e2)
        if evaluate_word(lhs, G, ev, start) != evaluate_word(rhs, G, ev, start):
            bad.append(f"2-cell {fmt(sigma)}")
    checks.append(check("ev respects relators", not bad, bad[0] if bad else "",
                        f"{len(X.cells[2])} 2-cells"))
    bad = [f for f in G.morphism_list
           if evaluate_word(L(f), G, ev, G.src(f)) != f]
    checks.append(check("ev o L = id", not bad, f"morphism {fmt(bad[0])}" if bad else "",
                        f"{G.order} morphisms"))
    bad = [e for e in P.generator_list if L(ev[e]) != ((e, 1),)]
    checks.append(check("L o ev fixes generators", not bad, f"generator {fmt(bad[0])}" if bad else "",
                        f"{len(P.generators)} generators"))
    rels = {(tuple(l), tuple(r)) for l, r in P.relators}
    bad = []
    for f in G.morphism_list:
        for g in G.out_of(G.tgt(f)):
            lhs, rhs = L(f) + L(g), L(G.compose(f, g))
            if lhs != rhs and (lhs, rhs) not in rels:
                bad.append(f"{fmt(f)};{fmt(g)}")
    checks.append(check("L preserves composition", not bad, bad[0] if bad else ""))
    same_objects = tuple(P.objects) == tuple(G.objects)
    checks.append(check("L bijective on objects", same_objects, "object sets differ"))
    facts = (("objects", str(len(G.objects))), ("morphisms", str(G.order)),
             ("generators", str(len(P.generators))), ("relators", str(len(P.relators))))
    return Report("unit-n1", tuple(checks), (PI_HIGHER,), facts)


def unit_invariants_n2(G: NGroupoid, x=None) -> Report:
    """Compare ``π₀`` and ``π₁`` invariants of a 2-groupoid with those of its diagonal."""
    if G.n != 2:
        raise ValueError("unit_invariants_n2 needs n = 2")
    G.require_valid()
    Dg = total_diag(G.carrier)
    classes, q = pi0_set(G)
    comps = pi0(Dg)
    checks = [check("pi0 sizes agree", len(comps) == len(classes),
                    f"diag has {len(comps)} components, pi0_set has {len(classes)}",
                    f"{len(classes)} classes")]
    # canonical bijection: objects in the same class iff same diagonal component
    mismatch = [(a, b) for a in q for b in q
                if (q[a] == q[b]) != (comps.rep[a] == comps.rep[b])]
    checks.append(check("pi0 classes agree", not mismatch,
                        f"objects {fmt(mismatch[0][0])},{fmt(mismatch[0][1])}" if mismatch else ""))
    points = [x] if x is not None else sorted(set(q.values()), key=cell_key)
    P = edge_path_groupoid(Dg)
    for p in points:
        mine = group_invariants(vertex_group(P, p))
        theirs = group_invariants(presentation_of(homotopy_group(G, p, 1)))
        checks.append(check(f"pi1 invariants at {fmt(p)}", mine == theirs,
                            f"diag {_inv_str(mine)} vs groupoid {_inv_str(theirs)}",
                            _inv_str(mine)))
    return Report("unit-n2", tuple(checks), ("pi_2 comparison", PI_HIGHER))


def _inv_str(inv) -> str:
    ab, homs = inv
    return f"ab={ab} hom=" + ",".join(str(c) for _, c in homs)
