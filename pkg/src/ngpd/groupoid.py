"""Finite groupoids, functors between them, and their nerves.

Composition is written in diagrammatic order: ``composition[(f, g)]`` is
"first ``f``, then ``g``" and is defined when ``target(f) == source(g)``.
A group is a groupoid with exactly one object.
"""
from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Callable, Iterable, Sequence

from ._util import Partition, UnionFind, cell_key, fmt, sorted_cells
from .simplicial import SimplicialSet, SSetMap, ValidationReport, Violation


@dataclass(frozen=True, eq=False)
class FinGroupoid:
    objects: tuple
    morphisms: dict      # id -> (source, target)
    composition: dict    # (f, g) -> f;g
    identities: dict     # object -> id
    inverse: dict        # id -> id

    def __post_init__(self):
        object.__setattr__(self, "objects", sorted_cells(self.objects))

    def __eq__(self, other):
        if not isinstance(other, FinGroupoid):
            return NotImplemented
        return (self.objects == other.objects and self.morphisms == other.morphisms
                and self.composition == other.composition
                and self.identities == other.identities and self.inverse == other.inverse)

    def src(self, f):
        return self.morphisms[f][0]

    def tgt(self, f):
        return self.morphisms[f][1]

    def compose(self, f, g):
        return self.composition[(f, g)]

    @cached_property
    def morphism_list(self) -> tuple:
        return sorted_cells(self.morphisms)

    @cached_property
    def _hom(self) -> dict:
        out = defaultdict(list)
        for f in self.morphism_list:
            out[self.morphisms[f]].append(f)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, x, y) -> tuple:
        return self._hom.get((x, y), ())

    @cached_property
    def _out(self) -> dict:
        out = defaultdict(list)
        for f in self.morphism_list:
            out[self.src(f)].append(f)
        return out

    def out_of(self, x) -> list:
        return self._out.get(x, [])

    @property
    def is_group(self) -> bool:
        return len(self.objects) == 1

    @property
    def order(self) -> int:
        return len(self.morphisms)

    def identity_element(self):
        (x,) = self.objects
        return self.identities[x]

    def mul(self, a, b):
        """Group product ``a * b`` meaning ``a`` after ``b`` (i.e. ``b`` then ``a``)."""
        return self.composition[(b, a)]

    def is_abelian(self) -> bool:
        return all(self.composition.get((f, g)) == self.composition.get((g, f))
                   for f in self.morphisms for g in self.morphisms
                   if self.tgt(f) == self.src(g) and self.tgt(g) == self.src(f))

    def __repr__(self):
        return f"FinGroupoid(objects={len(self.objects)}, morphisms={len(self.morphisms)})"


def validate_groupoid(G: FinGroupoid) -> ValidationReport:
    out = []
    obs = set(G.objects)
    for f, (a, b) in G.morphisms.items():
        if a not in obs or b not in obs:
            out.append(Violation("endpoints", fmt(f), f"({fmt(a)},{fmt(b)}) not objects"))
    for x in G.objects:
        e = G.identities.get(x)
        if e is None or G.morphisms.get(e) != (x, x):
            out.append(Violation("identity", fmt(x), f"identity {fmt(e)} missing or not a loop"))
    if out:
        return ValidationReport(tuple(out))
    for f in G.morphism_list:
        for g in G.out_of(G.tgt(f)):
            h = G.composition.get((f, g))
            if h is None:
                out.append(Violation("composition-total", f"{fmt(f)};{fmt(g)}", "undefined"))
            elif G.morphisms.get(h) != (G.src(f), G.tgt(g)):
                out.append(Violation("composition-endpoints", f"{fmt(f)};{fmt(g)}", fmt(h)))
    for (f, g) in G.composition:
        if f not in G.morphisms or g not in G.morphisms or G.tgt(f) != G.src(g):
            out.append(Violation("composition-domain", f"{fmt(f)};{fmt(g)}", "not composable"))
    if out:
        return ValidationReport(tuple(out))
    for f in G.morphism_list:
        if G.compose(G.identities[G.src(f)], f) != f or G.compose(f, G.identities[G.tgt(f)]) != f:
            out.append(Violation("unit", fmt(f), "identity law fails"))
        for g in G.out_of(G.tgt(f)):
            fg = G.compose(f, g)
            for h in G.out_of(G.tgt(g)):
                if G.compose(fg, h) != G.compose(f, G.compose(g, h)):
                    out.append(Violation("associativity", f"{fmt(f)},{fmt(g)},{fmt(h)}",
                                         "(fg)h != f(gh)"))
        inv = G.inverse.get(f)
        if inv is None or G.morphisms.get(inv) != (G.tgt(f), G.src(f)) \
                or G.compose(f, inv) != G.identities[G.src(f)] \
                or G.compose(inv, f) != G.identities[G.tgt(f)]:
            out.append(Violation("inverse", fmt(f), f"{fmt(inv)} is not a two-sided inverse"))
    return ValidationReport(tuple(out))


def nerve(G: FinGroupoid, D: int = 3) -> SimplicialSet:
    """Composable chains up to length ``D``, degenerate ones included.

    Level-0 cells are objects; level-``k`` cells are ``k``-tuples of
    morphisms.  ``d_0`` drops the first arrow, ``d_k`` the last, inner faces
    compose neighbours; ``s_i`` inserts an identity at vertex ``i``.
    """
    if D < 1:
        raise ValueError("D must be >= 1")
    cells = [list(G.objects), [(f,) for f in G.morphism_list]]
    for _ in range(2, D + 1):
        cells.append([ch + (g,) for ch in cells[-1] for g in G.out_of(G.tgt(ch[-1]))])

    def d(k, i, c):
        if k == 1:
            return G.tgt(c[0]) if i == 0 else G.src(c[0])
        if i == 0:
            return c[1:]
        if i == k:
            return c[:-1]
        return c[:i - 1] + (G.compose(c[i - 1], c[i]),) + c[i + 1:]

    def s(k, i, c):
        if k == 0:
            return (G.identities[c],)
        v = G.src(c[0]) if i == 0 else G.tgt(c[i - 1])
        return c[:i] + (G.identities[v],) + c[i:]

    return SimplicialSet.from_functions(D, cells, d, s)


def iso_classes(G: FinGroupoid) -> Partition:
    uf = UnionFind(G.objects)
    for f in G.morphism_list:
        uf.union(G.src(f), G.tgt(f))
    return uf.partition()


def automorphism_group(G: FinGroupoid, x) -> FinGroupoid:
    if x not in set(G.objects):
        raise KeyError(f"{fmt(x)} is not an object")
    els = G.hom(x, x)
    return FinGroupoid((x,), {f: (x, x) for f in els},
                       {(f, g): G.compose(f, g) for f in els for g in els},
                       {x: G.identities[x]}, {f: G.inverse[f] for f in els})


def full_subgroupoid(G: FinGroupoid, objects: Iterable) -> FinGroupoid:
    obs = set(objects)
    mors = {f: st for f, st in G.morphisms.items() if st[0] in obs and st[1] in obs}
    return FinGroupoid(tuple(obs), mors,
                       {k: v for k, v in G.composition.items() if k[0] in mors and k[1] in mors},
                       {x: G.identities[x] for x in obs}, {f: G.inverse[f] for f in mors})


# ------------------------------------------------------------------ functors

@dataclass(frozen=True)
class GroupoidFunctor:
    source: FinGroupoid
    target: FinGroupoid
    object_map: dict
    morphism_map: dict

    def __call__(self, f):
        return self.morphism_map[f]


def validate_functor(F: GroupoidFunctor) -> ValidationReport:
    G, H = F.source, F.target
    out = []
    for x in G.objects:
        if F.object_map.get(x) not in set(H.objects):
            out.append(Violation("object-map", fmt(x), "unmapped or off-target"))
    if out:
        return ValidationReport(tuple(out))
    for f in G.morphism_list:
        g = F.morphism_map.get(f)
        if g not in H.morphisms or H.morphisms[g] != (F.object_map[G.src(f)], F.object_map[G.tgt(f)]):
            out.append(Violation("morphism-map", fmt(f), f"{fmt(g)} has wrong endpoints"))
    if out:
        return ValidationReport(tuple(out))
    for x in G.objects:
        if F.morphism_map[G.identities[x]] != H.identities[F.object_map[x]]:
            out.append(Violation("identities", fmt(x), "identity not preserved"))
    for (f, g), h in G.composition.items():
        if H.compose(F(f), F(g)) != F(h):
            out.append(Violation("composition", f"{fmt(f)};{fmt(g)}", "not preserved"))
    return ValidationReport(tuple(out))


def nerve_map(F: GroupoidFunctor, D: int = 3) -> SSetMap:
    """``N(F) : N(G) -> N(H)`` applied chain by chain."""
    X, Y = nerve(F.source, D), nerve(F.target, D)
    levels = [dict(F.object_map)]
    levels += [{ch: tuple(F(f) for f in ch) for ch in X.cells[k]} for k in range(1, D + 1)]
    return SSetMap(X, Y, tuple(levels))


def identity_functor(G: FinGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(G, G, {x: x for x in G.objects}, {f: f for f in G.morphisms})


def compose_functors(F: GroupoidFunctor, K: GroupoidFunctor) -> GroupoidFunctor:
    """``F`` then ``K``."""
    return GroupoidFunctor(F.source, K.target,
                           {x: K.object_map[y] for x, y in F.object_map.items()},
                           {f: K.morphism_map[g] for f, g in F.morphism_map.items()})


def equivalence_witness(F: GroupoidFunctor) -> str | None:
    """``None`` when ``F`` is an equivalence, else a description of the failure."""
    G, H = F.source, F.target
    classes = iso_classes(H)
    hit = {classes.rep[F.object_map[x]] for x in G.objects}
    for r in classes.representatives:
        if r not in hit:
            return f"not essentially surjective: class of {fmt(r)} is missed"
    for x in G.objects:
        for y in G.objects:
            src = G.hom(x, y)
            fx, fy = F.object_map[x], F.object_map[y]
            image = [F(f) for f in src]
            if len(set(image)) != len(image):
                return f"not faithful on Hom({fmt(x)},{fmt(y)})"
            if len(image) != len(H.hom(fx, fy)):
                return (f"not full on Hom({fmt(x)},{fmt(y)}): "
                        f"{len(src)} -> {len(H.hom(fx, fy))} morphisms")
    return None


def is_equivalence(F: GroupoidFunctor) -> bool:
    return equivalence_witness(F) is None


# ------------------------------------------------------------ constructors

def group_from_mul(elements: Sequence, mul: Callable, obj="*") -> FinGroupoid:
    """A one-object groupoid from a multiplication ``mul(a, b) = a*b``."""
    els = list(elements)
    ident = next(e for e in els if all(mul(e, a) == a for a in els))
    comp = {(f, g): mul(g, f) for f in els for g in els}
    inverse = {a: next(b for b in els if mul(a, b) == ident) for a in els}
    return FinGroupoid((obj,), {a: (obj, obj) for a in els}, comp, {obj: ident}, inverse)


def cyclic(n: int) -> FinGroupoid:
    return group_from_mul(range(n), lambda a, b: (a + b) % n)


def trivial_group() -> FinGroupoid:
    return cyclic(1)


def permutation_group(generators: Iterable[Sequence[int]]) -> FinGroupoid:
    """Closure of the given permutations, relabelled 0..n-1 (0 is the identity)."""
    gens = [tuple(g) for g in generators]
    deg = len(gens[0])
    ident = tuple(range(deg))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(deg))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    perms = sorted(seen)
    index = {p: i for i, p in enumerate(perms)}

    def mul(a, b):  # (a*b)(i) = a(b(i))
        pa, pb = perms[a], perms[b]
        return index[tuple(pa[pb[i]] for i in range(deg))]

    return group_from_mul(range(len(perms)), mul)


def symmetric3() -> FinGroupoid:
    return permutation_group([(1, 0, 2), (1, 2, 0)])


def dihedral4() -> FinGroupoid:
    return permutation_group([(1, 2, 3, 0), (3, 2, 1, 0)])


def quaternion() -> FinGroupoid:
    # elements (sign, unit) with unit in 1,i,j,k encoded 0..3
    table = {(1, 1): (-1, 0), (2, 2): (-1, 0), (3, 3): (-1, 0),
             (1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
             (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}

    def unit_mul(a, b):
        if a == 0:
            return (1, b)
        if b == 0:
            return (1, a)
        return table[(a, b)]

    els = [(s, u) for s in (1, -1) for u in range(4)]
    label = {e: i for i, e in enumerate(els)}

    def mul(x, y):
        (s1, u1), (s2, u2) = els[x], els[y]
        s, u = unit_mul(u1, u2)
        return label[(s1 * s2 * s, u)]

    return group_from_mul(range(8), mul)


def product_groupoid(G: FinGroupoid, H: FinGroupoid) -> FinGroupoid:
    objects = [(x, y) for x in G.objects for y in H.objects]
    mors = {(f, g): ((G.src(f), H.src(g)), (G.tgt(f), H.tgt(g)))
            for f in G.morphism_list for g in H.morphism_list}
    comp = {((f1, g1), (f2, g2)): (G.compose(f1, f2), H.compose(g1, g2))
            for (f1, f2) in G.composition for (g1, g2) in H.composition}
    return FinGroupoid(objects, mors, comp,
                       {(x, y): (G.identities[x], H.identities[y]) for x, y in objects},
                       {(f, g): (G.inverse[f], H.inverse[g]) for f, g in mors})


def direct_product(G: FinGroupoid, H: FinGroupoid) -> FinGroupoid:
    """Product of two groups, relabelled onto a single object ``*``."""
    P = product_groupoid(G, H)
    (x,) = P.objects
    return relabel(P, {x: "*"}, {f: f for f in P.morphisms})


def spread(G: FinGroupoid, k: int) -> FinGroupoid:
    """The connected groupoid on objects ``0..k-1`` with vertex group ``G``.

    Morphisms are triples ``(i, g, j)``; ``(i, g, j);(j, h, l) = (i, g;h, l)``.
    """
    if not G.is_group:
        raise ValueError("spread needs a group")
    els = G.morphism_list
    mors = {(i, g, j): (i, j) for i in range(k) for g in els for j in range(k)}
    comp = {((i, g, j), (j, h, l)): (i, G.compose(g, h), l)
            for i in range(k) for j in range(k) for l in range(k) for g in els for h in els}
    e = G.identity_element()
    return FinGroupoid(tuple(range(k)), mors, comp, {i: (i, e, i) for i in range(k)},
                       {(i, g, j): (j, G.inverse[g], i) for (i, g, j) in mors})


def discrete_groupoid(objects: Iterable) -> FinGroupoid:
    obs = list(objects)
    return FinGroupoid(obs, {("id", x): (x, x) for x in obs},
                       {(("id", x), ("id", x)): ("id", x) for x in obs},
                       {x: ("id", x) for x in obs}, {("id", x): ("id", x) for x in obs})


def disjoint_union(*parts: FinGroupoid) -> FinGroupoid:
    """Coproduct; objects and morphisms are tagged ``(index, name)``."""
    objects, mors, comp, ident, inv = [], {}, {}, {}, {}
    for t, G in enumerate(parts):
        objects += [(t, x) for x in G.objects]
        mors.update({(t, f): ((t, a), (t, b)) for f, (a, b) in G.morphisms.items()})
        comp.update({((t, f), (t, g)): (t, h) for (f, g), h in G.composition.items()})
        ident.update({(t, x): (t, e) for x, e in G.identities.items()})
        inv.update({(t, f): (t, g) for f, g in G.inverse.items()})
    return FinGroupoid(objects, mors, comp, ident, inv)


def action_groupoid(G: FinGroupoid, points: Iterable, action: Callable) -> FinGroupoid:
    """Objects ``points``; a morphism ``(p, g)`` goes from ``p`` to ``action(g, p)``."""
    pts = list(points)
    els = G.morphism_list
    mors = {(p, g): (p, action(g, p)) for p in pts for g in els}
    # (p, g) then (g.p, h) = (p, h*g)
    comp = {((p, g), (action(g, p), h)): (p, G.mul(h, g)) for p in pts for g in els for h in els}
    e = G.identity_element()
    return FinGroupoid(pts, mors, comp, {p: (p, e) for p in pts},
                       {(p, g): (action(g, p), G.inverse[g]) for p, g in mors})


def relabel(G: FinGroupoid, obj_map: dict, mor_map: dict) -> FinGroupoid:
    return FinGroupoid(tuple(obj_map[x] for x in G.objects),
                       {mor_map[f]: (obj_map[a], obj_map[b]) for f, (a, b) in G.morphisms.items()},
                       {(mor_map[f], mor_map[g]): mor_map[h] for (f, g), h in G.composition.items()},
                       {obj_map[x]: mor_map[e] for x, e in G.identities.items()},
                       {mor_map[f]: mor_map[g] for f, g in G.inverse.items()})


@lru_cache(maxsize=None)
def small_groups() -> tuple:
    """One representative of each isomorphism class of groups of order <= 8."""
    c = cyclic
    return (
        ("1", c(1)), ("Z2", c(2)), ("Z3", c(3)), ("Z4", c(4)),
        ("Z2xZ2", direct_product(c(2), c(2))), ("Z5", c(5)), ("Z6", c(6)),
        ("S3", symmetric3()), ("Z7", c(7)), ("Z8", c(8)),
        ("Z4xZ2", direct_product(c(4), c(2))),
        ("Z2xZ2xZ2", direct_product(direct_product(c(2), c(2)), c(2))),
        ("D4", dihedral4()), ("Q8", quaternion()),
    )


# ------------------------------------------------------------ isomorphisms

def element_order(G: FinGroupoid, a) -> int:
    e = G.identity_element()
    n, x = 1, a
    while x != e:
        x = G.mul(x, a)
        n += 1
    return n


def generating_set(G: FinGroupoid) -> list:
    """A small generating set, chosen greedily by decreasing element order."""
    els = sorted(G.morphism_list, key=lambda a: (-element_order(G, a), cell_key(a)))
    gens: list = []
    span = {G.identity_element()}
    for a in els:
        if a in span:
            continue
        gens.append(a)
        span = _closure(G, gens)
        if len(span) == G.order:
            break
    return gens


def _closure(G: FinGroupoid, gens) -> set:
    span = {G.identity_element()}
    frontier = list(span)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in span:
                    span.add(y)
                    nxt.append(y)
        frontier = nxt
    return span


def extend_homomorphism(G: FinGroupoid, H: FinGroupoid, images: dict) -> dict | None:
    """Extend generator images to a homomorphism ``G -> H`` or return ``None``."""
    phi = {G.identity_element(): H.identity_element()}
    queue = deque(phi)
    while queue:
        x = queue.popleft()
        for g, h in images.items():
            y, z = G.mul(x, g), H.mul(phi[x], h)
            if y in phi:
                if phi[y] != z:
                    return None
            else:
                phi[y] = z
                queue.append(y)
    return phi if len(phi) == G.order else None


def find_group_isomorphism(G: FinGroupoid, H: FinGroupoid) -> dict | None:
    if G.order != H.order:
        return None
    gens = generating_set(G)
    orders = {a: element_order(G, a) for a in gens}
    candidates = [[b for b in H.morphism_list if element_order(H, b) == orders[a]] for a in gens]
    for choice in product(*candidates):
        phi = extend_homomorphism(G, H, dict(zip(gens, choice)))
        if phi is not None and len(set(phi.values())) == G.order:
            return phi
    return None


def groups_isomorphic(G: FinGroupoid, H: FinGroupoid) -> bool:
    return find_group_isomorphism(G, H) is not None


def find_groupoid_isomorphism(G: FinGroupoid, H: FinGroupoid) -> GroupoidFunctor | None:
    """An explicit isomorphism of groupoids, verified before it is returned."""
    if len(G.objects) != len(H.objects) or G.order != H.order:
        return None
    cg, ch = iso_classes(G), iso_classes(H)
    remaining = list(ch.classes)
    pairing = []
    for cls in cg.classes:
        aut = automorphism_group(G, cls[0])
        for idx, other in enumerate(remaining):
            if len(other) != len(cls):
                continue
            phi = find_group_isomorphism(aut, automorphism_group(H, other[0]))
            if phi is not None:
                pairing.append((cls, other, phi))
                del remaining[idx]
                break
        else:
            return None
    obj_map, mor_map = {}, {}
    for cls, other, phi in pairing:
        obj_map.update(zip(cls, other))
        tg = _tree_arrows(G, cls)
        th = _tree_arrows(H, other)
        for f in G.morphism_list:
            a, b = G.src(f), G.tgt(f)
            if a not in obj_map or (a not in cls):
                continue
            loop = G.compose(G.compose(tg[a], f), G.inverse[tg[b]])
            img = H.compose(H.compose(H.inverse[th[obj_map[a]]], phi[loop]), th[obj_map[b]])
            mor_map[f] = img
    F = GroupoidFunctor(G, H, obj_map, mor_map)
    if validate_functor(F).ok and len(set(mor_map.values())) == H.order:
        return F
    return None


def _tree_arrows(G: FinGroupoid, cls) -> dict:
    base = cls[0]
    return {x: G.hom(base, x)[0] for x in cls}
