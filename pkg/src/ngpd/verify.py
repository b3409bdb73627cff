"""Theorem-level checks on finite instances.

Weak equivalence is checked as: a bijection on components plus agreement of
the vertex-group invariants (abelianization and homomorphism counts into all
groups of order at most 8).  Higher homotopy is never claimed and every
report lists it under ``not_checked``.

For the component decomposition, ``pr1`` is an isomorphism of simplicial
sets.  Its topological subtlety (whether collapsing each component to a
point is continuous) cannot arise for discrete data, so the combinatorial
check is exact.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from ._util import Partition, cell_key, fmt
from .edgepath import edge_path_groupoid, vertex_group
from .multisimplicial import (MultiSSet, MultiSSetMap, T_power_with_quotient,
                              multi_fiber_product, p_object, to_sset_map, total_diag,
                              total_diag_map)
from .ngroupoid import NGroupoid, PI_HIGHER, outer_level_map, pi0_set
from .report import ERROR, Check, Report, check
from .presentations import group_invariants
from .simplicial import SimplicialSet, SSetMap, coproduct, fiber_product, pi0, sub_sset


# ------------------------------------------------------------- invariants

def component_invariants(X: SimplicialSet) -> dict:
    """Vertex-group invariants at the representative of each component."""
    P = edge_path_groupoid(X)
    return {r: group_invariants(vertex_group(P, r)) for r in pi0(X).representatives}


def is_trivial_invariant(inv) -> bool:
    ab, homs = inv
    return ab.is_trivial and all(c == 1 for _, c in homs)


def weak_equivalence_witness(f: SSetMap) -> str | None:
    """``None`` if ``f`` is a π₀ bijection preserving vertex-group invariants."""
    X, Y = f.source, f.target
    px, py = pi0(X), pi0(Y)
    image = {}
    for r in px.representatives:
        image.setdefault(py.rep[f(0, r)], []).append(r)
    for target_class, sources in image.items():
        if len(sources) > 1:
            return f"pi0 not injective: components {fmt(sources[0])} and {fmt(sources[1])} merge"
    for r in py.representatives:
        if r not in image:
            return f"pi0 not surjective: component {fmt(r)} missed"
    if X.dim_bound < 2:
        return None
    ix, iy = component_invariants(X), component_invariants(Y)
    for r in px.representatives:
        a, b = ix[r], iy[py.rep[f(0, r)]]
        if a != b:
            return f"pi1 invariants differ at {fmt(r)}: {_describe(a, b)}"
    return None


def _describe(a, b) -> str:
    parts = [f"abelianization {a[0]} vs {b[0]}"] if a[0] != b[0] else []
    diff = [(name, x, y) for (name, x), (_, y) in zip(a[1], b[1]) if x != y]
    if diff:
        name, x, y = diff[0]
        parts.append(f"hom count into {name}: {x} vs {y}")
    return "; ".join(parts) or "equal"


# ------------------------------------------------- component decomposition

@dataclass(frozen=True, eq=False)
class ComponentDecomposition:
    base: SimplicialSet
    components: tuple
    pr1: SSetMap          # coproduct of components -> base
    pr2: dict             # component index -> π₀ representative


def components_decomposition(X: SimplicialSet) -> ComponentDecomposition:
    """Split ``X`` by the component of each cell's first vertex."""
    part = pi0(X)

    def label(k, c):
        v = c
        for level in range(k, 0, -1):
            v = X.d(level, level, v)
        return part.rep[v]

    labels = [{c: label(k, c) for c in X.cells[k]} for k in range(X.dim_bound + 1)]
    reps = part.representatives
    comps = tuple(sub_sset(X, lambda k, c, r=r: labels[k][c] == r) for r in reps)
    total = coproduct(*comps) if comps else X
    pr1 = SSetMap(total, X, tuple({c: c[1] for c in total.cells[k]} for k in range(X.dim_bound + 1)))
    return ComponentDecomposition(X, comps, pr1, dict(enumerate(reps)))


def check_pr_weak_equiv(X: SimplicialSet) -> Report:
    if X.dim_bound < 2:
        raise ValueError("need dim_bound >= 2")
    dec = components_decomposition(X)
    checks = []
    counts = [sum(C.counts()[k] for C in dec.components) for k in range(X.dim_bound + 1)]
    checks.append(check("components partition cells", tuple(counts) == X.counts(),
                        f"counts {counts} vs {list(X.counts())}"))
    checks.append(check("pr1 levelwise bijective", dec.pr1.is_levelwise_bijective(),
                        "pr1 is not a bijection on cells"))
    w = weak_equivalence_witness(dec.pr1)
    checks.append(check("pr1 pi0 bijection and pi1 invariants", w is None, w or ""))
    P = edge_path_groupoid(X)
    trivial = True
    bad = []
    for t, C in enumerate(dec.components):
        r = dec.pr2[t]
        if len(pi0(C)) != 1:
            bad.append(f"component {t} is not connected")
        mine = vertex_group(edge_path_groupoid(C), r)
        if mine != vertex_group(P, r):
            bad.append(f"vertex group presentation differs at {fmt(r)}")
        trivial = trivial and is_trivial_invariant(group_invariants(mine))
    checks.append(check("pr2 collapses components; presentations agree", not bad, bad[0] if bad else ""))
    facts = (("components", str(len(dec.components))),
             ("pi0 classes", str(len(pi0(X)))),
             ("zero_truncated", "true" if trivial else "false"))
    return Report("f-decompose", tuple(checks),
                  ("zero-truncation of pr2 beyond pi1 invariants", PI_HIGHER), facts)


# ---------------------------------------------------------- Segal pi0 law

def segal_pi0_law(P: MultiSSet) -> Report:
    """π₀ of the diagonal against π₀ of the levelwise π₀ (a plain set)."""
    if P.arity != 2:
        raise ValueError("segal_pi0_law needs arity 2")
    diag = pi0(total_diag(P))
    _, q = T_power_with_quotient(P, 2)
    forward: dict = defaultdict(set)
    backward: dict = defaultdict(set)
    for v in P.cells[(0, 0)]:
        forward[diag.rep[v]].add(q[v])
        backward[q[v]].add(diag.rep[v])
    split = [r for r, s in forward.items() if len(s) > 1]
    merged = [r for r, s in backward.items() if len(s) > 1]
    checks = [
        check("diag class -> T(pi0) class well defined", not split,
              f"diag component {fmt(split[0])} meets {len(forward[split[0]]) if split else 0} classes" if split else ""),
        check("T(pi0) class -> diag class well defined", not merged,
              f"class {fmt(merged[0])} meets several diag components" if merged else ""),
    ]
    bij = ", ".join(f"{fmt(r)}->{fmt(next(iter(s)))}" for r, s in sorted(forward.items(), key=lambda t: cell_key(t[0])))
    facts = (("pi0(diag)", str(len(diag))), ("T(pi0)", str(len(backward))), ("bijection", bij))
    return Report("segal-pi0-law", tuple(checks), (), facts)


# --------------------------------------------- levelwise -> diagonal transfer

@dataclass(frozen=True)
class LevelCertificate:
    m: int
    ok: bool
    witness: str = ""


def make_levelwise_certificate(t: MultiSSetMap) -> dict:
    """For each outer ``m``: does ``t_m`` preserve π₀ and vertex-group invariants?"""
    out = {}
    for m in range(t.source.dim_bounds[0] + 1):
        w = weak_equivalence_witness(to_sset_map(outer_level_map(t, m)))
        out[m] = LevelCertificate(m, w is None, w or "")
    return out


def levelwise_equiv_to_diag(t: MultiSSetMap, certificates: dict) -> Report:
    if t.source.arity != 2:
        raise ValueError("levelwise_equiv_to_diag needs arity 2")
    bound = t.source.dim_bounds[0]
    missing = [m for m in range(bound + 1) if m not in certificates]
    if missing:
        raise ValueError(f"missing certificate for outer level {missing[0]}")
    fresh = make_levelwise_certificate(t)
    checks = []
    for m in range(bound + 1):
        cert = certificates[m]
        if cert.ok != fresh[m].ok:
            checks.append(Check(f"certificate m={m}", ERROR, "certificate does not match recomputation"))
        else:
            checks.append(check(f"level m={m} equivalence", cert.ok, cert.witness))
    if all(c.status == "PASS" for c in checks):
        w = weak_equivalence_witness(total_diag_map(t))
        checks.append(check("diagonal pi0 bijection and pi1 invariants", w is None, w or ""))
    return Report("levelwise-to-diag", tuple(checks), (PI_HIGHER,))


# ---------------------------------------------------- diag vs fiber products

def diag_fiber_product_check(f: MultiSSetMap, g: MultiSSetMap) -> bool:
    lhs = total_diag(multi_fiber_product(f, g).obj)
    rhs = fiber_product(total_diag_map(f), total_diag_map(g)).sset
    return (lhs.dim_bound == rhs.dim_bound and lhs.cells == rhs.cells
            and lhs.faces == rhs.faces and lhs.degens == rhs.degens)


# ---------------------------------------------------------- P-object Segal

def _iso_constant(X: SimplicialSet) -> bool:
    n0 = len(X.cells[0])
    return all(len(X.cells[k]) == n0 for k in range(X.dim_bound + 1)) and \
        all(len(set(X.faces[k][c][i] for c in X.cells[k])) == n0
            for k in range(1, X.dim_bound + 1) for i in range(k + 1))


def segal_report_for_P(G: NGroupoid) -> Report:
    if G.n < 2:
        raise ValueError("segal_report_for_P needs n >= 2")
    if not G.ok:
        bad = G.validation.report.violations
        return Report("segal-P", (Check("carrier is an n-groupoid", "FAIL", str(bad[0])),), (PI_HIGHER,))
    p = p_object(G.carrier)
    checks = [check("(PΦ)_0 discrete and constant", _iso_constant(p.level(0)),
                    "level 0 of P has non-bijective structure maps")]
    for m in range(2, p.bound + 1):
        w = weak_equivalence_witness(p.segal(m))
        checks.append(check(f"Segal map m={m}: pi0 bijection and pi1 invariants", w is None, w or ""))
    _, q = T_power_with_quotient(p.diag2, 2)
    _, q2 = pi0_set(G)
    same = Partition.from_classes(_classes(q)) == Partition.from_classes(_classes(q2))
    checks.append(check("T(pi0(PΦ)) = pi0_set", same, "partitions of the objects differ"))
    return Report("segal-P", tuple(checks), (PI_HIGHER,))


def _classes(q: dict) -> list:
    out = defaultdict(list)
    for c, r in q.items():
        out[r].append(c)
    return list(out.values())
