"""Finite, dimension-bounded simplicial sets.

Every cell up to ``dim_bound`` is stored, degenerate ones included, so faces,
degeneracies, fiber products and Segal maps are plain table lookups.  A
simplicial set is treated as its own ``dim_bound``-truncation: anything that
needs a level above the bound raises instead of guessing.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from ._util import Partition, UnionFind, fmt, sorted_cells
from .monotone import MonotoneMap, act, spine_edge, vertex


@dataclass(frozen=True)
class Violation:
    rule: str
    where: str
    witness: str

    def __str__(self):
        return f"{self.rule} at {self.where}: {self.witness}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter(self.violations)

    def __len__(self):
        return len(self.violations)


@dataclass(frozen=True)
class SimplicialSet:
    """``cells[k]`` lists the level-``k`` cells; ``faces[k][c]`` is the tuple
    ``(d_0 c, ..., d_k c)`` and ``degens[k][c]`` is ``(s_0 c, ..., s_k c)``."""

    dim_bound: int
    cells: tuple
    faces: tuple
    degens: tuple

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(sorted_cells(c) for c in self.cells))

    @classmethod
    def from_functions(cls, dim_bound: int, cells: Iterable[Iterable],
                       d: Callable, s: Callable) -> "SimplicialSet":
        """Tabulate ``d(k, i, c)`` and ``s(k, i, c)`` over the given cells."""
        cells = [sorted_cells(c) for c in cells]
        if len(cells) != dim_bound + 1:
            raise ValueError(f"need {dim_bound + 1} levels of cells, got {len(cells)}")
        faces = [{}]
        for k in range(1, dim_bound + 1):
            faces.append({c: tuple(d(k, i, c) for i in range(k + 1)) for c in cells[k]})
        degens = [{c: tuple(s(k, i, c) for i in range(k + 1)) for c in cells[k]}
                  for k in range(dim_bound)]
        return cls(dim_bound, tuple(cells), tuple(faces), tuple(degens))

    def d(self, k: int, i: int, c):
        return self.faces[k][c][i]

    def s(self, k: int, i: int, c):
        if k >= self.dim_bound:
            raise ValueError(f"level {k + 1} not stored (dim_bound={self.dim_bound})")
        return self.degens[k][c][i]

    def act(self, theta: MonotoneMap, c):
        if theta.target_rank > self.dim_bound or theta.source_rank > self.dim_bound:
            raise ValueError("level not stored")
        return act(theta, c, self.d, self.s)

    def vertices(self, k: int, c) -> tuple:
        return tuple(self.act(vertex(i, k), c) for i in range(k + 1))

    def degenerate_cells(self, k: int) -> set:
        if k == 0:
            return set()
        return {x for row in self.degens[k - 1].values() for x in row}

    def nondegenerate(self, k: int) -> tuple:
        degenerate = self.degenerate_cells(k)
        return tuple(c for c in self.cells[k] if c not in degenerate)

    def counts(self) -> tuple:
        return tuple(len(c) for c in self.cells)

    def __repr__(self):
        return f"SimplicialSet(dim_bound={self.dim_bound}, counts={self.counts()})"


def check_simplicial_identities(bound: int, cells_at: Callable, d: Callable,
                                s: Callable, where: Callable) -> list:
    """Check the simplicial identities along one direction.

    ``d(k, i, c)`` / ``s(k, i, c)`` return ``None`` when undefined; those
    instances are skipped (missing entries are reported elsewhere).
    """
    out = []

    def eq(rule, k, c, lhs, rhs):
        if lhs is not None and rhs is not None and lhs != rhs:
            out.append(Violation(rule, where(k, c), f"{fmt(lhs)} != {fmt(rhs)}"))

    for k in range(bound + 1):
        for c in cells_at(k):
            # d_i d_j = d_{j-1} d_i  (i < j)
            if k >= 2:
                for j in range(k + 1):
                    dj = d(k, j, c)
                    for i in range(j):
                        di = d(k, i, c)
                        lhs = None if dj is None else d(k - 1, i, dj)
                        rhs = None if di is None else d(k - 1, j - 1, di)
                        eq(f"d{i}d{j}=d{j - 1}d{i}", k, c, lhs, rhs)
            if k + 1 <= bound:
                for j in range(k + 1):
                    sj = s(k, j, c)
                    if sj is None:
                        continue
                    for i in range(k + 2):
                        lhs = d(k + 1, i, sj)
                        if i == j or i == j + 1:
                            eq(f"d{i}s{j}=id", k, c, lhs, c)
                        elif k >= 1 and i < j:
                            di = d(k, i, c)
                            eq(f"d{i}s{j}=s{j - 1}d{i}", k, c, lhs,
                               None if di is None else s(k - 1, j - 1, di))
                        elif k >= 1 and i > j + 1:
                            di = d(k, i - 1, c)
                            eq(f"d{i}s{j}=s{j}d{i - 1}", k, c, lhs,
                               None if di is None else s(k - 1, j, di))
            if k + 2 <= bound:
                for j in range(k + 1):
                    sj = s(k, j, c)
                    for i in range(j + 1):
                        si = s(k, i, c)
                        lhs = None if sj is None else s(k + 1, i, sj)
                        rhs = None if si is None else s(k + 1, j + 1, si)
                        eq(f"s{i}s{j}=s{j + 1}s{i}", k, c, lhs, rhs)
    return out


def _table_getter(table_for: Callable):
    def get(k, i, c):
        try:
            row = table_for(k)[c]
            return row[i]
        except (KeyError, IndexError, TypeError):
            return None
    return get


def check_tables(bound: int, cells_at: Callable, faces_at: Callable,
                 degens_at: Callable, where: Callable) -> list:
    """Totality and landing of the face/degeneracy tables along one direction."""
    out = []
    for k in range(bound + 1):
        cells = cells_at(k)
        if k >= 1:
            table = faces_at(k)
            lower = set(cells_at(k - 1))
            for c in cells:
                row = table.get(c) if table is not None else None
                if row is None or len(row) != k + 1:
                    out.append(Violation("face-table", where(k, c), "missing or wrong arity"))
                    continue
                for i, x in enumerate(row):
                    if x not in lower:
                        out.append(Violation("face-lands", where(k, c),
                                             f"d{i} -> {fmt(x)} not a level-{k - 1} cell"))
        if k < bound:
            table = degens_at(k)
            upper = set(cells_at(k + 1))
            for c in cells:
                row = table.get(c) if table is not None else None
                if row is None or len(row) != k + 1:
                    out.append(Violation("degeneracy-table", where(k, c), "missing or wrong arity"))
                    continue
                for i, x in enumerate(row):
                    if x not in upper:
                        out.append(Violation("degeneracy-lands", where(k, c),
                                             f"s{i} -> {fmt(x)} not a level-{k + 1} cell"))
    return out


def validate_sset(X: SimplicialSet) -> ValidationReport:
    D = X.dim_bound
    if len(X.cells) != D + 1 or len(X.faces) != D + 1 or len(X.degens) != D:
        return ValidationReport((Violation("shape", "levels",
                                           f"dim_bound {D} but tables have the wrong length"),))

    def where(k, c):
        return f"level {k} cell {fmt(c)}"

    out = check_tables(D, lambda k: X.cells[k], lambda k: X.faces[k],
                       lambda k: X.degens[k], where)
    out += check_simplicial_identities(
        D, lambda k: X.cells[k], _table_getter(lambda k: X.faces[k]),
        _table_getter(lambda k: X.degens[k] if k < D else {}), where)
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class SSetMap:
    source: SimplicialSet
    target: SimplicialSet
    levels: tuple  # levels[k]: dict source cell -> target cell

    def __call__(self, k: int, c):
        return self.levels[k][c]

    def is_levelwise_bijective(self) -> bool:
        return all(len(set(self.levels[k].values())) == len(self.target.cells[k])
                   == len(self.source.cells[k]) for k in range(self.source.dim_bound + 1))


def validate_map(f: SSetMap) -> ValidationReport:
    X, Y = f.source, f.target
    out = []
    if X.dim_bound != Y.dim_bound:
        return ValidationReport((Violation("shape", "dim_bound", f"{X.dim_bound} != {Y.dim_bound}"),))
    for k in range(X.dim_bound + 1):
        table = f.levels[k]
        targets = set(Y.cells[k])
        for c in X.cells[k]:
            if c not in table or table[c] not in targets:
                out.append(Violation("map-total", f"level {k} cell {fmt(c)}", "unmapped or off-target"))
                continue
            if k >= 1:
                for i in range(k + 1):
                    a = f.levels[k - 1].get(X.d(k, i, c))
                    b = Y.d(k, i, table[c])
                    if a != b:
                        out.append(Violation(f"commutes-d{i}", f"level {k} cell {fmt(c)}",
                                             f"{fmt(a)} != {fmt(b)}"))
            if k < X.dim_bound:
                for i in range(k + 1):
                    a = f.levels[k + 1].get(X.s(k, i, c))
                    b = Y.s(k, i, table[c])
                    if a != b:
                        out.append(Violation(f"commutes-s{i}", f"level {k} cell {fmt(c)}",
                                             f"{fmt(a)} != {fmt(b)}"))
    return ValidationReport(tuple(out))


def identity_map(X: SimplicialSet) -> SSetMap:
    return SSetMap(X, X, tuple({c: c for c in lvl} for lvl in X.cells))


def compose_maps(f: SSetMap, g: SSetMap) -> SSetMap:
    """``f`` then ``g``."""
    return SSetMap(f.source, g.target,
                   tuple({c: g.levels[k][f.levels[k][c]] for c in f.source.cells[k]}
                         for k in range(f.source.dim_bound + 1)))


# ---------------------------------------------------------------- constructors

def simplicial_complex(facets: Iterable[Iterable], dim_bound: int) -> SimplicialSet:
    """The simplicial set of an ordered simplicial complex.

    Level-``k`` cells are nondecreasing ``(k+1)``-tuples of vertices that lie
    in a common facet (vertices ordered by :func:`cell_key`).
    """
    facets = [sorted_cells(f) for f in facets]
    cells = []
    for k in range(dim_bound + 1):
        level = set()
        for f in facets:
            for combo in product(range(len(f)), repeat=k + 1):
                if all(a <= b for a, b in zip(combo, combo[1:])):
                    level.add(tuple(f[t] for t in combo))
        cells.append(level)
    return SimplicialSet.from_functions(
        dim_bound, cells,
        lambda k, i, c: c[:i] + c[i + 1:],
        lambda k, i, c: c[:i + 1] + c[i:])


def standard_simplex(n: int, dim_bound: int = 3) -> SimplicialSet:
    return simplicial_complex([range(n + 1)], dim_bound)


def boundary_simplex(n: int, dim_bound: int = 3) -> SimplicialSet:
    verts = list(range(n + 1))
    return simplicial_complex([verts[:i] + verts[i + 1:] for i in range(n + 1)], dim_bound)


def horn(n: int, k: int, dim_bound: int = 3) -> SimplicialSet:
    """The horn: the boundary of the n-simplex minus the face opposite ``k``."""
    verts = list(range(n + 1))
    return simplicial_complex([verts[:i] + verts[i + 1:] for i in range(n + 1) if i != k],
                              dim_bound)


def discrete_sset(points: Iterable, dim_bound: int = 3) -> SimplicialSet:
    return simplicial_complex([[p] for p in points], dim_bound)


def point(dim_bound: int = 3) -> SimplicialSet:
    return discrete_sset([0], dim_bound)


def coproduct(*parts: SimplicialSet) -> SimplicialSet:
    """Disjoint union; cells are tagged ``(index, cell)``."""
    D = parts[0].dim_bound
    if any(p.dim_bound != D for p in parts):
        raise ValueError("dim_bound mismatch")
    return SimplicialSet.from_functions(
        D, [[(t, c) for t, p in enumerate(parts) for c in p.cells[k]] for k in range(D + 1)],
        lambda k, i, c: (c[0], parts[c[0]].d(k, i, c[1])),
        lambda k, i, c: (c[0], parts[c[0]].s(k, i, c[1])))


def truncate(X: SimplicialSet, dim_bound: int) -> SimplicialSet:
    if dim_bound > X.dim_bound:
        raise ValueError("cannot raise dim_bound by truncation")
    return SimplicialSet(dim_bound, X.cells[:dim_bound + 1], X.faces[:dim_bound + 1],
                         X.degens[:dim_bound])


def sub_sset(X: SimplicialSet, keep: Callable) -> SimplicialSet:
    """The sub-simplicial set of cells satisfying ``keep(k, c)`` (must be closed)."""
    cells = [tuple(c for c in X.cells[k] if keep(k, c)) for k in range(X.dim_bound + 1)]
    faces = [{}] + [{c: X.faces[k][c] for c in cells[k]} for k in range(1, X.dim_bound + 1)]
    degens = [{c: X.degens[k][c] for c in cells[k]} for k in range(X.dim_bound)]
    return SimplicialSet(X.dim_bound, tuple(cells), tuple(faces), tuple(degens))


# ------------------------------------------------------------------ operations

def pi0(X: SimplicialSet) -> Partition:
    """Path components of the vertices (coequalizer of ``d_0, d_1``)."""
    if X.dim_bound < 1:
        raise ValueError("need 1-cells")
    uf = UnionFind(X.cells[0])
    for e in X.cells[1]:
        uf.union(X.d(1, 0, e), X.d(1, 1, e))
    return uf.partition()


@dataclass(frozen=True)
class FiberProduct:
    sset: SimplicialSet
    pr1: SSetMap
    pr2: SSetMap


def fiber_product(f: SSetMap, g: SSetMap) -> FiberProduct:
    """Levelwise pullback of ``f : X -> Z`` and ``g : Y -> Z``; cells are pairs."""
    if f.target is not g.target and f.target != g.target:
        raise ValueError("target mismatch")
    X, Y = f.source, g.source
    if X.dim_bound != Y.dim_bound:
        raise ValueError("dim_bound mismatch")
    D = X.dim_bound
    cells = []
    for k in range(D + 1):
        by_image = defaultdict(list)
        for y in Y.cells[k]:
            by_image[g.levels[k][y]].append(y)
        cells.append([(x, y) for x in X.cells[k] for y in by_image.get(f.levels[k][x], ())])
    P = SimplicialSet.from_functions(
        D, cells,
        lambda k, i, c: (X.d(k, i, c[0]), Y.d(k, i, c[1])),
        lambda k, i, c: (X.s(k, i, c[0]), Y.s(k, i, c[1])))
    pr1 = SSetMap(P, X, tuple({c: c[0] for c in P.cells[k]} for k in range(D + 1)))
    pr2 = SSetMap(P, Y, tuple({c: c[1] for c in P.cells[k]} for k in range(D + 1)))
    return FiberProduct(P, pr1, pr2)


@dataclass(frozen=True)
class SegalMap:
    """``X_m -> X_1 x_{X_0} ... x_{X_0} X_1`` as a map of finite sets."""

    m: int
    source: tuple
    target: tuple
    mapping: dict

    @property
    def injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.source)

    @property
    def surjective(self) -> bool:
        return set(self.mapping.values()) == set(self.target)

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def unfilled(self) -> tuple:
        hit = set(self.mapping.values())
        return tuple(t for t in self.target if t not in hit)

    def collisions(self) -> tuple:
        seen = {}
        out = []
        for c in self.source:
            img = self.mapping[c]
            if img in seen:
                out.append((seen[img], c))
            else:
                seen[img] = c
        return tuple(out)


def spine_chains(X: SimplicialSet, m: int) -> tuple:
    """Composable strings of ``m`` edges: ``d_0 e_i == d_1 e_{i+1}``."""
    by_source = defaultdict(list)
    for e in X.cells[1]:
        by_source[X.d(1, 1, e)].append(e)
    chains = [(e,) for e in X.cells[1]]
    for _ in range(m - 1):
        chains = [ch + (e,) for ch in chains for e in by_source.get(X.d(1, 0, ch[-1]), ())]
    return sorted_cells(chains)


def segal_map(X: SimplicialSet, m: int) -> SegalMap:
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > X.dim_bound:
        raise ValueError("level not stored")
    mapping = {c: tuple(X.act(spine_edge(i, m), c) for i in range(m)) for c in X.cells[m]}
    return SegalMap(m, X.cells[m], spine_chains(X, m), mapping)


@dataclass(frozen=True)
class NerveReport:
    ok: bool
    reasons: tuple = ()
    groupoid: object = None  # FinGroupoid when ok
    is_category: bool = False

    def __bool__(self):
        return self.ok


def is_nerve_of_groupoid(X: SimplicialSet) -> NerveReport:
    """Decide whether ``X`` (up to its bound) is the nerve of a groupoid.

    Segal maps must be bijective at every stored level ``m >= 2``; the
    composition read off from 2-cells must be unital and associative (checked
    directly, so ``dim_bound = 2`` is enough) and every edge must be invertible.
    """
    from .groupoid import FinGroupoid

    if X.dim_bound < 2:
        return NerveReport(False, ("dim_bound < 2: composition not stored",))
    report = validate_sset(X)
    if not report.ok:
        return NerveReport(False, tuple(f"invalid simplicial set: {v}" for v in report.violations[:5]))
    reasons = []
    for m in range(2, X.dim_bound + 1):
        sm = segal_map(X, m)
        if not sm.injective:
            a, b = sm.collisions()[0]
            reasons.append(f"segal map m={m} not injective: {fmt(a)} and {fmt(b)} share a spine")
        if not sm.surjective:
            reasons.append(f"segal map m={m} not surjective: spine {fmt(sm.unfilled()[0])} has no filler")
    if reasons:
        return NerveReport(False, tuple(reasons))
    src = {e: X.d(1, 1, e) for e in X.cells[1]}
    tgt = {e: X.d(1, 0, e) for e in X.cells[1]}
    ident = {x: X.s(0, 0, x) for x in X.cells[0]}
    comp = {}
    for sigma in X.cells[2]:
        comp[(X.d(2, 2, sigma), X.d(2, 0, sigma))] = X.d(2, 1, sigma)
    for (f, g), h in comp.items():
        if src[h] != src[f] or tgt[h] != tgt[g]:
            reasons.append(f"composite of {fmt(f)},{fmt(g)} has wrong endpoints")
    for e in X.cells[1]:
        if comp.get((ident[src[e]], e)) != e or comp.get((e, ident[tgt[e]])) != e:
            reasons.append(f"identity law fails for {fmt(e)}")
    out_of = defaultdict(list)
    for e in X.cells[1]:
        out_of[src[e]].append(e)
    if not reasons:
        for f in X.cells[1]:
            for g in out_of[tgt[f]]:
                for h in out_of[tgt[g]]:
                    if comp[(comp[(f, g)], h)] != comp[(f, comp[(g, h)])]:
                        reasons.append(f"associativity fails for {fmt(f)},{fmt(g)},{fmt(h)}")
                        break
    if reasons:
        return NerveReport(False, tuple(reasons))
    inverse = {}
    for f in X.cells[1]:
        for g in out_of[tgt[f]]:
            if tgt[g] == src[f] and comp[(f, g)] == ident[src[f]] \
                    and comp[(g, f)] == ident[tgt[f]]:
                inverse[f] = g
                break
        else:
            reasons.append(f"no inverse for morphism {fmt(f)}")
    if reasons:
        return NerveReport(False, tuple(reasons), is_category=True)
    G = FinGroupoid(X.cells[0], {e: (src[e], tgt[e]) for e in X.cells[1]}, comp, ident, inverse)
    return NerveReport(True, (), G, True)
