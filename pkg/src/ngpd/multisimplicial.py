"""n-fold simplicial sets with per-axis bounds.

Cells live at multi-indices ``(m_1, ..., m_n)``.  ``faces[(a, idx)][c]`` holds
``(d_0 c, ..., d_{m_a} c)`` along axis ``a`` and ``degens[(a, idx)][c]`` the
degeneracies, stored only where the target level is within bounds.  Axis 0
is the outer axis; the last axis is the innermost.  Arity 0 is allowed and
is simply a finite set stored at the empty index.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable, Sequence

from ._util import Partition, UnionFind, fmt, sorted_cells
from .monotone import MonotoneMap, act, spine_edge, vertex
from .simplicial import (SimplicialSet, SSetMap, ValidationReport, Violation,
                         _table_getter, check_simplicial_identities, check_tables)


def bump(idx: tuple, axis: int, delta: int) -> tuple:
    return idx[:axis] + (idx[axis] + delta,) + idx[axis + 1:]


def put(idx: tuple, axis: int, value: int) -> tuple:
    return idx[:axis] + (value,) + idx[axis + 1:]


def idx_str(idx: tuple) -> str:
    return ",".join(str(m) for m in idx)


@dataclass(frozen=True, eq=False)
class MultiSSet:
    dim_bounds: tuple
    cells: dict
    faces: dict
    degens: dict

    def __post_init__(self):
        object.__setattr__(self, "dim_bounds", tuple(int(b) for b in self.dim_bounds))
        object.__setattr__(self, "cells", {idx: sorted_cells(c) for idx, c in self.cells.items()})

    def __eq__(self, other):
        if not isinstance(other, MultiSSet):
            return NotImplemented
        return (self.dim_bounds == other.dim_bounds and self.cells == other.cells
                and self.faces == other.faces and self.degens == other.degens)

    __hash__ = None

    @property
    def arity(self) -> int:
        return len(self.dim_bounds)

    def indices(self) -> list:
        return list(product(*(range(b + 1) for b in self.dim_bounds)))

    @classmethod
    def from_functions(cls, dim_bounds: Sequence[int], cells: Callable,
                       d: Callable, s: Callable) -> "MultiSSet":
        """Tabulate ``cells(idx)``, ``d(axis, idx, i, c)`` and ``s(axis, idx, i, c)``."""
        bounds = tuple(dim_bounds)
        table = {idx: sorted_cells(cells(idx)) for idx in product(*(range(b + 1) for b in bounds))}
        faces, degens = {}, {}
        for idx, cs in table.items():
            for a, m in enumerate(idx):
                if m >= 1:
                    faces[(a, idx)] = {c: tuple(d(a, idx, i, c) for i in range(m + 1)) for c in cs}
                if m < bounds[a]:
                    degens[(a, idx)] = {c: tuple(s(a, idx, i, c) for i in range(m + 1)) for c in cs}
        return cls(bounds, table, faces, degens)

    @classmethod
    def from_set(cls, elements: Iterable) -> "MultiSSet":
        return cls((), {(): tuple(elements)}, {}, {})

    def d(self, axis: int, idx: tuple, i: int, c):
        return self.faces[(axis, idx)][c][i]

    def s(self, axis: int, idx: tuple, i: int, c):
        if idx[axis] >= self.dim_bounds[axis]:
            raise ValueError(f"level {idx[axis] + 1} on axis {axis} not stored")
        return self.degens[(axis, idx)][c][i]

    def act(self, axis: int, idx: tuple, theta: MonotoneMap, c):
        """``theta^*`` along ``axis`` on a cell at ``idx`` (``idx[axis]`` is the target rank)."""
        return act(theta, c,
                   lambda k, i, x: self.d(axis, put(idx, axis, k), i, x),
                   lambda k, i, x: self.s(axis, put(idx, axis, k), i, x))

    @property
    def elements(self) -> tuple:
        """The underlying set of an arity-0 object."""
        if self.arity:
            raise ValueError("elements only for arity 0")
        return self.cells[()]

    def counts(self) -> dict:
        return {idx: len(c) for idx, c in self.cells.items()}

    def __repr__(self):
        return f"MultiSSet(dim_bounds={self.dim_bounds}, cells={sum(map(len, self.cells.values()))})"


def validate_multisset(P: MultiSSet) -> ValidationReport:
    bounds = P.dim_bounds
    expected = set(P.indices())
    if set(P.cells) != expected:
        return ValidationReport((Violation("shape", "indices", "cell table does not cover every index"),))
    out = []
    n = P.arity
    for a in range(n):
        others = [range(b + 1) if t != a else (0,) for t, b in enumerate(bounds)]
        for base in product(*others):
            def at(k, base=base):
                return put(base, a, k)

            def where(k, c, base=base, a=a):
                return f"axis {a} index ({idx_str(put(base, a, k))}) cell {fmt(c)}"

            out += check_tables(bounds[a], lambda k: P.cells[at(k)],
                                lambda k: P.faces.get((a, at(k))),
                                lambda k: P.degens.get((a, at(k))), where)
            out += check_simplicial_identities(
                bounds[a], lambda k: P.cells[at(k)],
                _table_getter(lambda k: P.faces.get((a, at(k)), {})),
                _table_getter(lambda k: P.degens.get((a, at(k)), {})), where)
    if out:
        return ValidationReport(tuple(out))

    def D(axis, idx, i, c):
        try:
            return P.faces[(axis, idx)][c][i]
        except KeyError:
            return None

    def S(axis, idx, i, c):
        try:
            return P.degens[(axis, idx)][c][i]
        except KeyError:
            return None

    for a in range(n):
        for b in range(a + 1, n):
            for idx in P.indices():
                ma, mb = idx[a], idx[b]
                for c in P.cells[idx]:
                    def check(rule, lhs, rhs):
                        if lhs != rhs:
                            out.append(Violation(f"commute {rule}", f"axes ({a},{b}) index "
                                                 f"({idx_str(idx)}) cell {fmt(c)}",
                                                 f"{fmt(lhs)} != {fmt(rhs)}"))
                    for i in range(ma + 1) if ma >= 1 else ():
                        for j in range(mb + 1) if mb >= 1 else ():
                            check(f"d{i}|d{j}",
                                  D(b, bump(idx, a, -1), j, D(a, idx, i, c)),
                                  D(a, bump(idx, b, -1), i, D(b, idx, j, c)))
                    for i in range(ma + 1) if ma >= 1 else ():
                        for j in range(mb + 1) if mb < bounds[b] else ():
                            check(f"d{i}|s{j}",
                                  S(b, bump(idx, a, -1), j, D(a, idx, i, c)),
                                  D(a, bump(idx, b, 1), i, S(b, idx, j, c)))
                    for i in range(ma + 1) if ma < bounds[a] else ():
                        for j in range(mb + 1) if mb >= 1 else ():
                            check(f"s{i}|d{j}",
                                  D(b, bump(idx, a, 1), j, S(a, idx, i, c)),
                                  S(a, bump(idx, b, -1), i, D(b, idx, j, c)))
                    for i in range(ma + 1) if ma < bounds[a] else ():
                        for j in range(mb + 1) if mb < bounds[b] else ():
                            check(f"s{i}|s{j}",
                                  S(b, bump(idx, a, 1), j, S(a, idx, i, c)),
                                  S(a, bump(idx, b, 1), i, S(b, idx, j, c)))
    return ValidationReport(tuple(out))


# ----------------------------------------------------------------------- maps

@dataclass(frozen=True)
class MultiSSetMap:
    source: MultiSSet
    target: MultiSSet
    levels: dict  # idx -> {source cell: target cell}

    def __call__(self, idx: tuple, c):
        return self.levels[idx][c]

    def is_levelwise_bijective(self) -> bool:
        return all(len(set(self.levels[idx].values())) == len(self.source.cells[idx])
                   == len(self.target.cells[idx]) for idx in self.source.indices())


def validate_multimap(f: MultiSSetMap) -> ValidationReport:
    X, Y = f.source, f.target
    if X.dim_bounds != Y.dim_bounds:
        return ValidationReport((Violation("shape", "dim_bounds", f"{X.dim_bounds} != {Y.dim_bounds}"),))
    out = []
    for idx in X.indices():
        tab = f.levels.get(idx, {})
        ys = set(Y.cells[idx])
        for c in X.cells[idx]:
            if tab.get(c) not in ys:
                out.append(Violation("map-total", f"({idx_str(idx)}) cell {fmt(c)}", "unmapped or off-target"))
    if out:
        return ValidationReport(tuple(out))
    for idx in X.indices():
        for a, m in enumerate(idx):
            for c in X.cells[idx]:
                fc = f.levels[idx][c]
                for i in range(m + 1) if m >= 1 else ():
                    lhs = f.levels[bump(idx, a, -1)][X.d(a, idx, i, c)]
                    if lhs != Y.d(a, idx, i, fc):
                        out.append(Violation(f"commutes d{i} axis {a}", f"({idx_str(idx)}) cell {fmt(c)}",
                                             f"{fmt(lhs)} != {fmt(Y.d(a, idx, i, fc))}"))
                for i in range(m + 1) if m < X.dim_bounds[a] else ():
                    lhs = f.levels[bump(idx, a, 1)][X.s(a, idx, i, c)]
                    if lhs != Y.s(a, idx, i, fc):
                        out.append(Violation(f"commutes s{i} axis {a}", f"({idx_str(idx)}) cell {fmt(c)}",
                                             f"{fmt(lhs)} != {fmt(Y.s(a, idx, i, fc))}"))
    return ValidationReport(tuple(out))


def identity_multimap(P: MultiSSet) -> MultiSSetMap:
    return MultiSSetMap(P, P, {idx: {c: c for c in cs} for idx, cs in P.cells.items()})


def compose_multimaps(f: MultiSSetMap, g: MultiSSetMap) -> MultiSSetMap:
    """``f`` then ``g``."""
    return MultiSSetMap(f.source, g.target,
                        {idx: {c: g.levels[idx][y] for c, y in tab.items()}
                         for idx, tab in f.levels.items()})


# --------------------------------------------------------- conversions

def from_sset(X: SimplicialSet) -> MultiSSet:
    return MultiSSet.from_functions(
        (X.dim_bound,), lambda idx: X.cells[idx[0]],
        lambda a, idx, i, c: X.d(idx[0], i, c), lambda a, idx, i, c: X.s(idx[0], i, c))


def to_sset(P: MultiSSet) -> SimplicialSet:
    if P.arity != 1:
        raise ValueError(f"to_sset needs arity 1, got {P.arity}")
    (D,) = P.dim_bounds
    return SimplicialSet.from_functions(
        D, [P.cells[(k,)] for k in range(D + 1)],
        lambda k, i, c: P.d(0, (k,), i, c), lambda k, i, c: P.s(0, (k,), i, c))


def from_sset_map(f: SSetMap) -> MultiSSetMap:
    return MultiSSetMap(from_sset(f.source), from_sset(f.target),
                        {(k,): dict(tab) for k, tab in enumerate(f.levels)})


def to_sset_map(f: MultiSSetMap) -> SSetMap:
    (D,) = f.source.dim_bounds
    return SSetMap(to_sset(f.source), to_sset(f.target),
                   tuple(dict(f.levels[(k,)]) for k in range(D + 1)))


# -------------------------------------------------------- outer structure

def outer_level(P: MultiSSet, m: int) -> MultiSSet:
    """Fix the outer axis at ``m``; the result has arity ``n - 1``."""
    if P.arity < 1:
        raise ValueError("outer_level needs arity >= 1")
    if not 0 <= m <= P.dim_bounds[0]:
        raise ValueError(f"outer level {m} out of range 0..{P.dim_bounds[0]}")
    return MultiSSet.from_functions(
        P.dim_bounds[1:], lambda J: P.cells[(m,) + J],
        lambda a, J, i, c: P.d(a + 1, (m,) + J, i, c),
        lambda a, J, i, c: P.s(a + 1, (m,) + J, i, c))


def outer_face(P: MultiSSet, m: int, i: int, source=None, target=None) -> MultiSSetMap:
    """``d_i`` along the outer axis as a map ``outer_level(m) -> outer_level(m-1)``."""
    src = source or outer_level(P, m)
    tgt = target or outer_level(P, m - 1)
    return MultiSSetMap(src, tgt, {J: {c: P.d(0, (m,) + J, i, c) for c in src.cells[J]}
                                   for J in src.indices()})


def outer_degeneracy(P: MultiSSet, m: int, i: int, source=None, target=None) -> MultiSSetMap:
    src = source or outer_level(P, m)
    tgt = target or outer_level(P, m + 1)
    return MultiSSetMap(src, tgt, {J: {c: P.s(0, (m,) + J, i, c) for c in src.cells[J]}
                                   for J in src.indices()})


def outer_act(P: MultiSSet, J: tuple, theta: MonotoneMap, c):
    return P.act(0, (theta.target_rank,) + J, theta, c)


def spine_product(P: MultiSSet, m: int) -> MultiSSet:
    """``P_1 x_{P_0} ... x_{P_0} P_1`` (``m`` factors) as an arity ``n - 1`` object.

    Cells are tuples ``(e_1, ..., e_m)`` with ``d_0 e_i == d_1 e_{i+1}`` on
    the outer axis; inner structure maps act componentwise.
    """
    if m < 1:
        raise ValueError("m must be >= 1")

    def chains(J):
        by_src = defaultdict(list)
        for e in P.cells[(1,) + J]:
            by_src[P.d(0, (1,) + J, 1, e)].append(e)
        out = [(e,) for e in P.cells[(1,) + J]]
        for _ in range(m - 1):
            out = [ch + (e,) for ch in out for e in by_src.get(P.d(0, (1,) + J, 0, ch[-1]), ())]
        return out

    return MultiSSet.from_functions(
        P.dim_bounds[1:], chains,
        lambda a, J, i, c: tuple(P.d(a + 1, (1,) + J, i, e) for e in c),
        lambda a, J, i, c: tuple(P.s(a + 1, (1,) + J, i, e) for e in c))


def outer_segal_map(P: MultiSSet, m: int) -> MultiSSetMap:
    """The spine map ``outer_level(P, m) -> spine_product(P, m)``."""
    if m > P.dim_bounds[0]:
        raise ValueError("level not stored")
    src, tgt = outer_level(P, m), spine_product(P, m)
    levels = {J: {c: tuple(outer_act(P, J, spine_edge(i, m), c) for i in range(m))
                  for c in src.cells[J]} for J in src.indices()}
    return MultiSSetMap(src, tgt, levels)


# ------------------------------------------------------------- diagonals

def total_diag(P: MultiSSet) -> SimplicialSet:
    """``k -> P_(k,...,k)`` with structure maps applied along every axis."""
    if P.arity < 1:
        raise ValueError("total_diag needs arity >= 1")
    n = P.arity
    D = min(P.dim_bounds)

    def d(k, i, c):
        idx = (k,) * n
        for a in range(n):
            c = P.d(a, idx, i, c)
            idx = bump(idx, a, -1)
        return c

    def s(k, i, c):
        idx = (k,) * n
        for a in range(n):
            c = P.s(a, idx, i, c)
            idx = bump(idx, a, 1)
        return c

    return SimplicialSet.from_functions(D, [P.cells[(k,) * n] for k in range(D + 1)], d, s)


def total_diag_map(f: MultiSSetMap) -> SSetMap:
    n = f.source.arity
    X, Y = total_diag(f.source), total_diag(f.target)
    return SSetMap(X, Y, tuple(dict(f.levels[(k,) * n]) for k in range(X.dim_bound + 1)))


def inner_diag(P: MultiSSet) -> MultiSSet:
    """Keep the outer axis and take the diagonal of the remaining ones (arity 2)."""
    if P.arity < 2:
        raise ValueError("inner_diag needs arity >= 2")
    n = P.arity
    D = min(P.dim_bounds[1:])

    def full(idx):
        return (idx[0],) + (idx[1],) * (n - 1)

    def d(a, idx, i, c):
        if a == 0:
            return P.d(0, full(idx), i, c)
        J = full(idx)
        for b in range(1, n):
            c = P.d(b, J, i, c)
            J = bump(J, b, -1)
        return c

    def s(a, idx, i, c):
        if a == 0:
            return P.s(0, full(idx), i, c)
        J = full(idx)
        for b in range(1, n):
            c = P.s(b, J, i, c)
            J = bump(J, b, 1)
        return c

    return MultiSSet.from_functions((P.dim_bounds[0], D), lambda idx: P.cells[full(idx)], d, s)


# ------------------------------------------------------------ products

def multi_product(P: MultiSSet, Q: MultiSSet) -> MultiSSet:
    """External product: cells at ``(I, J)`` are pairs ``(x, y)``."""
    p = P.arity

    def d(a, idx, i, c):
        if a < p:
            return (P.d(a, idx[:p], i, c[0]), c[1])
        return (c[0], Q.d(a - p, idx[p:], i, c[1]))

    def s(a, idx, i, c):
        if a < p:
            return (P.s(a, idx[:p], i, c[0]), c[1])
        return (c[0], Q.s(a - p, idx[p:], i, c[1]))

    return MultiSSet.from_functions(
        P.dim_bounds + Q.dim_bounds,
        lambda idx: [(x, y) for x in P.cells[idx[:p]] for y in Q.cells[idx[p:]]], d, s)


def external_product(X, Y) -> MultiSSet:
    """``X ⊠ Y`` for simplicial sets or multi-simplicial sets."""
    X = from_sset(X) if isinstance(X, SimplicialSet) else X
    Y = from_sset(Y) if isinstance(Y, SimplicialSet) else Y
    return multi_product(X, Y)


def external_product_map(f: MultiSSetMap, g: MultiSSetMap) -> MultiSSetMap:
    src, tgt = multi_product(f.source, g.source), multi_product(f.target, g.target)
    p = f.source.arity
    return MultiSSetMap(src, tgt, {idx: {(x, y): (f.levels[idx[:p]][x], g.levels[idx[p:]][y])
                                         for x, y in src.cells[idx]} for idx in src.indices()})


def levelwise_product(P: MultiSSet, Q: MultiSSet) -> MultiSSet:
    """Cartesian product of two objects of the same shape."""
    if P.dim_bounds != Q.dim_bounds:
        raise ValueError("dim_bounds mismatch")
    return MultiSSet.from_functions(
        P.dim_bounds, lambda idx: [(x, y) for x in P.cells[idx] for y in Q.cells[idx]],
        lambda a, idx, i, c: (P.d(a, idx, i, c[0]), Q.d(a, idx, i, c[1])),
        lambda a, idx, i, c: (P.s(a, idx, i, c[0]), Q.s(a, idx, i, c[1])))


@dataclass(frozen=True, eq=False)
class MultiFiberProduct:
    obj: MultiSSet
    pr1: MultiSSetMap
    pr2: MultiSSetMap


def multi_fiber_product(f: MultiSSetMap, g: MultiSSetMap) -> MultiFiberProduct:
    if f.target is not g.target and f.target != g.target:
        raise ValueError("target mismatch")
    X, Y = f.source, g.source
    if X.dim_bounds != Y.dim_bounds:
        raise ValueError("dim_bounds mismatch")

    def cells(idx):
        by_img = defaultdict(list)
        for y in Y.cells[idx]:
            by_img[g.levels[idx][y]].append(y)
        return [(x, y) for x in X.cells[idx] for y in by_img.get(f.levels[idx][x], ())]

    P = MultiSSet.from_functions(
        X.dim_bounds, cells,
        lambda a, idx, i, c: (X.d(a, idx, i, c[0]), Y.d(a, idx, i, c[1])),
        lambda a, idx, i, c: (X.s(a, idx, i, c[0]), Y.s(a, idx, i, c[1])))
    pr1 = MultiSSetMap(P, X, {idx: {c: c[0] for c in cs} for idx, cs in P.cells.items()})
    pr2 = MultiSSetMap(P, Y, {idx: {c: c[1] for c in cs} for idx, cs in P.cells.items()})
    return MultiFiberProduct(P, pr1, pr2)


def multi_coproduct(*parts: MultiSSet) -> MultiSSet:
    """Disjoint union; cells tagged ``(index, cell)``."""
    bounds = parts[0].dim_bounds
    if any(p.dim_bounds != bounds for p in parts):
        raise ValueError("dim_bounds mismatch")
    return MultiSSet.from_functions(
        bounds, lambda idx: [(t, c) for t, p in enumerate(parts) for c in p.cells[idx]],
        lambda a, idx, i, c: (c[0], parts[c[0]].d(a, idx, i, c[1])),
        lambda a, idx, i, c: (c[0], parts[c[0]].s(a, idx, i, c[1])))


def lift(P, inner_bound: int = 2) -> MultiSSet:
    """Append a constant innermost axis (all structure maps along it are identities)."""
    P = from_sset(P) if isinstance(P, SimplicialSet) else P
    n = P.arity

    def d(a, idx, i, c):
        return c if a == n else P.d(a, idx[:n], i, c)

    def s(a, idx, i, c):
        return c if a == n else P.s(a, idx[:n], i, c)

    return MultiSSet.from_functions(P.dim_bounds + (inner_bound,), lambda idx: P.cells[idx[:n]], d, s)


def lift_map(f: MultiSSetMap, inner_bound: int = 2) -> MultiSSetMap:
    src, tgt = lift(f.source, inner_bound), lift(f.target, inner_bound)
    n = f.source.arity
    return MultiSSetMap(src, tgt, {idx: dict(f.levels[idx[:n]]) for idx in src.indices()})


# ------------------------------------------------------------- truncation

@dataclass(frozen=True, eq=False)
class Truncation:
    obj: MultiSSet
    quotient: dict  # outer idx -> {cell: class representative}
    partitions: dict  # outer idx -> Partition


def pi0_innermost(P: MultiSSet) -> Truncation:
    """π₀ along the innermost axis at every outer index, with induced maps."""
    if P.arity < 1:
        raise ValueError("pi0_innermost needs arity >= 1")
    last = P.arity - 1
    if P.dim_bounds[last] < 1:
        raise ValueError("need 1-cells on the innermost axis")
    outer_bounds = P.dim_bounds[:last]
    parts, quotient = {}, {}
    for I in product(*(range(b + 1) for b in outer_bounds)):
        uf = UnionFind(P.cells[I + (0,)])
        for e in P.cells[I + (1,)]:
            uf.union(P.d(last, I + (1,), 0, e), P.d(last, I + (1,), 1, e))
        part = uf.partition()
        parts[I] = part
        quotient[I] = part.rep

    def induced(table_of, step):
        def f(a, I, i, r):
            image = {quotient[step(I, a)][table_of(a, I + (0,), i, c)] for c in parts[I].class_of(r)}
            if len(image) != 1:
                raise AssertionError(f"induced map not well defined at ({idx_str(I)}) class {fmt(r)}")
            return image.pop()
        return f

    obj = MultiSSet.from_functions(
        outer_bounds, lambda I: parts[I].representatives,
        induced(P.d, lambda I, a: bump(I, a, -1)),
        induced(P.s, lambda I, a: bump(I, a, 1)))
    return Truncation(obj, quotient, parts)


def truncate_T(P: MultiSSet) -> MultiSSet:
    return pi0_innermost(P).obj


def T_power(P: MultiSSet, k: int) -> MultiSSet:
    for _ in range(k):
        P = truncate_T(P)
    return P


def T_power_with_quotient(P: MultiSSet, k: int) -> tuple:
    """``T^k P`` together with the composite quotient on the level-0 cells."""
    base = P.cells[(0,) * P.arity]
    q = {c: c for c in base}
    for _ in range(k):
        t = pi0_innermost(P)
        zero = (0,) * (P.arity - 1)
        q = {c: t.quotient[zero][r] for c, r in q.items()}
        P = t.obj
    return P, q


def truncate_map(f: MultiSSetMap) -> MultiSSetMap:
    """The map induced on ``T`` of source and target."""
    ts, tt = pi0_innermost(f.source), pi0_innermost(f.target)
    levels = {}
    for I, part in ts.partitions.items():
        levels[I] = {r: tt.quotient[I][f.levels[I + (0,)][r]] for r in part.representatives}
    return MultiSSetMap(ts.obj, tt.obj, levels)


def T_power_map(f: MultiSSetMap, k: int) -> MultiSSetMap:
    for _ in range(k):
        f = truncate_map(f)
    return f


def permute_axes(P: MultiSSet, order: Sequence[int]) -> MultiSSet:
    """Reorder axes: axis ``t`` of the result is axis ``order[t]`` of ``P``."""
    order = tuple(order)
    if sorted(order) != list(range(P.arity)):
        raise ValueError(f"{order} is not a permutation of the axes")
    inv = {a: t for t, a in enumerate(order)}

    def back(idx):
        return tuple(idx[inv[a]] for a in range(P.arity))

    return MultiSSet.from_functions(
        tuple(P.dim_bounds[a] for a in order), lambda idx: P.cells[back(idx)],
        lambda t, idx, i, c: P.d(order[t], back(idx), i, c),
        lambda t, idx, i, c: P.s(order[t], back(idx), i, c))


def pi0_in_axis_order(P: MultiSSet, order: Sequence[int]) -> Partition:
    """Partition of ``P_(0,...,0)`` from truncating axis ``order[0]`` first, then
    ``order[1]``, and so on down to a plain set."""
    Q = permute_axes(P, tuple(reversed(order)))
    _, q = T_power_with_quotient(Q, Q.arity)
    classes = defaultdict(list)
    for c, r in q.items():
        classes[r].append(c)
    return Partition.from_classes(classes.values())


# ------------------------------------------------------------ P-object

@dataclass(frozen=True, eq=False)
class PObject:
    """``m -> total_diag(outer_level(P, m))`` with the induced outer maps."""

    source: MultiSSet
    diag2: MultiSSet  # outer axis kept, inner axes diagonalised

    @property
    def bound(self) -> int:
        return self.diag2.dim_bounds[0]

    def level(self, m: int) -> SimplicialSet:
        return to_sset(outer_level(self.diag2, m))

    def face(self, m: int, i: int) -> SSetMap:
        return to_sset_map(outer_face(self.diag2, m, i))

    def degeneracy(self, m: int, i: int) -> SSetMap:
        return to_sset_map(outer_degeneracy(self.diag2, m, i))

    def segal(self, m: int) -> SSetMap:
        """Induced map ``(PΦ)_m -> (PΦ)_1 x_{(PΦ)_0} ... x_{(PΦ)_0} (PΦ)_1``."""
        return to_sset_map(outer_segal_map(self.diag2, m))


def p_object(P: MultiSSet) -> PObject:
    if P.arity < 2:
        raise ValueError("p_object needs arity >= 2")
    return PObject(P, inner_diag(P))


def vertex_restriction(P: MultiSSet, idx: tuple, c, axes: Iterable[int]) -> tuple:
    """Restrict ``c`` to vertex 0 along each of ``axes``; returns (index, cell)."""
    for a in axes:
        c = P.act(a, idx, vertex(0, idx[a]), c)
        idx = put(idx, a, 0)
    return idx, c
