"""Edge-path groupoid of a simplicial set and its vertex groups."""
from __future__ import annotations

from collections import deque

from ._util import cell_key, fmt
from .presentations import FpGroup, FpGroupoid, free_reduce, inverse_word
from .simplicial import SimplicialSet


def edge_word(X: SimplicialSet, e, degenerate: set) -> tuple:
    return () if e in degenerate else ((e, 1),)


def edge_path_groupoid(X: SimplicialSet) -> FpGroupoid:
    """Objects are vertices, generators the nondegenerate edges ``d1 e -> d0 e``.

    Each nondegenerate 2-cell ``t`` contributes the relation
    ``d2 t`` then ``d0 t`` equals ``d1 t``; degenerate edges are identities.
    """
    if X.dim_bound < 2:
        raise ValueError("relations need 2-cells")
    degenerate = X.degenerate_cells(1)
    gens = {e: (X.d(1, 1, e), X.d(1, 0, e)) for e in X.nondegenerate(1)}
    rels = []
    for t in X.nondegenerate(2):
        lhs = edge_word(X, X.d(2, 2, t), degenerate) + edge_word(X, X.d(2, 0, t), degenerate)
        rels.append((lhs, edge_word(X, X.d(2, 1, t), degenerate)))
    return FpGroupoid(X.cells[0], gens, tuple(rels))


def spanning_tree(P: FpGroupoid, x) -> dict:
    """Breadth-first tree from ``x``: vertex -> path word from ``x``."""
    incident: dict = {v: [] for v in P.objects}
    for g in P.generator_list:
        s, t = P.generators[g]
        incident[s].append((g, 1, t))
        incident[t].append((g, -1, s))
    paths = {x: ()}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for g, e, w in sorted(incident[v], key=lambda r: (cell_key(r[0]), -r[1])):
            if w not in paths:
                paths[w] = paths[v] + ((g, e),)
                queue.append(w)
    return paths


def vertex_group(P: FpGroupoid, x) -> FpGroup:
    """The vertex group at ``x``, presented via a spanning tree of its component."""
    if x not in set(P.objects):
        raise KeyError(f"{fmt(x)} is not an object")
    paths = spanning_tree(P, x)
    tree = {g for w in paths.values() for g, _ in w}
    gens = [g for g in P.generator_list if P.generators[g][0] in paths and g not in tree]
    keep = set(gens)

    def rewrite(w):
        return tuple((g, e) for g, e in w if g in keep)

    rels = []
    for lhs, rhs in P.relators:
        ends = P.endpoints(lhs) or P.endpoints(rhs)
        if ends is None or ends[0] not in paths:
            continue
        r = free_reduce(rewrite(lhs) + inverse_word(rewrite(rhs)))
        if r:
            rels.append(r)
    return FpGroup(tuple(gens), tuple(rels))


def component_vertex_groups(P: FpGroupoid) -> dict:
    """Vertex group at the smallest vertex of each component."""
    out = {}
    seen: set = set()
    for v in P.objects:
        if v in seen:
            continue
        seen.update(spanning_tree(P, v))
        out[v] = vertex_group(P, v)
    return out
