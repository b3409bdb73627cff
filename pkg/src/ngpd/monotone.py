"""Morphisms of the simplex category and their action on cells.

A monotone map ``[m] -> [n]`` is stored by its values.  Any such map acts
contravariantly on a simplicial object; :func:`act` evaluates that action
using only face and degeneracy lookups, by peeling the map into cofaces and
codegeneracies one step at a time.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable


@dataclass(frozen=True)
class MonotoneMap:
    source_rank: int
    target_rank: int
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if self.source_rank < 0 or self.target_rank < 0:
            raise ValueError("ranks must be non-negative")
        if len(vals) != self.source_rank + 1:
            raise ValueError(
                f"expected {self.source_rank + 1} values, got {len(vals)}")
        if any(v < 0 or v > self.target_rank for v in vals):
            raise ValueError(f"values {vals} out of range [0, {self.target_rank}]")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"values {vals} are not nondecreasing")

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def is_injective(self) -> bool:
        return len(set(self.values)) == len(self.values)

    @property
    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target_rank + 1))


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def coface(i: int, n: int) -> MonotoneMap:
    """The injection ``[n-1] -> [n]`` that misses ``i``."""
    if not 0 <= i <= n or n < 1:
        raise ValueError(f"coface index {i} out of range for [{n}]")
    return MonotoneMap(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


def codegeneracy(i: int, n: int) -> MonotoneMap:
    """The surjection ``[n+1] -> [n]`` that hits ``i`` twice."""
    if not 0 <= i <= n:
        raise ValueError(f"codegeneracy index {i} out of range for [{n}]")
    return MonotoneMap(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def vertex(i: int, m: int) -> MonotoneMap:
    """``[0] -> [m]`` sending 0 to ``i``."""
    return MonotoneMap(0, m, (i,))


def spine_edge(i: int, m: int) -> MonotoneMap:
    """``[1] -> [m]`` picking the edge ``(i, i+1)``."""
    return MonotoneMap(1, m, (i, i + 1))


def compose_monotone(f: MonotoneMap, g: MonotoneMap) -> MonotoneMap:
    """``f`` followed by ``g`` (so ``g o f`` pointwise)."""
    if f.target_rank != g.source_rank:
        raise ValueError(
            f"rank mismatch: f lands in [{f.target_rank}], g starts at [{g.source_rank}]")
    return MonotoneMap(f.source_rank, g.target_rank, tuple(g(v) for v in f.values))


FaceFn = Callable[[int, int, Hashable], Hashable]


def act(theta: MonotoneMap, cell, face: FaceFn, degen: FaceFn):
    """Apply ``theta^*`` to a cell of level ``theta.target_rank``.

    ``face(k, i, c)`` is ``d_i`` on a level-``k`` cell and ``degen(k, i, c)``
    is ``s_i`` on a level-``k`` cell.
    """
    n = theta.target_rank
    image = sorted(set(theta.values))
    # injective part first: strike out the missed vertices from the top down
    missing = [j for j in range(n + 1) if j not in set(image)]
    level = n
    for j in reversed(missing):
        cell = face(level, j, cell)
        level -= 1
    # theta = delta o sigma with sigma : [m] -> [k] surjective
    pos = {v: idx for idx, v in enumerate(image)}
    sigma = [pos[v] for v in theta.values]
    # peel codegeneracies from the top: sigma = sigma' o sigma^j, so
    # sigma^* = s_j o sigma'^*; collect j's then apply in reverse order
    js = []
    while len(sigma) - 1 > level:
        j = max(t for t in range(len(sigma) - 1) if sigma[t] == sigma[t + 1])
        js.append(j)
        sigma = sigma[:j + 1] + sigma[j + 2:]
    for j in reversed(js):
        cell = degen(level, j, cell)
        level += 1
    return cell
