"""Small shared helpers: canonical cell ordering, union-find, partitions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable


def cell_key(c: Any):
    """Total order on cell identifiers (ints, strings, nested tuples)."""
    t = type(c)
    if t is tuple:
        return (2, tuple(map(cell_key, c)))
    if t is int:
        return (0, c)
    if t is str:
        return (1, c)
    if isinstance(c, bool):
        raise TypeError(f"bool is not a valid cell identifier: {c!r}")
    if isinstance(c, int):
        return (0, c)
    if isinstance(c, str):
        return (1, c)
    if isinstance(c, tuple):
        return (2, tuple(cell_key(x) for x in c))
    raise TypeError(f"unsupported cell identifier {c!r}")


class SortedCells(tuple):
    """A tuple already in canonical order and free of duplicates."""
    __slots__ = ()


def sorted_cells(cells: Iterable[Hashable]) -> tuple:
    if type(cells) is SortedCells:
        return cells
    return SortedCells(sorted(set(cells), key=cell_key))


def fmt(c: Any) -> str:
    """Compact, deterministic text form of an identifier (used in witnesses)."""
    if isinstance(c, tuple):
        return "(" + ",".join(fmt(x) for x in c) + ")"
    return str(c)


class UnionFind:
    def __init__(self, items: Iterable[Hashable] = ()):
        self.parent: dict = {}
        for x in items:
            self.parent[x] = x

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        # keep the smaller identifier as root so representatives are canonical
        if cell_key(rb) < cell_key(ra):
            ra, rb = rb, ra
        self.parent[rb] = ra

    def partition(self) -> "Partition":
        groups: dict = {}
        for x in self.parent:
            groups.setdefault(self.find(x), []).append(x)
        return Partition.from_classes(groups.values())


@dataclass(frozen=True)
class Partition:
    """A partition of a finite set; each class is named by its smallest element."""

    classes: tuple  # tuple of sorted tuples, ordered by representative

    @classmethod
    def from_classes(cls, classes: Iterable[Iterable]) -> "Partition":
        cs = [sorted_cells(c) for c in classes]
        cs = [c for c in cs if c]
        cs.sort(key=lambda c: cell_key(c[0]))
        return cls(tuple(cs))

    @property
    def representatives(self) -> tuple:
        return tuple(c[0] for c in self.classes)

    @cached_property
    def rep(self) -> dict:
        return {x: c[0] for c in self.classes for x in c}

    def __len__(self) -> int:
        return len(self.classes)

    @cached_property
    def _index(self) -> dict:
        return {x: c for c in self.classes for x in c}

    def class_of(self, x) -> tuple:
        return self._index[x]
