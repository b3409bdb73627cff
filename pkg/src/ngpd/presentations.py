"""Finitely presented groups and groupoids.

A word is a tuple of ``(generator, exponent)`` letters with exponent ``+1``
or ``-1``, read in path order: ``((a, 1), (b, 1))`` means "``a`` then ``b``".
Words are evaluated in a :class:`~ngpd.groupoid.FinGroupoid` with the same
diagrammatic convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ._util import cell_key, fmt, sorted_cells
from .groupoid import FinGroupoid


def letter_key(letter):
    g, e = letter
    return (cell_key(g), e)


def inverse_word(w: Sequence) -> tuple:
    return tuple((g, -e) for g, e in reversed(w))


def free_reduce(w: Iterable) -> tuple:
    out: list = []
    for g, e in w:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(w: Iterable) -> tuple:
    w = list(free_reduce(w))
    while len(w) >= 2 and w[0] == (w[-1][0], -w[-1][1]):
        w = w[1:-1]
    return tuple(w)


def canonical_relator(w: Iterable) -> tuple:
    """Least cyclic rotation of ``w`` or its inverse (relators up to conjugacy)."""
    w = cyclic_reduce(w)
    if not w:
        return ()
    best = None
    for cand in (w, inverse_word(w)):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            key = tuple(letter_key(x) for x in rot)
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


def word_str(w: Sequence) -> str:
    if not w:
        return "1"
    return " ".join(fmt(g) if e == 1 else f"{fmt(g)}^-1" for g, e in w)


@dataclass(frozen=True)
class FpGroup:
    generators: tuple
    relators: tuple

    def __post_init__(self):
        gens = sorted_cells(self.generators)
        known = set(gens)
        rels = []
        for w in self.relators:
            w = tuple((g, int(e)) for g, e in w)
            for g, e in w:
                if g not in known or e not in (1, -1):
                    raise ValueError(f"bad letter ({fmt(g)}, {e}) in relator")
            rels.append(w)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __str__(self):
        gens = ", ".join(fmt(g) for g in self.generators)
        rels = ", ".join(word_str(w) for w in self.relators)
        return f"< {gens} | {rels} >"


def free_group(n: int) -> FpGroup:
    return FpGroup(tuple(range(n)), ())


def presentation_of(G: FinGroupoid) -> FpGroup:
    """Multiplication-table presentation of a finite group."""
    if not G.is_group:
        raise ValueError("presentation_of needs a group")
    e = G.identity_element()
    gens = [g for g in G.morphism_list if g != e]
    rels = []
    for a in gens:
        for b in gens:
            c = G.compose(a, b)
            w = ((a, 1), (b, 1)) + (((c, -1),) if c != e else ())
            rels.append(w)
    return FpGroup(tuple(gens), tuple(rels))


@dataclass(frozen=True)
class FpGroupoid:
    objects: tuple
    generators: dict    # generator -> (source, target)
    relators: tuple     # pairs (word, word), both in path order

    def __post_init__(self):
        object.__setattr__(self, "objects", sorted_cells(self.objects))
        for lhs, rhs in self.relators:
            a, b = self.endpoints(lhs), self.endpoints(rhs)
            if a is not None and b is not None and a != b:
                raise ValueError(f"relator endpoints differ: {word_str(lhs)} vs {word_str(rhs)}")

    def endpoints(self, w: Sequence):
        """``(source, target)`` of a nonempty composable word, else ``None``."""
        if not w:
            return None
        ends = []
        for g, e in w:
            s, t = self.generators[g]
            ends.append((s, t) if e == 1 else (t, s))
        for (_, t), (s, _) in zip(ends, ends[1:]):
            if t != s:
                raise ValueError(f"word {word_str(w)} is not composable")
        return (ends[0][0], ends[-1][1])

    @property
    def generator_list(self) -> tuple:
        return sorted_cells(self.generators)


def evaluate_word(w: Sequence, G: FinGroupoid, assign: dict, start=None):
    """Evaluate ``w`` under ``assign : generator -> morphism``; empty word needs ``start``."""
    if not w:
        return G.identities[start]
    acc = None
    for g, e in w:
        m = assign[g] if e == 1 else G.inverse[assign[g]]
        acc = m if acc is None else G.compose(acc, m)
    return acc


# --------------------------------------------------------------- Tietze moves

def simplify(P: FpGroup) -> FpGroup:
    """Tietze-simplify: reduce relators, drop trivial and duplicate ones, and
    eliminate any generator occurring exactly once in some relator."""
    gens = list(P.generators)
    rels = [canonical_relator(w) for w in P.relators]
    while True:
        rels = sorted({w for w in rels if w}, key=lambda w: (len(w), [letter_key(x) for x in w]))
        target = None
        for w in rels:
            counts: dict = {}
            for g, _ in w:
                counts[g] = counts.get(g, 0) + 1
            once = sorted((g for g, n in counts.items() if n == 1), key=cell_key)
            if once:
                target = (w, once[-1])
                break
        if target is None:
            return FpGroup(tuple(gens), tuple(rels))
        w, g = target
        # w ~ g^e v u (cyclically)  =>  g^e = (v u)^-1
        pos = next(i for i, (h, _) in enumerate(w) if h == g)
        e = w[pos][1]
        rest = inverse_word(w[pos + 1:] + w[:pos])
        value = rest if e == 1 else inverse_word(rest)
        gens.remove(g)
        new = []
        for r in rels:
            if r is w:
                continue
            out = []
            for h, f in r:
                if h == g:
                    out.extend(value if f == 1 else inverse_word(value))
                else:
                    out.append((h, f))
            new.append(canonical_relator(out))
        rels = new


# ---------------------------------------------------------- abelianization

@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple

    def __post_init__(self):
        t = tuple(int(x) for x in self.torsion)
        object.__setattr__(self, "torsion", t)
        if self.free_rank < 0 or any(x < 2 for x in t):
            raise ValueError("invalid abelian invariants")
        if any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return " x ".join(parts) if parts else "1"


def relation_matrix(P: FpGroup) -> list:
    index = {g: j for j, g in enumerate(P.generators)}
    rows = []
    for w in P.relators:
        row = [0] * len(P.generators)
        for g, e in w:
            row[index[g]] += e
        rows.append(row)
    return rows


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list:
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    A = [list(r) for r in matrix if any(r)]
    if not A:
        return []
    rows, cols = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        A[t], A[pi] = A[pi], A[t]
        for r in A:
            r[t], r[pj] = r[pj], r[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if A[i][j] % p), None)
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            # move the smallest nonzero entry of row/column t into the pivot
            cand = [(abs(A[i][t]), i, t) for i in range(t, rows) if A[i][t]]
            cand += [(abs(A[t][j]), t, j) for j in range(t, cols) if A[t][j]]
            _, pi, pj = min(cand)
            A[t], A[pi] = A[pi], A[t]
            for r in A:
                r[t], r[pj] = r[pj], r[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def abelianization(P: FpGroup) -> AbelianInvariants:
    factors = smith_diagonal(relation_matrix(P))
    rank = len(P.generators) - len(factors)
    return AbelianInvariants(rank, tuple(d for d in factors if d > 1))


# ------------------------------------------------------------ homomorphisms

def hom_count(P: FpGroup, T: FinGroupoid) -> int:
    """Number of homomorphisms from ``P`` to the finite group ``T``."""
    if not T.is_group:
        raise ValueError("target must be a group")
    return _count_simplified(simplify(P), T)


def _count_simplified(Q: FpGroup, T: FinGroupoid) -> int:
    gens = list(Q.generators)
    # order generators so relators close as early as possible
    order: list = []
    remaining = set(gens)
    rels = list(Q.relators)
    while remaining:
        def score(g):
            return (-sum(1 for w in rels if g in {h for h, _ in w}), cell_key(g))
        g = min(remaining, key=score)
        order.append(g)
        remaining.discard(g)
        rels = [tuple(x for x in w if x[0] != g) for w in rels]
    pos = {g: i for i, g in enumerate(order)}
    checks: list = [[] for _ in order]
    for w in Q.relators:
        checks[max(pos[g] for g, _ in w)].append(w)
    e = T.identity_element()
    els = T.morphism_list
    assign: dict = {}

    def rec(i):
        if i == len(order):
            return 1
        total = 0
        for x in els:
            assign[order[i]] = x
            if all(evaluate_word(w, T, assign) == e for w in checks[i]):
                total += rec(i + 1)
        del assign[order[i]]
        return total

    return rec(0)


def group_invariants(P: FpGroup, targets=None) -> tuple:
    """``(abelianization, hom counts into each small group)`` of ``P``."""
    from .groupoid import small_groups

    targets = small_groups() if targets is None else targets
    Q = simplify(P)
    return abelianization(P), tuple((name, _count_simplified(Q, T)) for name, T in targets)
