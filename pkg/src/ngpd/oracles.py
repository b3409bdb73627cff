"""Exhaustive searches used to cross-check the fast deciders.

``quasi_inverse`` decides equivalence the slow way: by searching for a
functor back together with natural isomorphisms on both sides.
"""
from __future__ import annotations

from itertools import product

from .groupoid import FinGroupoid, GroupoidFunctor, compose_functors, identity_functor


def enumerate_functors(G: FinGroupoid, H: FinGroupoid):
    """Every functor ``G -> H``, in a deterministic order."""
    mors = G.morphism_list
    pos = {f: i for i, f in enumerate(mors)}
    identity_of = {e: x for x, e in G.identities.items()}
    # each composition triple is checked once all three of its morphisms are assigned
    due = [[] for _ in mors]
    for (a, b), h in G.composition.items():
        due[max(pos[a], pos[b], pos[h])].append((a, b, h))
    for images in product(H.objects, repeat=len(G.objects)):
        om = dict(zip(G.objects, images))
        assign: dict = {}

        def rec(i):
            if i == len(mors):
                yield GroupoidFunctor(G, H, dict(om), dict(assign))
                return
            f = mors[i]
            if f in identity_of:
                cands = (H.identities[om[identity_of[f]]],)
            else:
                cands = H.hom(om[G.src(f)], om[G.tgt(f)])
            for c in cands:
                assign[f] = c
                if all(H.compose(assign[a], assign[b]) == assign[h] for a, b, h in due[i]):
                    yield from rec(i + 1)
            assign.pop(f, None)

        yield from rec(0)


def natural_iso(A: GroupoidFunctor, B: GroupoidFunctor) -> dict | None:
    """Components ``eta_x : A x -> B x`` with ``A f ; eta_y = eta_x ; B f``, if any."""
    G, H = A.source, A.target
    obs = list(G.objects)
    eta: dict = {}

    def ok_for(x):
        for f in G.morphism_list:
            a, b = G.src(f), G.tgt(f)
            if x not in (a, b) or a not in eta or b not in eta:
                continue
            if H.compose(A(f), eta[b]) != H.compose(eta[a], B(f)):
                return False
        return True

    def rec(i):
        if i == len(obs):
            return True
        x = obs[i]
        for c in H.hom(A.object_map[x], B.object_map[x]):
            eta[x] = c
            if ok_for(x) and rec(i + 1):
                return True
        eta.pop(x, None)
        return False

    return dict(eta) if rec(0) else None


def quasi_inverse(F: GroupoidFunctor) -> GroupoidFunctor | None:
    """A functor ``K`` with ``F;K ≅ id`` and ``K;F ≅ id``, found by exhaustive search."""
    G, H = F.source, F.target
    idG, idH = identity_functor(G), identity_functor(H)
    for K in enumerate_functors(H, G):
        if natural_iso(idG, compose_functors(F, K)) is not None and \
                natural_iso(compose_functors(K, F), idH) is not None:
            return K
    return None


def has_equivalence_data(F: GroupoidFunctor) -> bool:
    return quasi_inverse(F) is not None
