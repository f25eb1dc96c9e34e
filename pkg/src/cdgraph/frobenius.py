"""Frobenius and quasi-Frobenius detection, complement searches, almost simplicity."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .classes import center, centralizer, conjugacy_classes, pi_part
from .group import PermutationGroup
from .perm import Permutation
from .subgroups import (
    CosetAction,
    centralizer_of_subgroup,
    is_simple,
    normal_lattice,
)

__all__ = [
    "FrobeniusStructure",
    "QuasiFrobeniusStructure",
    "is_frobenius",
    "is_quasi_frobenius",
    "subgroup_search",
    "p_complement_search",
    "almost_simple_socle",
    "is_almost_simple",
    "DEFAULT_SEARCH_BUDGET",
]

DEFAULT_SEARCH_BUDGET = 20000


@dataclass(eq=False)
class FrobeniusStructure:
    kernel: PermutationGroup
    complement: PermutationGroup | None


@dataclass(eq=False)
class QuasiFrobeniusStructure:
    center: PermutationGroup
    kernel: PermutationGroup  # preimage of the Frobenius kernel of G/Z(G)
    complement: PermutationGroup | None  # preimage of a Frobenius complement


def subgroup_search(
    G: PermutationGroup,
    target: int,
    admissible,
    seeds: list[Permutation],
    budget: int = DEFAULT_SEARCH_BUDGET,
    seed: int = 0,
) -> PermutationGroup | None:
    """Depth-first search for a subgroup of order ``target``.

    Starting from each seed, subgroups are grown one admissible element at a
    time; a candidate survives only while its order divides ``target``.  The
    deterministic sweep (class representatives, then all admissible elements
    in enumeration order) runs before a shuffled pass with a fixed RNG seed.
    ``budget`` bounds the number of subgroup constructions; returning None
    means "not found", not "does not exist".
    """
    elements = [g for g in G.elements() if admissible(g)]
    if target == 1:
        return PermutationGroup([], degree=G.degree)
    spent = 0
    seen: set[frozenset] = set()

    def grow(H: PermutationGroup, candidates: list[Permutation]):
        nonlocal spent
        if H.order() == target:
            return H
        for b in candidates:
            if spent >= budget:
                return None
            if H.contains(b):
                continue
            spent += 1
            K = H.extended([b])
            if target % K.order():
                continue
            key = K.element_set()
            if key in seen:
                continue
            seen.add(key)
            found = grow(K, candidates)
            if found is not None:
                return found
        return None

    trivial = PermutationGroup([], degree=G.degree)
    reps = [c.representative for c in conjugacy_classes(G).classes
            if admissible(c.representative)]
    sweeps = [reps + elements]
    shuffled = list(elements)
    random.Random(seed).shuffle(shuffled)
    sweeps.append(shuffled)
    for cands in sweeps:
        for s in seeds + [None]:
            H = trivial if s is None else trivial.extended([s])
            if target % H.order():
                continue
            found = grow(H, cands)
            if found is not None:
                return found
            if spent >= budget:
                return None
    return None


def is_frobenius(G: PermutationGroup, budget: int = DEFAULT_SEARCH_BUDGET) -> FrobeniusStructure | None:
    """Frobenius kernel and a complement of ``G``, or None.

    ``G`` is Frobenius with kernel ``K`` exactly when ``K`` is a proper
    nontrivial normal subgroup with ``C_G(k) <= K`` for every ``1 != k in K``.
    The kernel is a normal Hall subgroup, so only members of coprime index are
    tried.
    """
    if "frobenius" in G.memo:
        return G.memo["frobenius"]
    result = None
    n = G.order()
    lat = normal_lattice(G)
    prof = conjugacy_classes(G)
    for key, K in zip(lat.keys, lat.members):
        k = K.order()
        if k == 1 or k == n or math.gcd(k, n // k) != 1:
            continue
        inside = [prof.classes[i] for i in sorted(key) if i != 0]
        if all(centralizer(G, c.representative).is_subgroup_of(K) for c in inside):
            result = FrobeniusStructure(K, _frobenius_complement(G, K, budget))
            break
    G.memo["frobenius"] = result
    return result


def _frobenius_complement(G: PermutationGroup, K: PermutationGroup, budget: int) -> PermutationGroup | None:
    m = G.order() // K.order()
    prof = conjugacy_classes(G)
    outside = [c.representative for c in prof.classes if not K.contains(c.representative)]
    # a nontrivial element a outside K lies in a unique complement H and C_G(a) <= H
    a = outside[0] if outside else None
    if a is not None:
        C = centralizer(G, a)
        if C.order() == m:
            return C
        seeds = list(C.generators)
        start = C
    else:
        seeds, start = [], None

    def admissible(g: Permutation) -> bool:
        return m % g.order() == 0

    if start is not None:
        # greedy growth from C_G(a) cannot get stuck: every subgroup of order
        # prime to |K| lies in some complement
        H = start
        for b in G.elements():
            if H.order() == m:
                break
            if admissible(b) and not H.contains(b):
                J = H.extended([b])
                if m % J.order() == 0:
                    H = J
        if H.order() == m:
            return H
    return subgroup_search(G, m, admissible, seeds, budget=budget)


def is_quasi_frobenius(G: PermutationGroup, budget: int = DEFAULT_SEARCH_BUDGET) -> QuasiFrobeniusStructure | None:
    """Kernel and complement preimages when ``G / Z(G)`` is Frobenius."""
    if "quasi_frobenius" in G.memo:
        return G.memo["quasi_frobenius"]
    Z = center(G)
    result = None
    if Z.order() < G.order():
        if Z.order() == 1:
            fr = is_frobenius(G, budget)
            if fr is not None:
                result = QuasiFrobeniusStructure(Z, fr.kernel, fr.complement)
        else:
            act = CosetAction(G, Z)
            fr = is_frobenius(act.group, budget)
            if fr is not None:
                comp = act.preimage(fr.complement) if fr.complement is not None else None
                result = QuasiFrobeniusStructure(Z, act.preimage(fr.kernel), comp)
    G.memo["quasi_frobenius"] = result
    return result


def p_complement_search(
    G: PermutationGroup, p: int, budget: int = DEFAULT_SEARCH_BUDGET, seed: int = 0
) -> PermutationGroup | None:
    """A subgroup of order ``|G|_{p'}``, or None when none was found in budget."""
    cache = G.memo.setdefault("p_complements", {})
    if p in cache:
        return cache[p]
    n = G.order()
    target = n // pi_part(n, [p])
    if target == n:
        H = G
    else:
        prof = conjugacy_classes(G)
        seeds = [c.representative for c in prof.classes
                 if c.order_of_elements % p and c.order_of_elements > 1]
        H = subgroup_search(G, target, lambda g: g.order() % p != 0, seeds[:1], budget, seed)
    cache[p] = H
    return H


def almost_simple_socle(G: PermutationGroup) -> PermutationGroup | None:
    """The socle when ``G`` is almost simple, else None.

    Almost simple: a unique minimal normal subgroup ``N``, nonabelian simple,
    with trivial centralizer in ``G``.
    """
    if "almost_simple" in G.memo:
        return G.memo["almost_simple"]
    result = None
    lat = normal_lattice(G)
    if len(lat.atoms) == 1:
        N = lat.members[lat.atoms[0]]
        if not N.is_abelian() and is_simple(N):
            if centralizer_of_subgroup(G, N).order() == 1:
                result = N
    G.memo["almost_simple"] = result
    return result


def is_almost_simple(G: PermutationGroup) -> bool:
    return almost_simple_socle(G) is not None
