"""Conjugacy classes, centralizers, class products and pi-arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from sympy import primefactors

from .group import (
    DEFAULT_ELEMENT_CAP,
    CapExceeded,
    PermutationGroup,
    act_by_conjugation,
    orbit_of_action,
)
from .perm import Permutation, _inv, _mul, element_order

__all__ = [
    "ConjugacyClass",
    "ClassProfile",
    "conjugacy_classes",
    "centralizer",
    "center",
    "class_product",
    "is_pi_regular",
    "pi_regular_classes",
    "pi_part",
    "prime_divisors",
    "MEMBER_CAP",
]

MEMBER_CAP = 10**5


def prime_divisors(n: int) -> list[int]:
    return sorted(primefactors(n)) if n > 1 else []


def pi_part(n: int, pi: Iterable[int]) -> int:
    """Largest divisor of ``n`` whose prime factors all lie in ``pi``."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for r in set(pi):
        while n % r == 0:
            n //= r
            out *= r
    return out


def is_pi_regular(x: Permutation | int, pi: Iterable[int]) -> bool:
    """True when the order of ``x`` (an element or an order) avoids ``pi``."""
    n = x if isinstance(x, int) else element_order(x)
    return all(n % r for r in pi)


@dataclass(eq=False)
class ConjugacyClass:
    representative: Permutation
    size: int
    order_of_elements: int
    index: int
    members: frozenset | None = None

    def is_central(self) -> bool:
        return self.size == 1

    def is_pi_regular(self, pi: Iterable[int]) -> bool:
        return is_pi_regular(self.order_of_elements, pi)

    def __repr__(self) -> str:
        return (f"ConjugacyClass(#{self.index}, rep={self.representative}, "
                f"size={self.size}, order={self.order_of_elements})")


@dataclass(eq=False)
class ClassProfile:
    group: PermutationGroup
    classes: list[ConjugacyClass]
    lookup: dict = field(repr=False, default_factory=dict)

    @property
    def cs(self) -> list[int]:
        """Distinct class sizes, ascending."""
        return sorted({c.size for c in self.classes})

    def class_of(self, g: Permutation) -> ConjugacyClass:
        return self.classes[self.lookup[g]]

    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def nontrivial(self) -> list[ConjugacyClass]:
        return [c for c in self.classes if not c.representative.is_identity()]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)


def conjugacy_classes(G: PermutationGroup, cap: int = DEFAULT_ELEMENT_CAP) -> ClassProfile:
    """Partition ``G`` into conjugacy classes (memoised on ``G``).

    Classes are ordered by size, then by the position of their first member
    in the element enumeration, which is also the representative.
    """
    if "classes" in G.memo:
        return G.memo["classes"]
    elements = G.elements(cap)
    gens = [(g, _inv(g)) for g in G.generators if not g.is_identity()]
    lookup: dict[Permutation, int] = {}
    raw = []
    for pos, e in enumerate(elements):
        if e in lookup:
            continue
        k = len(raw)
        orbit = [e]
        lookup[e] = k
        i = 0
        while i < len(orbit):
            x = orbit[i]
            i += 1
            for s, sinv in gens:
                y = tuple.__new__(Permutation, [s[x[j]] for j in sinv])
                if y not in lookup:
                    lookup[y] = k
                    orbit.append(y)
        raw.append((len(orbit), pos, e, orbit))
    order = sorted(range(len(raw)), key=lambda k: (raw[k][0], raw[k][1]))
    renum = {old: new for new, old in enumerate(order)}
    classes = []
    for new, old in enumerate(order):
        size, _, rep, orbit = raw[old]
        members = frozenset(orbit) if size <= MEMBER_CAP else None
        classes.append(ConjugacyClass(rep, size, element_order(rep), new, members))
    lookup = {g: renum[k] for g, k in lookup.items()}
    prof = ClassProfile(G, classes, lookup)
    G.memo["classes"] = prof
    return prof


def centralizer(G: PermutationGroup, x: Permutation) -> PermutationGroup:
    """``C_G(x)`` as the stabilizer of ``x`` under conjugation."""
    cache = G.memo.setdefault("centralizers", {})
    if x in cache:
        return cache[x]
    if not G.contains(x):
        raise ValueError(f"{x} is not an element of the group")
    orb = orbit_of_action(G, x, act_by_conjugation)
    C = orb.stabilizer
    cache[x] = C
    return C


def center(G: PermutationGroup) -> PermutationGroup:
    if "center" not in G.memo:
        prof = conjugacy_classes(G)
        gens = [c.representative for c in prof.classes
                if c.size == 1 and not c.representative.is_identity()]
        G.memo["center"] = PermutationGroup(gens, degree=G.degree)
    return G.memo["center"]


def pi_regular_classes(profile: ClassProfile, pi: Iterable[int]) -> list[ConjugacyClass]:
    pi = list(pi)
    return [c for c in profile.classes if c.is_pi_regular(pi)]


def class_product(
    G: PermutationGroup, C: ConjugacyClass, D: ConjugacyClass
) -> list[ConjugacyClass]:
    """Classes met by the product set ``C * D``, in profile order.

    ``C * D`` is a union of classes, and every product ``c * d`` is conjugate
    to some ``c' * d0`` for a fixed ``d0 in D``, so it suffices to classify the
    single translate ``C * d0`` (or ``c0 * D``, whichever is smaller).  When
    neither class is materialised and the sizes are coprime, ``x^G`` equals
    ``x^{C_G(y)}`` and the translate ``x^{C_G(y)} * y`` is used instead.
    """
    prof = conjugacy_classes(G)
    key = (C.index, D.index)
    cache = G.memo.setdefault("class_products", {})
    if key in cache:
        return cache[key]
    if C.members is not None and (D.members is None or C.size <= D.size):
        d0 = D.representative
        hit = {prof.lookup[_mul(c, d0)] for c in C.members}
    elif D.members is not None:
        c0 = C.representative
        hit = {prof.lookup[_mul(c0, d)] for d in D.members}
    else:
        if math.gcd(C.size, D.size) != 1:
            raise CapExceeded("class product of unmaterialised classes needs coprime sizes")
        x, y = C.representative, D.representative
        orb = orbit_of_action(centralizer(G, y), x, act_by_conjugation, stabilizer=False)
        if len(orb) > MEMBER_CAP:
            raise CapExceeded("class product translate exceeds member cap")
        hit = {prof.lookup[_mul(c, y)] for c in orb.points}
    out = [prof.classes[k] for k in sorted(hit)]
    cache[key] = out
    return out
