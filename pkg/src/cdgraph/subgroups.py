"""Normal structure: closures, series, the normal lattice, cores, quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .classes import conjugacy_classes, prime_divisors
from .group import CapExceeded, PermutationGroup, StabilizerChain
from .perm import Permutation, _conj, _inv, _mul, _perm

__all__ = [
    "normal_closure",
    "derived_subgroup",
    "derived_series",
    "is_soluble",
    "lower_central_series",
    "is_nilpotent",
    "NormalLattice",
    "normal_lattice",
    "core_r",
    "o_pi_prime",
    "fitting",
    "CosetAction",
    "quotient_group",
    "group_from_elements",
    "intersection",
    "centralizer_of_subgroup",
    "is_simple",
    "is_p_group",
    "QUOTIENT_CAP",
    "LATTICE_CAP",
]

QUOTIENT_CAP = 2000
LATTICE_CAP = 5000


def group_from_elements(elements: Iterable[Permutation], degree: int) -> PermutationGroup:
    """The subgroup generated by ``elements``, keeping only enlarging ones."""
    chain = StabilizerChain(degree)
    gens = [g for g in elements if chain.add(g)]
    return PermutationGroup.from_chain(chain, gens)


def normal_closure(G: PermutationGroup, S: Iterable[Permutation]) -> PermutationGroup:
    """Smallest normal subgroup of ``G`` containing ``S``."""
    chain = StabilizerChain(G.degree)
    gens: list[Permutation] = []
    for s in S:
        if not G.contains(s):
            raise ValueError(f"{s} is not an element of the group")
        if chain.add(s):
            gens.append(s)
    conj = [(g, _inv(g)) for g in G.generators if not g.is_identity()]
    i = 0
    while i < len(gens):
        h = gens[i]
        i += 1
        for g, ginv in conj:
            c = _conj(h, g, ginv)
            if chain.add(c):
                gens.append(c)
    return PermutationGroup.from_chain(chain, gens)


def _commutators(A: Iterable[Permutation], B: Iterable[Permutation]) -> list[Permutation]:
    B = list(B)
    out = []
    for a in A:
        ai = _inv(a)
        for b in B:
            c = _mul(_mul(ai, _inv(b)), _mul(a, b))
            if not c.is_identity():
                out.append(c)
    return out


def derived_subgroup(G: PermutationGroup) -> PermutationGroup:
    if "derived" not in G.memo:
        G.memo["derived"] = normal_closure(G, _commutators(G.generators, G.generators))
    return G.memo["derived"]


def derived_series(G: PermutationGroup) -> list[PermutationGroup]:
    series = [G]
    while True:
        D = derived_subgroup(series[-1])
        if D.order() == series[-1].order():
            return series
        series.append(D)


def is_soluble(G: PermutationGroup) -> bool:
    if "soluble" not in G.memo:
        G.memo["soluble"] = derived_series(G)[-1].order() == 1
    return G.memo["soluble"]


def lower_central_series(G: PermutationGroup) -> list[PermutationGroup]:
    series = [G]
    while True:
        H = normal_closure(G, _commutators(series[-1].generators, G.generators))
        if H.order() == series[-1].order():
            return series
        series.append(H)


def _p_element_count(G: PermutationGroup, p: int) -> int:
    prof = conjugacy_classes(G)
    total = 0
    for c in prof.classes:
        n = c.order_of_elements
        while n % p == 0:
            n //= p
        if n == 1:
            total += c.size
    return total


def is_nilpotent(G: PermutationGroup, method: str = "series") -> bool:
    """Nilpotency via the lower central series, or via normal Sylow subgroups.

    ``method="sylow"`` counts ``p``-elements: a Sylow ``p``-subgroup is
    normal exactly when the ``p``-elements number ``|G|_p``.
    """
    n = G.order()
    if method == "series":
        return lower_central_series(G)[-1].order() == 1
    if method == "sylow":
        for p in prime_divisors(n):
            if _p_element_count(G, p) != _p_part(n, p):
                return False
        return True
    raise ValueError(f"unknown method {method!r}")


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def is_p_group(order: int, p: int) -> bool:
    return _p_part(order, p) == order


@dataclass(eq=False)
class NormalLattice:
    group: PermutationGroup
    members: list[PermutationGroup]
    keys: list[frozenset]  # class indices contained in each member
    atoms: list[int]

    def __len__(self) -> int:
        return len(self.members)

    def orders(self) -> list[int]:
        return [M.order() for M in self.members]

    def leq(self, i: int, j: int) -> bool:
        return self.keys[i] <= self.keys[j]

    def minimal_normal_subgroups(self) -> list[PermutationGroup]:
        return [self.members[i] for i in self.atoms]

    def index_of(self, H: PermutationGroup) -> int:
        key = _class_key(self.group, H)
        return self.keys.index(key)

    def largest(self, pred: Callable[[PermutationGroup], bool]) -> PermutationGroup:
        best = self.members[0]
        for M in self.members:
            if pred(M) and M.order() > best.order():
                best = M
        return best


def _class_key(G: PermutationGroup, H: PermutationGroup) -> frozenset:
    prof = conjugacy_classes(G)
    return frozenset(c.index for c in prof.classes if H.contains(c.representative))


def class_closure(G: PermutationGroup, index: int) -> PermutationGroup:
    """``<x^G>`` for the representative of class ``index`` (memoised)."""
    cache = G.memo.setdefault("class_closures", {})
    if index not in cache:
        rep = conjugacy_classes(G).classes[index].representative
        cache[index] = normal_closure(G, [rep])
    return cache[index]


def normal_lattice(G: PermutationGroup, cap: int = LATTICE_CAP) -> NormalLattice:
    """All normal subgroups of ``G`` (memoised).

    Every normal subgroup is the join of the normal closures of its elements,
    so closing ``{1} U {<x^G>}`` under pairwise joins is complete.  Members are
    keyed by the set of classes they contain, ordered by (order, key).
    """
    if "lattice" in G.memo:
        return G.memo["lattice"]
    prof = conjugacy_classes(G)
    if len(prof) > cap:
        raise CapExceeded(f"{len(prof)} classes exceed lattice cap {cap}")
    trivial = PermutationGroup([], degree=G.degree)
    by_key: dict[frozenset, PermutationGroup] = {frozenset([0]): trivial}
    order: list[frozenset] = [frozenset([0])]
    for c in prof.nontrivial():
        N = class_closure(G, c.index)
        k = _class_key(G, N)
        if k not in by_key:
            by_key[k] = N
            order.append(k)
    i = 0
    while i < len(order):
        a = order[i]
        for j in range(i):
            b = order[j]
            if a <= b or b <= a:
                continue
            union = a | b
            if union in by_key:
                continue
            J = by_key[a].extended(by_key[b].generators)
            k = _class_key(G, J)
            if k not in by_key:
                if len(order) >= cap:
                    raise CapExceeded(f"more than {cap} normal subgroups")
                by_key[k] = J
                order.append(k)
        i += 1
    keys = sorted(by_key, key=lambda k: (sum(prof.classes[c].size for c in k), sorted(k)))
    members = [by_key[k] for k in keys]
    atoms = [
        i for i in range(1, len(keys))
        if not any(0 < j != i and keys[j] < keys[i] for j in range(len(keys)))
    ]
    lat = NormalLattice(G, members, keys, atoms)
    G.memo["lattice"] = lat
    return lat


def is_simple(G: PermutationGroup) -> bool:
    return G.order() > 1 and len(normal_lattice(G)) == 2


def core_r(G: PermutationGroup, r: int) -> PermutationGroup:
    """``O_r(G)``: the largest normal ``r``-subgroup."""
    return normal_lattice(G).largest(lambda M: is_p_group(M.order(), r))


def o_pi_prime(G: PermutationGroup, p: int) -> PermutationGroup:
    """``O_{p'}(G)``: the largest normal subgroup of order prime to ``p``."""
    return normal_lattice(G).largest(lambda M: M.order() % p != 0)


def fitting(G: PermutationGroup) -> PermutationGroup:
    """``F(G)``, the join of the ``O_r(G)``."""
    gens = []
    for r in prime_divisors(G.order()):
        gens.extend(core_r(G, r).generators)
    return group_from_elements(gens, G.degree)


class CosetAction:
    """Right multiplication of ``G`` on the right cosets ``N g`` of ``N``.

    ``image(g)`` is the induced permutation; ``group`` is the image of ``G``,
    a faithful copy of ``G / N`` of degree ``[G : N]``.
    """

    def __init__(self, G: PermutationGroup, N: PermutationGroup, cap: int = QUOTIENT_CAP):
        index = G.order() // N.order()
        if index > cap:
            raise CapExceeded(f"index {index} exceeds quotient cap {cap}")
        if not N.is_normal_in(G):
            raise ValueError("subgroup is not normal")
        self.source = G
        self.kernel = N
        n_elems = N.elements()
        label: dict[Permutation, int] = {}
        reps: list[Permutation] = []
        for g in G.elements():
            if g in label:
                continue
            k = len(reps)
            reps.append(g)
            for n in n_elems:
                label[_mul(n, g)] = k
        self.reps = reps
        self.label = label
        gens = [self.image(s) for s in G.generators]
        self.group = PermutationGroup(gens, degree=index)

    def image(self, g: Permutation) -> Permutation:
        label = self.label
        return _perm([label[_mul(r, g)] for r in self.reps])

    def lift(self, q: Permutation) -> Permutation:
        """An element of ``G`` mapping to ``q``."""
        # reps[0] is the identity, so q is determined by where it sends N
        return self.reps[q[0]]

    def preimage(self, H: PermutationGroup) -> PermutationGroup:
        return self.kernel.extended([self.lift(h) for h in H.generators])


def quotient_group(G: PermutationGroup, N: PermutationGroup, cap: int = QUOTIENT_CAP) -> PermutationGroup:
    return CosetAction(G, N, cap).group


def intersection(A: PermutationGroup, B: PermutationGroup) -> PermutationGroup:
    """``A ∩ B`` by filtering the elements of the smaller group."""
    if A.order() > B.order():
        A, B = B, A
    return group_from_elements((g for g in A.elements() if B.contains(g)), A.degree)


def centralizer_of_subgroup(G: PermutationGroup, H: PermutationGroup) -> PermutationGroup:
    """Elements of ``G`` commuting with every generator of ``H``."""
    hs = [h for h in H.generators if not h.is_identity()]
    keep = (g for g in G.elements() if all(_mul(g, h) == _mul(h, g) for h in hs))
    return group_from_elements(keep, G.degree)
