"""Permutation groups backed by a deterministic Schreier-Sims stabilizer chain."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from .perm import Permutation, _conj, _inv, _mul, _perm

__all__ = [
    "CapExceeded",
    "StabilizerChain",
    "PermutationGroup",
    "ActionOrbit",
    "orbit_of_action",
    "act_on_points",
    "act_by_conjugation",
    "group_order",
    "contains",
    "enumerate_elements",
    "DEFAULT_ELEMENT_CAP",
    "DEFAULT_ORBIT_CAP",
]

DEFAULT_ELEMENT_CAP = 10**6
DEFAULT_ORBIT_CAP = 10**6


class CapExceeded(RuntimeError):
    """A configured resource cap would be exceeded."""


class _Level:
    __slots__ = ("point", "gens", "orbit", "trans", "trans_inv", "done")

    def __init__(self, point: int, identity: Permutation):
        self.point = point
        self.gens: list[Permutation] = []
        self.orbit = [point]
        self.trans = {point: identity}
        self.trans_inv = {point: identity}
        # generator -> number of orbit points whose Schreier generator was sifted
        self.done: dict[Permutation, int] = {}

    def copy(self) -> _Level:
        lv = _Level.__new__(_Level)
        lv.point = self.point
        lv.gens = list(self.gens)
        lv.orbit = list(self.orbit)
        lv.trans = dict(self.trans)
        lv.trans_inv = dict(self.trans_inv)
        lv.done = dict(self.done)
        return lv


class StabilizerChain:
    """Base and strong generating set, built incrementally.

    Level ``i`` stores the orbit of ``base[i]`` under the pointwise stabilizer
    of ``base[:i]`` together with coset representatives ``u_q`` mapping
    ``base[i]`` to ``q``.  Every Schreier generator of every level is sifted
    through the levels below it, so the chain is always complete (no random
    sampling is involved).
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.identity = Permutation.identity(degree)
        self.levels: list[_Level] = []

    @property
    def base(self) -> list[int]:
        """Base points, 1-based."""
        return [lv.point + 1 for lv in self.levels]

    @property
    def transversal_lengths(self) -> list[int]:
        return [len(lv.orbit) for lv in self.levels]

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit)
        return n

    def strong_generators(self) -> list[Permutation]:
        return [s for lv in self.levels for s in lv.gens]

    def copy(self) -> StabilizerChain:
        ch = StabilizerChain.__new__(StabilizerChain)
        ch.degree = self.degree
        ch.identity = self.identity
        ch.levels = [lv.copy() for lv in self.levels]
        return ch

    def sift(self, g: Sequence[int], start: int = 0) -> tuple[Permutation, int]:
        """Strip ``g`` through the levels; return the residue and stop level."""
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            u = lv.trans_inv.get(g[lv.point])
            if u is None:
                return g, i
            g = _mul(g, u)
        return g, len(levels)

    def contains(self, g: Sequence[int]) -> bool:
        h, _ = self.sift(g)
        return h == self.identity

    def add(self, g: Permutation, start: int = 0) -> bool:
        """Extend the group by ``g`` (which must fix ``base[:start]``).

        Returns True when the group grew.
        """
        h, j = self.sift(g, start)
        if h == self.identity:
            return False
        if j == len(self.levels):
            moved = next(k for k in range(self.degree) if h[k] != k)
            self.levels.append(_Level(moved, self.identity))
        self.levels[j].gens.append(h)
        for k in range(j, start - 1, -1):
            self._close(k)
        return True

    def _gens_from(self, k: int) -> list[Permutation]:
        return [s for lv in self.levels[k:] for s in lv.gens]

    def _close(self, k: int) -> None:
        lv = self.levels[k]
        ident = self.identity
        while True:
            gens = self._gens_from(k)
            if all(lv.done.get(s, 0) == len(lv.orbit) for s in gens):
                return
            for s in gens:
                n = lv.done.get(s, 0)
                while n < len(lv.orbit):
                    p = lv.orbit[n]
                    n += 1
                    q = s[p]
                    up_s = _mul(lv.trans[p], s)
                    if q not in lv.trans:
                        lv.trans[q] = up_s
                        lv.trans_inv[q] = _inv(up_s)
                        lv.orbit.append(q)
                    else:
                        sch = _mul(up_s, lv.trans_inv[q])
                        if sch != ident:
                            self.add(sch, k + 1)
                lv.done[s] = n

    def elements(self) -> list[Permutation]:
        """All group elements as products ``u_last * ... * u_0`` of coset reps.

        The first element is always the identity.
        """
        cur = [self.identity]
        for lv in reversed(self.levels):
            reps = [lv.trans[p] for p in lv.orbit]
            cur = [_mul(h, u) for u in reps for h in cur]
        return cur

    def random_element(self, rng: random.Random) -> Permutation:
        g = self.identity
        for lv in reversed(self.levels):
            g = _mul(g, lv.trans[rng.choice(lv.orbit)])
        return g


class PermutationGroup:
    """The group generated by ``generators``, acting on ``{1..degree}``.

    The stabilizer chain is built on first demand.  Derived data (classes,
    lattices, centralizers) is memoised in ``self.memo`` by the structure
    functions; treat a group as immutable once constructed.
    """

    def __init__(
        self,
        generators: Iterable[Permutation],
        degree: int | None = None,
        name: str | None = None,
    ):
        gens = [g if isinstance(g, Permutation) else Permutation(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator {g} has degree {len(g)}, expected {degree}")
        self.degree = degree
        self.generators = gens
        self.name = name
        self._chain: StabilizerChain | None = None
        self._elements: list[Permutation] | None = None
        self._element_set: frozenset | None = None
        self.memo: dict = {}

    def __repr__(self) -> str:
        label = self.name or f"<{len(self.generators)} generators>"
        return f"PermutationGroup({label}, degree={self.degree})"

    @classmethod
    def from_chain(cls, chain: StabilizerChain, generators, name=None) -> PermutationGroup:
        G = cls(generators, degree=chain.degree, name=name)
        G._chain = chain
        return G

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            ch = StabilizerChain(self.degree)
            for g in self.generators:
                ch.add(g)
            self._chain = ch
        return self._chain

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def order(self) -> int:
        return self.chain.order()

    def __contains__(self, g) -> bool:
        return self.contains(g)

    def contains(self, g: Permutation) -> bool:
        if len(g) != self.degree:
            raise ValueError(f"degree mismatch: {len(g)} vs {self.degree}")
        if self._element_set is not None:
            return g in self._element_set
        return self.chain.contains(g)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(_mul(a, b) == _mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def elements(self, cap: int = DEFAULT_ELEMENT_CAP) -> list[Permutation]:
        """All elements, in chain transversal product order (cached)."""
        n = self.order()
        if n > cap:
            raise CapExceeded(f"group order {n} exceeds element cap {cap}")
        if self._elements is None:
            self._elements = self.chain.elements()
        return self._elements

    def element_set(self, cap: int = DEFAULT_ELEMENT_CAP) -> frozenset:
        elements = self.elements(cap)
        if self._element_set is None:
            self._element_set = frozenset(elements)
        return self._element_set

    def random_element(self, rng: random.Random) -> Permutation:
        return self.chain.random_element(rng)

    def extended(self, extra: Iterable[Permutation], name: str | None = None) -> PermutationGroup:
        """The group generated by ``self`` and ``extra``; reuses the chain."""
        chain = self.chain.copy()
        gens = list(self.generators)
        for g in extra:
            if chain.add(g):
                gens.append(g)
        return PermutationGroup.from_chain(chain, gens, name=name)

    def subgroup(self, generators: Iterable[Permutation], name: str | None = None) -> PermutationGroup:
        gens = list(generators)
        for g in gens:
            if not self.contains(g):
                raise ValueError(f"{g} is not an element of {self!r}")
        return PermutationGroup(gens, degree=self.degree, name=name)

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return all(other.contains(g) for g in self.generators)

    def same_as(self, other: PermutationGroup) -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def is_normal_in(self, other: PermutationGroup) -> bool:
        if not self.is_subgroup_of(other):
            return False
        for s in other.generators:
            sinv = _inv(s)
            for h in self.generators:
                if not self.contains(_conj(h, s, sinv)):
                    return False
        return True


# -- module-level operations -----------------------------------------------


def group_order(G: PermutationGroup) -> int:
    return G.order()


def contains(G: PermutationGroup, p: Permutation) -> bool:
    return G.contains(p)


def enumerate_elements(G: PermutationGroup, cap: int = DEFAULT_ELEMENT_CAP) -> Iterator[Permutation]:
    return iter(G.elements(cap))


def act_on_points(point: int, g: Permutation) -> int:
    """Right action on 1-based points."""
    return g[point - 1] + 1


def act_by_conjugation(x: Permutation, g: Permutation) -> Permutation:
    """Right action ``x -> g^-1 x g``."""
    return _perm([g[x[j]] for j in _inv(g)])


@dataclass
class ActionOrbit:
    seed: Hashable
    points: list
    schreier: dict  # orbit point -> element carrying the seed to it
    stabilizer_generators: list[Permutation] = field(default_factory=list)
    stabilizer: PermutationGroup | None = None

    def __len__(self) -> int:
        return len(self.points)


def orbit_of_action(
    G: PermutationGroup,
    seed,
    act: Callable = act_on_points,
    cap: int = DEFAULT_ORBIT_CAP,
    stabilizer: bool = True,
) -> ActionOrbit:
    """Orbit of ``seed`` under a right action of ``G``, with its stabilizer.

    ``act(point, g)`` must satisfy ``act(act(x, a), b) == act(x, a * b)``.
    Schreier generators ``u_p * s * u_{p.s}^-1`` are filtered through an
    incrementally built chain, keeping only those that enlarge it, and the
    filter stops once the stabilizer reaches ``|G| / |orbit|``.
    """
    ident = G.identity
    schreier = {seed: ident}
    points = [seed]
    gens = [g for g in G.generators if g != ident]
    i = 0
    while i < len(points):
        x = points[i]
        i += 1
        ux = schreier[x]
        for s in gens:
            y = act(x, s)
            if y not in schreier:
                if len(points) >= cap:
                    raise CapExceeded(f"orbit exceeds cap {cap}")
                schreier[y] = _mul(ux, s)
                points.append(y)
    orbit = ActionOrbit(seed, points, schreier)
    if not stabilizer:
        return orbit

    target = G.order() // len(points)
    chain = StabilizerChain(G.degree)
    kept: list[Permutation] = []
    if target > 1:
        inv_cache: dict = {}
        for x in points:
            ux = schreier[x]
            for s in gens:
                y = act(x, s)
                uy_inv = inv_cache.get(y)
                if uy_inv is None:
                    uy_inv = inv_cache[y] = _inv(schreier[y])
                sch = _mul(_mul(ux, s), uy_inv)
                if sch != ident and chain.add(sch):
                    kept.append(sch)
                    if chain.order() == target:
                        break
            else:
                continue
            break
    if chain.order() != target:
        raise AssertionError("orbit-stabilizer mismatch; the action is not a right action")
    orbit.stabilizer_generators = kept
    orbit.stabilizer = PermutationGroup.from_chain(chain, kept)
    return orbit
