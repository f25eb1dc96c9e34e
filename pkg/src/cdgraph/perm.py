"""Permutations of {1..n}.

A :class:`Permutation` is a tuple subclass holding the 0-based image of each
point, so ``p[i]`` is the raw image of point ``i`` (0-based) while ``p(i)`` is
the 1-based image of point ``i``.  All text I/O is 1-based.

Products are read left to right: ``p * q`` applies ``p`` first, then ``q``.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "compose",
    "parse_cycles",
    "print_cycles",
    "element_order",
]


class Permutation(tuple):
    """An invertible map on ``{1..degree}``, hashed by its image sequence."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        p = tuple.__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"not a permutation of 0..{len(p) - 1}: {tuple(p)}")
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return _perm(range(degree))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """Build from 1-based images: ``images[i-1]`` is the image of ``i``."""
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 1-based disjoint cycles."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= degree:
                    raise ValueError(f"point {a} out of range 1..{degree}")
                if a in seen:
                    raise ValueError(f"point {a} occurs in more than one cycle")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                img[a - 1] = b - 1
        return _perm(img)

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        return parse_cycles(text, degree)

    # -- arithmetic ---------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based image sequence."""
        return tuple(i + 1 for i in self)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self):
            raise ValueError(f"point {point} out of range 1..{len(self)}")
        return tuple.__getitem__(self, point - 1) + 1

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return compose(self, other)

    def __rmul__(self, other):
        return NotImplemented

    def __add__(self, other):
        return NotImplemented

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return _perm(inv)

    __invert__ = inverse

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return result

    def conjugate(self, g: Permutation) -> Permutation:
        """``g^-1 * self * g``."""
        return _conj(self, g, g.inverse())

    def commutator(self, g: Permutation) -> Permutation:
        """``self^-1 * g^-1 * self * g``."""
        return _mul(self.inverse(), self.conjugate(g))

    def commutes_with(self, g: Permutation) -> bool:
        return _mul(self, g) == _mul(g, self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def support(self) -> list[int]:
        return [i + 1 for i, j in enumerate(self) if i != j]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its least point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j + 1)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return element_order(self)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __str__(self) -> str:
        return print_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.parse({print_cycles(self)!r}, {len(self)})"


def _perm(images) -> Permutation:
    # unchecked constructor for internal hot paths
    return tuple.__new__(Permutation, images)


def _mul(p: Sequence[int], q: Sequence[int]) -> Permutation:
    return tuple.__new__(Permutation, [q[i] for i in p])


def _inv(p: Sequence[int]) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple.__new__(Permutation, inv)


def _conj(x: Sequence[int], g: Sequence[int], ginv: Sequence[int]) -> Permutation:
    # (g^-1 x g)(i) = g(x(g^-1(i)))
    return tuple.__new__(Permutation, [g[x[j]] for j in ginv])


def _is_identity(p: Sequence[int]) -> bool:
    return all(i == j for i, j in enumerate(p))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Left-to-right product: the result maps ``i`` to ``q(p(i))``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return _mul(p, q)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1,2)(3,4)"``.

    Whitespace is ignored and ``"()"`` is the identity.  Raises ``ValueError``
    on malformed input, overlapping cycles or points outside ``1..degree``.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty permutation text")
    pos = 0
    cycles = []
    for m in _CYCLE_RE.finditer(s):
        if m.start() != pos:
            raise ValueError(f"malformed cycle notation: {text!r}")
        pos = m.end()
        body = m.group(1)
        if not body:
            continue
        parts = body.split(",")
        if not all(re.fullmatch(r"\d+", t) for t in parts):
            raise ValueError(f"malformed cycle {m.group(0)!r} in {text!r}")
        cycles.append([int(t) for t in parts])
    if pos != len(s):
        raise ValueError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, degree)


def print_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def element_order(p: Permutation) -> int:
    """Least ``k >= 1`` with ``p**k`` the identity (lcm of cycle lengths)."""
    return reduce(math.lcm, (len(c) for c in p.cycles()), 1)
