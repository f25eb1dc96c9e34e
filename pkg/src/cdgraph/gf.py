"""Small finite fields GF(q) with table-driven arithmetic."""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import factorint

__all__ = ["GF", "prime_power", "finite_field"]


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, n)`` with ``q == p**n``, or None."""
    if q < 2:
        return None
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, n), = f.items()
    return p, n


class GF:
    """GF(p**n) on the integers ``0..q-1``.

    An integer stands for the polynomial whose base-``p`` digits are its
    coefficients, reduced modulo the first monic irreducible polynomial of
    degree ``n`` in lexicographic order.
    """

    def __init__(self, q: int):
        pp = prime_power(q)
        if pp is None:
            raise ValueError(f"{q} is not a prime power")
        self.q, (self.p, self.n) = q, pp
        self.modulus = self._find_modulus()
        self.mul_table = [[self._mul(a, b) for b in range(q)] for a in range(q)]
        self.add_table = [[self._add(a, b) for b in range(q)] for a in range(q)]
        self.neg = [self.add_table[a].index(0) for a in range(q)]
        self.inv = [0] + [self.mul_table[a].index(1) for a in range(1, q)]
        self.primitive = self._find_primitive()

    def _digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.n)]

    def _from_digits(self, d: list[int]) -> int:
        return sum(c * self.p**i for i, c in enumerate(d))

    def _add(self, a: int, b: int) -> int:
        return self._from_digits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def _polymul(self, a: list[int], b: list[int], mod: list[int]) -> list[int]:
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        # mod is monic of degree n, given by its n low coefficients
        for k in range(len(prod) - 1, n - 1, -1):
            c = prod[k]
            if c:
                for i in range(n):
                    prod[k - n + i] = (prod[k - n + i] - c * mod[i]) % p
                prod[k] = 0
        return prod[:n]

    def _mul(self, a: int, b: int) -> int:
        return self._from_digits(self._polymul(self._digits(a), self._digits(b), self.modulus))

    def _find_modulus(self) -> list[int]:
        p, n = self.p, self.n
        if n == 1:
            return [0]
        elems = [self._digits(a) for a in range(1, self.q)]
        for low in product(range(p), repeat=n):
            mod = list(reversed(low))
            if mod[0] == 0:
                continue
            one = [1] + [0] * (n - 1)
            # a field exactly when every nonzero element has an inverse
            if all(any(self._polymul(a, b, mod) == one for b in elems) for a in elems):
                return mod
        raise AssertionError(f"no irreducible polynomial of degree {n} over GF({p})")

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            x, k = a, 1
            while x != 1:
                x = self.mul_table[x][a]
                k += 1
            if k == self.q - 1:
                return a
        raise AssertionError("multiplicative group is not cyclic")

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def power(self, a: int, k: int) -> int:
        out = 1
        for _ in range(k):
            out = self.mul_table[out][a]
        return out

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)


@lru_cache(maxsize=None)
def finite_field(q: int) -> GF:
    return GF(q)
