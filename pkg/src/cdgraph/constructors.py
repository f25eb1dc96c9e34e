"""Group constructors, the spec grammar and generator files.

Grammar::

    spec   := Sym(n) | Alt(n) | Cyclic(n) | Dihedral(n) | Frobenius(q,r)
            | PSL2(q) | PGL2(q) | Direct(spec,spec) | File(path)

``Dihedral(n)`` has order ``2n``; ``Frobenius(q, r)`` is the affine group
``x -> a x + b`` over GF(q) with ``a`` in the subgroup of order ``r``;
``PSL2(q)`` and ``PGL2(q)`` act on the ``q + 1`` points of the projective line.

Generator file format: the first non-comment line is ``degree N``; every
later nonempty line not starting with ``#`` holds one permutation in cycle
notation.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .gf import finite_field, prime_power
from .group import PermutationGroup
from .perm import Permutation, parse_cycles

__all__ = [
    "GroupSpec",
    "SpecError",
    "parse_spec",
    "build_group",
    "expected_order",
    "load_generators",
    "dump_generators",
    "resolve_path",
]


class SpecError(ValueError):
    """Malformed group spec or generator file."""


@dataclass(frozen=True)
class GroupSpec:
    family: str
    args: tuple  # ints, nested GroupSpecs for Direct, a path string for File

    def __str__(self) -> str:
        if self.family == "File":
            return f"File({self.args[0]})"
        return f"{self.family}({','.join(str(a) for a in self.args)})"


_FAMILIES = {"Sym": 1, "Alt": 1, "Cyclic": 1, "Dihedral": 1, "Frobenius": 2,
             "PSL2": 1, "PGL2": 1, "Direct": 2, "File": 1}


def parse_spec(text: str | GroupSpec) -> GroupSpec:
    if isinstance(text, GroupSpec):
        return text
    spec, rest = _parse(text.strip())
    if rest.strip():
        raise SpecError(f"trailing text {rest!r} in spec {text!r}")
    return spec


def _parse(s: str) -> tuple[GroupSpec, str]:
    m = re.match(r"\s*([A-Za-z][A-Za-z0-9]*)\s*\(", s)
    if not m or m.group(1) not in _FAMILIES:
        raise SpecError(f"expected one of {sorted(_FAMILIES)} at {s!r}")
    fam, s = m.group(1), s[m.end():]
    if fam == "File":
        depth, i = 1, 0
        while i < len(s):
            depth += {"(": 1, ")": -1}.get(s[i], 0)
            if depth == 0:
                break
            i += 1
        if depth:
            raise SpecError("unbalanced parentheses in File(...)")
        path = s[:i].strip()
        if not path:
            raise SpecError("File() needs a path")
        return GroupSpec("File", (path,)), s[i + 1:]
    args: list = []
    while True:
        if fam == "Direct":
            sub, s = _parse(s)
            args.append(sub)
        else:
            m = re.match(r"\s*(\d+)\s*", s)
            if not m:
                raise SpecError(f"expected an integer argument at {s!r}")
            args.append(int(m.group(1)))
            s = s[m.end():]
        s = s.lstrip()
        if s.startswith(","):
            s = s[1:]
            continue
        if s.startswith(")"):
            s = s[1:]
            break
        raise SpecError(f"expected ',' or ')' at {s!r}")
    if len(args) != _FAMILIES[fam]:
        raise SpecError(f"{fam} takes {_FAMILIES[fam]} argument(s), got {len(args)}")
    return GroupSpec(fam, tuple(args)), s


def expected_order(spec: GroupSpec | str) -> int | None:
    """Advertised order of a named family; None for files."""
    spec = parse_spec(spec)
    f, a = spec.family, spec.args
    if f == "Sym":
        return math.factorial(a[0])
    if f == "Alt":
        return max(1, math.factorial(a[0]) // 2)
    if f == "Cyclic":
        return a[0]
    if f == "Dihedral":
        return 2 * a[0]
    if f == "Frobenius":
        return a[0] * a[1]
    if f == "PSL2":
        q = a[0]
        return q * (q * q - 1) // math.gcd(2, q - 1)
    if f == "PGL2":
        q = a[0]
        return q * (q * q - 1)
    if f == "Direct":
        x, y = expected_order(a[0]), expected_order(a[1])
        return None if x is None or y is None else x * y
    return None


def build_group(spec: GroupSpec | str) -> PermutationGroup:
    """Construct the named group and check its order."""
    spec = parse_spec(spec)
    G = _build(spec)
    G.name = str(spec)
    want = expected_order(spec)
    if want is not None and G.order() != want:
        raise AssertionError(f"{spec} has order {G.order()}, expected {want}")
    return G


def _positive(n: int, what: str) -> None:
    if n < 1:
        raise SpecError(f"{what} must be positive")


def _build(spec: GroupSpec) -> PermutationGroup:
    f, a = spec.family, spec.args
    if f == "Sym":
        return _symmetric(a[0])
    if f == "Alt":
        return _alternating(a[0])
    if f == "Cyclic":
        _positive(a[0], "Cyclic degree")
        n = a[0]
        return PermutationGroup([Permutation.from_cycles([range(1, n + 1)], n)], degree=n)
    if f == "Dihedral":
        return _dihedral(a[0])
    if f == "Frobenius":
        return _affine(a[0], a[1])
    if f == "PSL2":
        return _projective(a[0], special=True)
    if f == "PGL2":
        return _projective(a[0], special=False)
    if f == "Direct":
        return _direct(_build(a[0]), _build(a[1]))
    if f == "File":
        return load_generators(a[0])
    raise SpecError(f"unknown family {f}")


def _symmetric(n: int) -> PermutationGroup:
    _positive(n, "Sym degree")
    if n == 1:
        return PermutationGroup([], degree=1)
    gens = [Permutation.from_cycles([[1, 2]], n)]
    if n > 2:
        gens.append(Permutation.from_cycles([range(1, n + 1)], n))
    return PermutationGroup(gens, degree=n)


def _alternating(n: int) -> PermutationGroup:
    _positive(n, "Alt degree")
    return PermutationGroup([Permutation.from_cycles([[1, 2, k]], n) for k in range(3, n + 1)], degree=n)


def _dihedral(n: int) -> PermutationGroup:
    _positive(n, "Dihedral parameter")
    if n == 1:
        return PermutationGroup([Permutation.from_cycles([[1, 2]], 2)], degree=2)
    if n == 2:
        return PermutationGroup([Permutation.parse("(1,2)(3,4)", 4), Permutation.parse("(1,3)(2,4)", 4)])
    rot = Permutation.from_cycles([range(1, n + 1)], n)
    ref = Permutation.from_images([1] + list(range(n, 1, -1)))
    return PermutationGroup([rot, ref], degree=n)


def _field(q: int):
    if prime_power(q) is None:
        raise SpecError(f"{q} is not a prime power")
    return finite_field(q)


def _affine(q: int, r: int) -> PermutationGroup:
    F = _field(q)
    if r < 1 or (q - 1) % r:
        raise SpecError(f"Frobenius(q,r) needs r dividing q-1, got q={q}, r={r}")
    # translations by the additive basis 1, p, p^2, ... generate GF(q)
    gens = [Permutation(F.add_table[b]) for b in (F.p**i for i in range(F.n))]
    a0 = F.power(F.primitive, (q - 1) // r)
    if r > 1:
        gens.append(Permutation(F.mul_table[a0]))
    return PermutationGroup(gens, degree=q)


def _projective(q: int, special: bool) -> PermutationGroup:
    F = _field(q)
    inf = q  # point q + 1 in 1-based terms is infinity

    def moebius(f) -> Permutation:
        return Permutation([f(x) for x in range(q + 1)])

    w = F.primitive
    scale = F.mul(w, w) if special else w

    def translate(x):
        return inf if x == inf else F.add(x, 1)

    def dilate(x):
        return inf if x == inf else F.mul(scale, x)

    def invert(x):
        if x == inf:
            return 0
        if x == 0:
            return inf
        y = F.inv[x]
        return F.neg[y] if special else y

    gens = [moebius(translate), moebius(invert)]
    if scale != 1:
        gens.append(moebius(dilate))
    return PermutationGroup(gens, degree=q + 1)


def _direct(A: PermutationGroup, B: PermutationGroup) -> PermutationGroup:
    m, n = A.degree, B.degree
    gens = [Permutation(tuple(g) + tuple(range(m, m + n))) for g in A.generators]
    gens += [Permutation(tuple(range(m)) + tuple(m + x for x in g)) for g in B.generators]
    return PermutationGroup(gens, degree=m + n)


def resolve_path(path: str | Path) -> Path:
    """A path as given, else the same name among the bundled data files."""
    p = Path(path)
    if p.exists():
        return p
    bundled = resources.files("cdgraph") / "data" / p.name
    if bundled.is_file():
        return Path(str(bundled))
    raise FileNotFoundError(f"generator file {path} not found")


def load_generators(path: str | Path) -> PermutationGroup:
    p = resolve_path(path)
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(p.read_text().splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m or int(m.group(1)) < 1:
                raise SpecError(f"{p}:{lineno}: expected 'degree N' header")
            degree = int(m.group(1))
            continue
        try:
            gens.append(parse_cycles(line, degree))
        except ValueError as exc:
            raise SpecError(f"{p}:{lineno}: {exc}") from None
    if degree is None:
        raise SpecError(f"{p}: missing 'degree N' header")
    return PermutationGroup(gens, degree=degree, name=f"File({path})")


def dump_generators(G: PermutationGroup, path: str | Path | None = None) -> str:
    """Generator-file text for ``G``; also written to ``path`` when given."""
    lines = [f"degree {G.degree}"]
    if G.name:
        lines.insert(0, f"# {G.name}")
    lines += [str(g) for g in G.generators]
    text = "\n".join(lines) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
