"""Write the degree-28 generator file for PSU3(3).

SU3(3) preserves the Hermitian form with antidiagonal Gram matrix over GF(9);
the field automorphism is a -> a**3.  Its unitriangular elements generate the
group, which acts faithfully on the 28 isotropic points of PG(2, 9).
"""

from itertools import product
from pathlib import Path

from cdgraph.constructors import dump_generators
from cdgraph.gf import finite_field
from cdgraph.group import PermutationGroup
from cdgraph.perm import Permutation

F = finite_field(9)
add, mul = F.add, F.mul


def bar(a):
    return F.frobenius(a)


def form(u, v):
    # antidiagonal Gram matrix: u0*bar(v2) + u1*bar(v1) + u2*bar(v0)
    out = 0
    for i in range(3):
        out = add(out, mul(u[i], bar(v[2 - i])))
    return out


def apply(m, v):
    # row vector times matrix
    return tuple(
        _sum(mul(v[i], m[i][j]) for i in range(3)) for j in range(3)
    )


def _sum(xs):
    out = 0
    for x in xs:
        out = add(out, x)
    return out


def normalize(v):
    lead = next(x for x in v if x)
    inv = F.inv[lead]
    return tuple(mul(inv, x) for x in v)


def is_unitary(m):
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    rows = [apply(m, e) for e in basis]
    return all(form(rows[i], rows[j]) == form(basis[i], basis[j]) for i in range(3) for j in range(3))


def main(out: Path) -> None:
    points = sorted({normalize(v) for v in product(range(9), repeat=3)
                     if any(v) and form(v, v) == 0})
    assert len(points) == 28
    index = {v: i for i, v in enumerate(points)}
    mats = []
    for a, b, c in product(range(9), repeat=3):
        upper = ((1, a, b), (0, 1, c), (0, 0, 1))
        lower = ((1, 0, 0), (a, 1, 0), (b, c, 1))
        mats += [m for m in (upper, lower) if is_unitary(m)]
    gens = []
    G = PermutationGroup([], degree=28)
    for m in mats:
        g = Permutation([index[normalize(apply(m, v))] for v in points])
        if not G.contains(g):
            gens.append(g)
            G = G.extended([g])
    assert G.order() == 6048, G.order()
    G.name = "PSU3(3) on 28 isotropic points"
    dump_generators(G, out)


if __name__ == "__main__":
    main(Path(__file__).resolve().parent.parent / "src" / "cdgraph" / "data" / "psu3_3.gens")
