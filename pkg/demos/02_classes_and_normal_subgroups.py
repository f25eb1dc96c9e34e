"""
Conjugacy classes and the normal-subgroup lattice
=================================================
"""

from cdgraph import build_group, conjugacy_classes, normal_lattice
from cdgraph.subgroups import derived_series, fitting, is_soluble

for spec in ("Alt(4)", "Sym(4)", "Alt(5)", "Direct(Sym(3),Cyclic(2))"):
    G = build_group(spec)
    prof = conjugacy_classes(G)
    L = normal_lattice(G)
    print(f"{spec:28s} |G|={G.order():4d}  class sizes {prof.sizes()}")
    print(f"{'':28s} normal subgroup orders {sorted(L.orders())}, "
          f"minimal {[M.order() for M in L.minimal_normal_subgroups()]}")

S4 = build_group("Sym(4)")
print("derived series of Sym(4):", [H.order() for H in derived_series(S4)], "soluble:", is_soluble(S4))
print("Fitting subgroup of Sym(4) has order", fitting(S4).order())

# Classes are listed by size, then by first appearance; representatives print in cycle notation.
for c in conjugacy_classes(build_group("Alt(5)")):
    print(f"  size {c.size:3d}  order {c.order_of_elements}  rep {c.representative}")
