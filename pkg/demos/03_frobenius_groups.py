"""
Frobenius and quasi-Frobenius structure
=======================================

A kernel K is a normal subgroup whose nontrivial elements have centralizers
inside K; a complement is then searched for among subgroups of order |G|/|K|.
"""

from cdgraph import build_group, is_frobenius, is_quasi_frobenius, p_complement_search

for spec in ("Sym(3)", "Alt(4)", "Frobenius(11,5)", "Sym(4)", "File(q8.gens)"):
    s = is_frobenius(build_group(spec))
    print(f"{spec:18s}", "not Frobenius" if s is None else
          f"kernel {s.kernel.order()}, complement {s.complement.order()}")

# Central extensions: G/Z(G) Frobenius.
q = is_quasi_frobenius(build_group("Direct(Frobenius(7,3),Cyclic(2))"))
print("F21 x C2: centre", q.center.order(), "kernel preimage", q.kernel.order(),
      "complement preimage", q.complement.order())

# The p-complement search is heuristic: None means "not found".
H = p_complement_search(build_group("Alt(5)"), 5, budget=20000, seed=0)
print("5-complement of Alt(5):", None if H is None else H.order())
