"""
Common divisor graphs on class sizes
====================================

``gamma`` joins distinct non-central class sizes sharing a prime; ``gamma_p``
keeps only classes of elements of order prime to p; ``delta_p`` is the dual
graph on primes.
"""

from cdgraph import bipartite_divisor, build_group, conjugacy_classes, delta_p, gamma, gamma_p, metrics
from cdgraph.graphs import to_dot

for spec, p in (("Sym(3)", 5), ("Alt(5)", 7), ("Frobenius(7,3)", 2), ("Sym(4)", 3)):
    prof = conjugacy_classes(build_group(spec))
    for name, g in (("gamma_p", gamma_p(prof, p)), ("delta_p", delta_p(prof, p)),
                    ("bipartite", bipartite_divisor(prof, p))):
        m = metrics(g)
        print(f"{spec:15s} p={p} {name:9s} components {m.component_count} "
              f"diameters {m.diameters} complete {m.is_complete}")

print(to_dot(gamma(conjugacy_classes(build_group("Alt(5)"))), name="Alt(5)"))
