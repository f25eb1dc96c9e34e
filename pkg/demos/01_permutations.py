"""
Permutations and stabilizer chains
==================================

Points are 1-based and products read left to right: ``p * q`` applies p first.
"""

from cdgraph import Permutation, PermutationGroup, build_group
from cdgraph.group import act_by_conjugation, orbit_of_action

a = Permutation.parse("(1,2)", 3)
b = Permutation.parse("(2,3)", 3)
print("(1,2)*(2,3) =", a * b)          # (1,3,2)
print("order of (1,2)(3,4,5):", Permutation.parse("(1,2)(3,4,5)", 5).order())

# A group is its generators plus a chain that is built on first use.
G = PermutationGroup([Permutation.parse("(1,2,3,4,5)", 5), Permutation.parse("(1,2)", 5)], degree=5)
print("|<(1,2,3,4,5), (1,2)>| =", G.order())
print("base:", G.chain.base, "transversal lengths:", G.chain.transversal_lengths)
print("(1,2,3) in group?", G.contains(Permutation.parse("(1,2,3)", 5)))

# The conjugation orbit of an element is its class; the stabilizer is its centralizer.
A4 = build_group("Alt(4)")
for text in ("(1,2)(3,4)", "(1,2,3)"):
    orb = orbit_of_action(A4, Permutation.parse(text, 4), act_by_conjugation)
    print(f"{text}: class size {len(orb)}, centralizer order {orb.stabilizer.order()}")
