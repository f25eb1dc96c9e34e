import random

import pytest

from cdgraph.group import (
    CapExceeded,
    PermutationGroup,
    act_by_conjugation,
    act_on_points,
    contains,
    enumerate_elements,
    group_order,
    orbit_of_action,
)
from cdgraph.perm import Permutation, parse_cycles

from conftest import grp
from oracles import closure, mul


@pytest.mark.parametrize("spec,order", [("Sym(4)", 24), ("Alt(5)", 60), ("PSL2(7)", 168), ("Cyclic(1)", 1)])
def test_group_order(spec, order):
    G = grp(spec)
    assert group_order(G) == order
    assert len(closure(G.generators, G.degree)) == order


def test_psl27_acts_on_eight_points():
    assert grp("PSL2(7)").degree == 8


def test_chain_order_is_product_of_transversals():
    G = grp("Sym(5)")
    prod = 1
    for n in G.chain.transversal_lengths:
        prod *= n
    assert prod == G.order() == 120


def test_contains():
    A4 = grp("Alt(4)")
    assert not contains(A4, parse_cycles("(1,2)", 4))
    assert contains(A4, parse_cycles("(1,2,3)", 4))
    assert all(contains(A4, g) for g in A4.generators)


def test_sift_residue_for_non_member():
    A4 = grp("Alt(4)")
    residue, _ = A4.chain.sift(parse_cycles("(1,2)", 4))
    assert not residue.is_identity()


def test_contains_degree_mismatch():
    with pytest.raises(ValueError):
        grp("Alt(4)").contains(parse_cycles("(1,2)", 5))


def test_enumerate_elements():
    assert list(enumerate_elements(PermutationGroup([], degree=3))) == [Permutation.identity(3)]
    S3 = list(enumerate_elements(grp("Sym(3)")))
    assert len(S3) == len(set(S3)) == 6
    A4 = list(enumerate_elements(grp("Alt(4)")))
    assert len(set(A4)) == 12 and all(g.sign() == 1 for g in A4)


def test_enumerate_is_deterministic():
    G = grp("Dihedral(6)")
    assert list(enumerate_elements(G)) == list(enumerate_elements(G))


def test_element_cap():
    with pytest.raises(CapExceeded):
        grp("Sym(5)").elements(cap=100)


def test_conjugation_orbits_in_alt4():
    A4 = grp("Alt(4)")
    assert len(orbit_of_action(A4, parse_cycles("(1,2)(3,4)", 4), act_by_conjugation)) == 3
    assert len(orbit_of_action(A4, parse_cycles("(1,2,3)", 4), act_by_conjugation)) == 4
    o = orbit_of_action(A4, Permutation.identity(4), act_by_conjugation)
    assert len(o) == 1 and o.stabilizer.order() == 12


def test_orbit_schreier_elements_carry_seed():
    G = grp("PSL2(7)")
    o = orbit_of_action(G, 1, act_on_points)
    assert len(o) == 8
    for pt, g in o.schreier.items():
        assert act_on_points(1, g) == pt


def test_point_stabilizer_matches_brute_force():
    G = grp("Sym(4)")
    o = orbit_of_action(G, 1, act_on_points)
    brute = {g for g in G.elements() if g(1) == 1}
    assert set(o.stabilizer.elements()) == brute


def test_orbit_cap():
    with pytest.raises(CapExceeded):
        orbit_of_action(grp("Sym(6)"), parse_cycles("(1,2,3)", 6), act_by_conjugation, cap=10)


def test_subgroup_and_normality():
    S4 = grp("Sym(4)")
    V = S4.subgroup([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
    assert V.order() == 4 and V.is_subgroup_of(S4) and V.is_normal_in(S4)
    H = S4.subgroup([parse_cycles("(1,2)", 4)])
    assert not H.is_normal_in(S4)


def test_random_element_is_member():
    G = grp("PSL2(8)")
    rng = random.Random(1)
    assert all(G.contains(G.random_element(rng)) for _ in range(20))


def test_random_products_stay_inside():
    G = grp("Alt(5)")
    els = G.element_set()
    rng = random.Random(0)
    for _ in range(50):
        a, b = rng.choice(list(els)), rng.choice(list(els))
        assert mul(a, b) in els
