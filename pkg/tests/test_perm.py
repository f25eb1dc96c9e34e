import pytest

from cdgraph.perm import Permutation, compose, element_order, parse_cycles, print_cycles

from oracles import mul


def P(text, n=5):
    return parse_cycles(text, n)


def test_compose_left_to_right():
    # (1 2) then (2 3): 1->2->3, 2->1, 3->2
    assert compose(P("(1,2)", 3), P("(2,3)", 3)) == P("(1,3,2)", 3)
    assert compose(P("(1,2)", 3), P("(2,3)", 3)) == mul(P("(1,2)", 3), P("(2,3)", 3))


def test_compose_identities():
    t = P("(1,2)")
    assert compose(t, t).is_identity()
    c = P("(1,2,3)")
    assert compose(compose(c, c), c).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(P("(1,2)", 3), P("(1,2)", 4))


def test_mul_operator_matches_compose():
    a, b = P("(1,2,3,4)"), P("(2,5)")
    assert a * b == compose(a, b)
    assert (a * b)(1) == b(a(1))


@pytest.mark.parametrize("text,n", [("()", 4), ("(1,2)(3,4)", 4), (" ( 1 , 3 ) ", 3)])
def test_parse_round_trip(text, n):
    p = parse_cycles(text, n)
    assert parse_cycles(print_cycles(p), n) == p


def test_parse_identity_and_double_transposition():
    assert parse_cycles("()", 4) == Permutation.identity(4)
    p = parse_cycles("(1,2)(3,4)", 4)
    assert [p(i) for i in range(1, 5)] == [2, 1, 4, 3]


@pytest.mark.parametrize("bad", ["(1,2,3,4,5)", "(1,2)(2,3)", "(1,2", "1,2", "(a,b)", "(1,,2)", ""])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_cycles(bad, 4)


def test_print_identity():
    assert print_cycles(Permutation.identity(3)) == "()"
    assert str(P("(3,1,2)")) == "(1,2,3)"


@pytest.mark.parametrize("text,order", [("()", 1), ("(1,2)(3,4,5)", 6), ("(1,2,3)(4,5,6)", 3)])
def test_element_order(text, order):
    p = parse_cycles(text, 6)
    assert element_order(p) == order
    # repeated multiplication agrees with the lcm of cycle lengths
    x, k = p, 1
    while not x.is_identity():
        x, k = x * p, k + 1
    assert k == order


def test_inverse_and_sign():
    p = P("(1,2,3)(4,5)")
    assert (p * p.inverse()).is_identity()
    assert p.sign() == -1
    assert P("(1,2,3)").sign() == 1


def test_images_are_bijective():
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))
    assert Permutation.from_images([2, 3, 1]) == P("(1,2,3)", 3)
