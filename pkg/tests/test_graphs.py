import pytest

from cdgraph.classes import conjugacy_classes
from cdgraph.corpus import T1
from cdgraph.graphs import (
    bipartite_divisor,
    delta_p,
    equal_size_caveat,
    gamma,
    gamma_p,
    match_components,
    metrics,
    to_dot,
)
from cdgraph.verify import default_primes

from conftest import grp
from oracles import nx_bipartite, nx_delta, nx_gamma, nx_summary, p_regular_sizes


def prof(spec):
    return conjugacy_classes(grp(spec))


def test_gamma_sym3():
    g = gamma(prof("Sym(3)"))
    assert g.vertices == [2, 3] and not g.edges
    m = metrics(g)
    assert m.component_count == 2 and m.diameters == [0, 0]
    assert m.component_complete == [True, True] and not m.is_complete


def test_gamma_alt5_complete():
    g = gamma(prof("Alt(5)"))
    assert g.vertices == [12, 15, 20]
    m = metrics(g)
    assert m.component_count == 1 and m.diameters == [1]
    assert m.is_complete and m.regular_degree == 2


def test_gamma_abelian_empty():
    m = metrics(gamma(prof("Cyclic(12)")))
    assert m.component_count == 0 and m.is_complete and m.components == []


def test_gamma_p_for_non_divisor_equals_gamma():
    P = prof("Alt(5)")
    assert gamma_p(P, 7).vertices == gamma(P).vertices
    assert gamma_p(P, 7).edges == gamma(P).edges


def test_gamma_p_examples():
    g = gamma_p(prof("Alt(4)"), 2)
    assert g.vertices == [4]
    assert metrics(g).diameters == [0]
    assert metrics(gamma_p(prof("Dihedral(4)"), 2)).component_count == 0


def test_delta_p_examples():
    d = delta_p(prof("Alt(4)"), 2)
    assert d.vertices == [2] and not d.edges
    d = delta_p(prof("Sym(3)"), 7)
    assert d.vertices == [2, 3] and not d.edges
    assert delta_p(prof("Cyclic(6)"), 5).vertices == []


def test_bipartite_examples():
    b = bipartite_divisor(prof("Sym(3)"), 5)
    assert b.prime_side == [2, 3] and b.size_side == [2, 3]
    assert sorted(b.edges) == [(2, 2), (3, 3)]
    assert bipartite_divisor(prof("Cyclic(4)"), 3).edges == []
    assert metrics(bipartite_divisor(prof("Alt(5)"), 7)).component_count == 1


def test_has_edge_and_labelled_adjacency():
    g = gamma(prof("Sym(4)"))
    assert g.vertices == [3, 6, 8]
    assert g.has_edge(3, 6) and g.has_edge(6, 8) and not g.has_edge(3, 8)
    assert g.labelled_adjacency()[6] == {3, 8}
    assert metrics(g).diameters == [2]


@pytest.mark.parametrize("spec", T1)
def test_graphs_match_networkx(spec):
    G = grp(spec)
    els = G.elements()
    P = conjugacy_classes(G)
    for p in default_primes(G):
        sizes = [s for s in p_regular_sizes(els, p) if s > 1]
        for mine, ref in ((gamma_p(P, p), nx_gamma(sizes)), (delta_p(P, p), nx_delta(sizes)),
                          (bipartite_divisor(P, p), nx_bipartite(sizes))):
            m = metrics(mine)
            assert (m.component_count, sorted(m.diameters), m.is_complete) == nx_summary(ref)


def test_match_components_by_divisibility():
    P = prof("Sym(3)")
    assert sorted(match_components(gamma_p(P, 5), delta_p(P, 5))) == [(0, 0), (1, 1)]


def test_equal_size_caveat():
    # Frobenius(7,3): the two size-3 classes share a size coprime to 7
    assert equal_size_caveat(prof("Frobenius(7,3)")) == [3, 7]
    assert equal_size_caveat(prof("Sym(3)")) == []
    assert equal_size_caveat(prof("Alt(5)")) == []


def test_dot_output():
    text = to_dot(gamma(prof("Sym(3)")), name="Sym(3)")
    assert text.startswith('graph "Sym(3)"')
    assert "component=0" in text and "component=1" in text
    assert " -- " not in text
    assert to_dot(gamma(prof("Sym(3)")), name="Sym(3)") == text
