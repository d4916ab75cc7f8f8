import random

import pytest

from distinguo.errors import MalformedGraph, OrderExceedsCap, SearchBudgetExceeded
from distinguo.graphs import (
    automorphism_search,
    complete_graph,
    cycle_graph,
    format_graph,
    parse_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from distinguo.perm import enumerate_elements

import corpus
from oracles import brute_automorphism_count


def test_parse_graph():
    g = parse_graph("graph 3 / e 0 1 / e 1 2")
    assert g == path_graph(3)
    assert parse_graph("graph 4 / e 0 1 / e 1 2 / e 2 3 / e 3 0") == cycle_graph(4)
    assert parse_graph(format_graph(petersen_graph())) == petersen_graph()


@pytest.mark.parametrize(
    "text", ["graph 2 / e 0 0", "graph 2 / e 0 2", "graph 3 / e 0 1 / e 1 0", "e 0 1", "graph 3 / f 0 1"]
)
def test_parse_graph_rejects(text):
    with pytest.raises(MalformedGraph):
        parse_graph(text)


@pytest.mark.parametrize(
    "graph, order",
    [(cycle_graph(4), 8), (path_graph(3), 2), (star_graph(3), 6), (petersen_graph(), 120), (complete_graph(5), 120)],
)
def test_automorphism_orders(graph, order):
    action, found = automorphism_search(graph)
    assert found == order
    assert len(enumerate_elements(action)) == order


def _preserves_edges(g, p):
    return {(min(p(u), p(v)), max(p(u), p(v))) for u, v in g.edges} == set(g.edges)


def test_orders_match_brute_force_on_small_graphs():
    for name, g in corpus.small_graphs():
        action, order = automorphism_search(g)
        assert order == brute_automorphism_count(g), name


def test_random_graphs_up_to_eight_vertices():
    rng = random.Random(11)
    from distinguo.graphs import make_graph

    for _ in range(12):
        n = rng.randint(7, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = make_graph(n, edges)
        assert automorphism_search(g)[1] == brute_automorphism_count(g)


def test_generators_and_products_preserve_edges():
    rng = random.Random(3)
    for g in (petersen_graph(), cycle_graph(9), complete_graph(6)):
        action = automorphism_search(g)[0]
        for p in action.generators:
            assert _preserves_edges(g, p)
        for _ in range(100):
            w = action.identity()
            for _ in range(rng.randint(1, 8)):
                w = w * rng.choice(action.generators)
            assert _preserves_edges(g, w)


def test_twenty_vertex_graph():
    # Dodecahedron: order 120 on 20 vertices.
    import networkx as nx

    from distinguo.graphs import make_graph

    g = make_graph(20, nx.dodecahedral_graph().edges())
    assert automorphism_search(g)[1] == 120


def test_cap_and_budget():
    with pytest.raises(OrderExceedsCap):
        automorphism_search(complete_graph(8), cap=1000)
    with pytest.raises(SearchBudgetExceeded):
        automorphism_search(petersen_graph(), budget=5)
