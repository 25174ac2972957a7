import itertools
import random

import pytest
from hypothesis import given, settings

from domramsey.generate import graphs_by_order
from domramsey.graph import (Graph, biclique_minus_matching, complement, complete_graph, cycle_graph,
                             empty_graph, induced, path_graph)
from domramsey.invariants import independence_number, upper_domination_number
from domramsey.structure import (PERFECTNESS_ORDER_CAP, contains_g1, find_biclique_minus_matching,
                                 find_induced, is_gamma_perfect, is_induced_embedding)

from oracles import find_induced_brute
from strategies import graphs

C6 = cycle_graph(6)
PRISM = complement(C6)


def test_find_induced_examples():
    emb = find_induced(C6, complement(PRISM))
    assert emb is not None and is_induced_embedding(C6, complement(PRISM), emb)
    assert find_induced(C6, complete_graph(6)) is None
    emb = find_induced(complete_graph(3), PRISM)
    assert emb is not None and sorted(emb) in ([0, 2, 4], [1, 3, 5])
    assert find_induced(complete_graph(7), complete_graph(6)) is None


def test_embedding_check_rejects_bad_maps():
    assert not is_induced_embedding(path_graph(3), C6, (0, 1, 1))
    assert not is_induced_embedding(path_graph(3), C6, (0, 1, 6))
    assert not is_induced_embedding(path_graph(3), C6, (0, 1, 3))
    assert is_induced_embedding(path_graph(3), C6, (0, 1, 2))


def test_find_induced_matches_brute_force():
    small = [Graph(n, adj) for n, level in enumerate(graphs_by_order(4), 1) for adj in level]
    hosts = [Graph(6, adj) for adj in graphs_by_order(6)[5]]
    rng = random.Random(3)
    for pattern in small:
        for host in rng.sample(hosts, 25):
            emb = find_induced(pattern, host)
            assert (emb is not None) == find_induced_brute(pattern, host)
            if emb is not None:
                assert is_induced_embedding(pattern, host, emb)


@given(graphs(max_order=5), graphs(min_order=5, max_order=10))
@settings(max_examples=150, deadline=None)
def test_complement_duality_same_map(pattern, host):
    a = find_induced(pattern, host)
    b = find_induced(complement(pattern), complement(host))
    assert a == b
    if a is not None:
        assert is_induced_embedding(pattern, host, a)


def test_biclique_examples():
    g = biclique_minus_matching(3, 3)
    emb = find_biclique_minus_matching(g, 3)
    assert emb is not None and is_induced_embedding(biclique_minus_matching(3, 3), g, emb)
    assert find_biclique_minus_matching(C6, 2) is None
    assert find_biclique_minus_matching(C6, 3) is None      # needs eight vertices
    assert find_biclique_minus_matching(biclique_minus_matching(2, 2), 2) is not None
    with pytest.raises(ValueError):
        find_biclique_minus_matching(C6, 0)


def test_biclique_embedding_layout():
    host = biclique_minus_matching(3, 3)
    emb = find_biclique_minus_matching(host, 3)
    for i in range(3):
        assert not host.has_edge(emb[i], emb[4 + i])
    assert host.has_edge(emb[3], emb[7])


def test_forests_are_gamma_perfect():
    count = 0
    for n, level in enumerate(graphs_by_order(8), 1):
        for adj in level:
            g = Graph(n, adj)
            if _is_forest(g):
                count += 1
                assert is_gamma_perfect(g).perfect
    assert count == 1 + 2 + 3 + 6 + 10 + 20 + 37 + 76   # forests on 1..8 vertices


def _is_forest(g):
    parent = list(range(g.order))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in g.edges():
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def test_prism_is_not_gamma_perfect():
    res = is_gamma_perfect(PRISM)
    assert not res and res.witness == 0b111111
    h = induced(PRISM, res.witness)
    assert independence_number(h).value == 2 and upper_domination_number(h).value == 3


@pytest.mark.parametrize("n", [1, 4, 9])
def test_complete_graphs_are_gamma_perfect(n):
    assert is_gamma_perfect(complete_graph(n))


def test_perfectness_cap():
    with pytest.raises(ValueError):
        is_gamma_perfect(empty_graph(PERFECTNESS_ORDER_CAP + 1))


def test_contains_g1_examples():
    assert contains_g1(PRISM)
    assert not contains_g1(C6)
    for n, level in enumerate(graphs_by_order(5), 1):
        for adj in level:
            assert not contains_g1(Graph(n, adj))


@given(graphs(max_order=9))
@settings(max_examples=80, deadline=None)
def test_g1_obstructs_perfectness(g):
    if contains_g1(g):
        res = is_gamma_perfect(g)
        assert not res
        h = induced(g, res.witness)
        assert independence_number(h).value < upper_domination_number(h).value


def test_witness_is_a_real_counterexample_on_all_order_six():
    for adj in graphs_by_order(6)[5]:
        g = Graph(6, adj)
        res = is_gamma_perfect(g)
        if res:
            for size in range(1, 7):
                for sub in itertools.combinations(range(6), size):
                    mask = sum(1 << v for v in sub)
                    h = induced(g, mask)
                    assert independence_number(h).value == upper_domination_number(h).value
        else:
            h = induced(g, res.witness)
            assert independence_number(h).value < upper_domination_number(h).value
