import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from oracles import clique_number_in_colour, has_mono_pair, is_k_colourable, mono_cliques, triangle_free
from ramsey_equiv.avoidance import Target, known_colouring, search_avoiding_colouring
from ramsey_equiv.detect import (
    BudgetExhausted,
    SearchBudget,
    chromatic_number,
    find_mono_clique,
    find_mono_pair,
    is_proper_vertex_colouring,
    is_triangle_free,
    largest_capped_clique,
    optimal_vertex_colouring,
)
from ramsey_equiv.graph import EdgeColouring, Graph, complete_graph
from ramsey_equiv.planted import cycle_graph, petersen_graph, random_graph


def mono(G, r=1, colour=0):
    return EdgeColouring.from_function(G, r, lambda u, v: colour)


def c5():
    return known_colouring("c5_pair").colouring


def test_find_mono_clique_examples():
    K3 = complete_graph(3)
    assert find_mono_clique(K3, mono(K3), 0, 3).vertices == {0, 1, 2}
    c = c5()
    for i in (0, 1):
        assert find_mono_clique(c.graph, c, i, 3) is None
    p = known_colouring("paley17").colouring
    for i in (0, 1):
        assert find_mono_clique(p.graph, p, i, 4) is None
        # oracle: exhaustive scan of all 2380 quadruples
        assert mono_cliques(p, 4, colour=i) == []


def test_find_mono_clique_respects_within():
    K5 = complete_graph(5)
    c = mono(K5)
    assert find_mono_clique(K5, c, 0, 3, within=[1, 3, 4]).vertices == {1, 3, 4}
    assert find_mono_clique(K5, c, 0, 3, within=[1, 3]) is None


def test_find_mono_pair_examples():
    K5 = complete_graph(5)
    w = find_mono_pair(K5, mono(K5), 0, 3)
    assert (w.big, w.small) == ({0, 1, 2}, {3, 4})
    c = c5()
    assert find_mono_pair(c.graph, c, 0, 3) is None
    assert find_mono_pair(c.graph, c, 1, 3) is None


def test_find_mono_pair_on_k6_obstacle_colouring():
    K6 = complete_graph(6)
    col = search_avoiding_colouring(K6, 2, Target.pair(3))
    assert col is not None
    # oracle over all 2^15 colourings: at least one avoids K3+K2 in both colours
    assert not has_mono_pair(col, 3)
    for i in (0, 1):
        assert find_mono_pair(K6, col, i, 3) is None


def test_largest_capped_clique_examples():
    K5 = complete_graph(5)
    c = mono(K5, r=2)
    assert largest_capped_clique(K5, c, 1, [2, 4, 3], 3) == {2}
    assert largest_capped_clique(K5, c, 1, [], 3) == frozenset()
    assert largest_capped_clique(K5, c, 0, range(5), 3) == {0, 1, 2}
    p = c5()
    # oracle: max red clique in C5 is an edge; smallest is {0, 1}
    assert clique_number_in_colour(p, 0, list(range(5))) == 2
    assert largest_capped_clique(p.graph, p, 0, range(5), 3) == {0, 1}


@pytest.mark.parametrize(
    "G, chi",
    [(complete_graph(6), 6), (cycle_graph(5), 3), (petersen_graph(), 3), (Graph(0, []), 0)],
)
def test_chromatic_number_examples(G, chi):
    assert chromatic_number(G) == chi
    if chi:
        assert is_k_colourable(G, chi) and not is_k_colourable(G, chi - 1)


def test_chromatic_number_budget():
    G = random_graph(random.Random(5), 40, 0.5)
    with pytest.raises(BudgetExhausted):
        chromatic_number(G, SearchBudget(max_nodes=5))


def test_is_triangle_free_examples():
    assert is_triangle_free(cycle_graph(5))
    assert not is_triangle_free(complete_graph(3))
    P = petersen_graph()
    assert is_triangle_free(P)
    assert triangle_free(P)


def _random_coloured(draw_seed, n, p, r):
    rng = random.Random(draw_seed)
    G = random_graph(rng, n, p)
    return G, EdgeColouring.from_function(G, r, lambda u, v: rng.randrange(r))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10), st.floats(0.2, 1.0), st.integers(1, 3), st.integers(1, 5))
def test_find_mono_clique_matches_naive_scan(seed, n, p, r, k):
    G, c = _random_coloured(seed, n, p, r)
    for i in range(r):
        expected = mono_cliques(c, k, colour=i)
        got = find_mono_clique(G, c, i, k)
        if expected:
            assert got is not None and tuple(sorted(got.vertices)) == expected[0]
        else:
            assert got is None


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 9), st.floats(0.3, 1.0), st.integers(1, 3), st.integers(2, 4))
def test_find_mono_pair_matches_naive(seed, n, p, r, pn):
    G, c = _random_coloured(seed, n, p, r)
    for i in range(r):
        got = find_mono_pair(G, c, i, pn)
        assert (got is not None) == has_mono_pair(c, pn, colour=i)
        if got is not None:
            assert len(got.big) == pn and len(got.small) == pn - 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10), st.floats(0.2, 1.0), st.integers(1, 3), st.integers(0, 5))
def test_largest_capped_clique_properties(seed, n, p, r, cap):
    G, c = _random_coloured(seed, n, p, r)
    rng = random.Random(seed)
    within = [v for v in range(n) if rng.random() < 0.7]
    for i in range(r):
        got = largest_capped_clique(G, c, i, within, cap)
        assert got <= set(within)
        assert len(got) <= 1 or all(c.colour(u, v) == i for u, v in combinations(sorted(got), 2))
        assert len(got) == min(clique_number_in_colour(c, i, within), cap)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 8), st.floats(0.2, 0.9))
def test_chromatic_number_is_optimal(seed, n, p):
    G = random_graph(random.Random(seed), n, p)
    col = optimal_vertex_colouring(G)
    k = max(col) + 1
    assert is_proper_vertex_colouring(G, col)
    assert not is_k_colourable(G, k - 1)
