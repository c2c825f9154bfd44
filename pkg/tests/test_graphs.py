from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from unavoidable.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_induced_path_of_order,
    find_k2s_subgraph,
    induced_subgraph,
    is_connected,
    is_induced_path,
    is_two_connected,
    longest_induced_path,
    path_graph,
    shortest_path,
)
from unavoidable.oracle import gen_two_connected
from unavoidable.rng import SplitMix64

from .conftest import petersen


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    all_edges = list(combinations(range(n), 2))
    picks = draw(st.lists(st.sampled_from(all_edges), unique=True) if all_edges else st.just([]))
    return Graph.from_edges(n, picks)


def brute_longest_induced_path_order(G: Graph) -> int:
    """Independent oracle: max subset whose induced subgraph is a path graph."""
    best = 0
    for size in range(1, G.n + 1):
        for S in combinations(range(G.n), size):
            H, _ = induced_subgraph(G, S)
            degs = sorted(H.degree(v) for v in H.vertices())
            if size == 1:
                ok = True
            else:
                ok = (
                    H.m == size - 1
                    and degs[-1] <= 2
                    and degs.count(1) == 2
                    and is_connected(H)
                )
            if ok:
                best = max(best, size)
    return best


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, frozenset({(0, 3)}))

    def test_adjacency_symmetric(self):
        G = Graph.from_edges(4, [(2, 0), (1, 3)])
        for u, v in G.edges:
            assert v in G.adj[u] and u in G.adj[v]


class TestInducedSubgraph:
    def test_k4_triangle(self):
        H, vmap = induced_subgraph(complete_graph(4), {0, 1, 2})
        assert H.n == 3 and H.m == 3
        assert vmap == (0, 1, 2)

    def test_empty_set(self):
        H, vmap = induced_subgraph(cycle_graph(5), set())
        assert H.n == 0 and H.m == 0 and vmap == ()

    def test_c5_path(self):
        H, vmap = induced_subgraph(cycle_graph(5), {0, 1, 2})
        assert H.n == 3 and H.m == 2

    def test_unknown_vertex(self):
        with pytest.raises(ValueError):
            induced_subgraph(cycle_graph(4), {0, 9})

    @given(graphs())
    @settings(max_examples=150, deadline=None)
    def test_idempotent(self, G):
        S = set(range(0, G.n, 2))
        H1, _ = induced_subgraph(G, S)
        H2, _ = induced_subgraph(H1, range(H1.n))
        assert H1 == H2


class TestTwoConnectivity:
    def test_examples(self):
        assert is_two_connected(cycle_graph(4))
        assert not is_two_connected(path_graph(4))
        bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
        assert not is_two_connected(bowtie)

    def test_against_deletion_brute_force(self, all_graphs_upto7):
        # definition: connected, >= 3 vertices, no vertex whose removal disconnects
        for G in all_graphs_upto7:
            expected = G.n >= 3 and is_connected(G)
            if expected:
                for v in range(G.n):
                    H, _ = induced_subgraph(G, set(range(G.n)) - {v})
                    if H.n and not is_connected(H):
                        expected = False
                        break
            assert is_two_connected(G) == expected


class TestShortestPath:
    def test_antipodal_c6(self):
        p = shortest_path(cycle_graph(6), 0, 3)
        assert p.order == 4 and p.induced

    def test_edge(self):
        p = shortest_path(complete_graph(5), 1, 4)
        assert p.vertices == (1, 4)

    def test_k23_hubs(self):
        p = shortest_path(complete_bipartite(2, 3), 0, 1)
        assert p.order == 3 and p.vertices[1] >= 2

    def test_disconnected(self):
        with pytest.raises(ValueError):
            shortest_path(Graph.from_edges(4, [(0, 1), (2, 3)]), 0, 3)

    def test_always_induced_random(self):
        # shortest paths are chordless; checked over 10^4 seeded graphs
        rng = SplitMix64(2024)
        for seed in range(10_000):
            n = 5 + seed % 8
            G = gen_two_connected(n, seed)
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                continue
            p = shortest_path(G, u, v)
            assert is_induced_path(G, p.vertices)


class TestLongestInducedPath:
    def test_path_graph_exhaustive(self):
        p, exhaustive = longest_induced_path(path_graph(7))
        assert p.order == 7 and exhaustive

    def test_k5(self):
        p, _ = longest_induced_path(complete_graph(5))
        assert p.order == 2

    def test_petersen(self):
        # frozen from the subset oracle (and two further enumerations):
        # no induced path on 6 vertices exists, the maximum order is 5
        G = petersen()
        assert brute_longest_induced_path_order(G) == 5
        p, exhaustive = longest_induced_path(G)
        assert p.order == 5 and exhaustive
        assert is_induced_path(G, p.vertices)

    def test_matches_subset_oracle_small(self, all_graphs_upto7):
        for G in all_graphs_upto7[:400]:
            if G.n == 0:
                continue
            p, exhaustive = longest_induced_path(G)
            assert exhaustive
            assert p.order == brute_longest_induced_path_order(G)

    def test_matches_subset_oracle_eight_vertices(self, two_connected_upto8):
        eights = [G for G in two_connected_upto8 if G.n == 8]
        for G in eights[:: len(eights) // 150]:
            p, exhaustive = longest_induced_path(G)
            assert exhaustive
            assert p.order == brute_longest_induced_path_order(G)

    def test_budget_flag(self):
        p, exhaustive = longest_induced_path(petersen(), budget=5)
        assert not exhaustive and p.order >= 1

    def test_zero_budget(self):
        with pytest.raises(ValueError):
            longest_induced_path(cycle_graph(4), budget=0)

    def test_targeted_search(self):
        assert find_induced_path_of_order(cycle_graph(9), 8).order == 8
        assert find_induced_path_of_order(complete_graph(5), 3) is None


class TestFindK2s:
    def test_k23(self):
        pair, witness = find_k2s_subgraph(complete_bipartite(2, 3), 3)
        assert pair == (0, 1) and witness == (2, 3, 4)

    def test_triangle_absent(self):
        assert find_k2s_subgraph(complete_graph(3), 2) is None

    def test_c6_absent(self):
        # oracle: girth 6 means no two vertices share two common neighbours
        G = cycle_graph(6)
        best = max(
            len(set(G.adj[a]) & set(G.adj[b])) for a in range(6) for b in range(a + 1, 6)
        )
        assert best == 1  # frozen from the pair enumeration
        assert find_k2s_subgraph(G, 2) is None

    def test_lexicographic_choice(self):
        G = complete_graph(4)
        pair, witness = find_k2s_subgraph(G, 2)
        assert pair == (0, 1) and witness == (2, 3)
