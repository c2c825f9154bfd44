import pytest

from unavoidable.graphs import Graph, complete_bipartite, complete_graph, cycle_graph, path_graph
from unavoidable.oracle import gen_two_connected
from unavoidable.trees import (
    children,
    deepest_branch,
    descendants,
    height,
    is_normal,
    normal_spanning_tree,
    tree_leq,
    tree_segment,
)


def star(k):
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


class TestConstruction:
    def test_path_rooted_at_endpoint(self):
        T = normal_spanning_tree(path_graph(5), 0)
        assert T.parent == (None, 0, 1, 2, 3)
        assert height(T) == 4

    def test_clique_tree_is_path(self):
        T = normal_spanning_tree(complete_graph(4), 0)
        assert height(T) == 3
        assert all(len(T.children_map[v]) <= 1 for v in range(4))

    def test_cycle_tree_is_path(self):
        T = normal_spanning_tree(cycle_graph(4), 0)
        assert height(T) == 3

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            normal_spanning_tree(Graph.from_edges(4, [(0, 1), (2, 3)]), 0)

    def test_deterministic(self):
        G = gen_two_connected(10, 99)
        assert normal_spanning_tree(G, 0) == normal_spanning_tree(G, 0)

    def test_normality_random(self):
        # every produced tree is normal; 10^4 seeded graphs
        for seed in range(10_000):
            G = gen_two_connected(4 + seed % 9, seed)
            T = normal_spanning_tree(G, seed % G.n)
            assert is_normal(G, T)


class TestOrder:
    def test_root_below_everything(self):
        T = normal_spanning_tree(complete_bipartite(2, 3), 0)
        assert all(tree_leq(T, 0, v) for v in range(5))

    def test_reflexive(self):
        T = normal_spanning_tree(star(4), 0)
        assert all(tree_leq(T, v, v) for v in range(5))

    def test_siblings_incomparable(self):
        T = normal_spanning_tree(star(4), 0)
        assert not tree_leq(T, 1, 2) and not tree_leq(T, 2, 1)

    def test_segments(self):
        T = normal_spanning_tree(path_graph(6), 0)
        assert tree_segment(T, 2, 2, "closed") == {2}
        assert tree_segment(T, 2, 2, "open") == frozenset()
        assert tree_segment(T, 4, 1, "closed") == frozenset()  # a not below b
        assert tree_segment(T, 1, 4, "closed") == {1, 2, 3, 4}
        assert tree_segment(T, 1, 4, "open") == {2, 3}
        assert tree_segment(T, 1, 4, "left_open") == {2, 3, 4}
        assert tree_segment(T, 1, 4, "right_open") == {1, 2, 3}

    def test_bad_openness(self):
        T = normal_spanning_tree(path_graph(3), 0)
        with pytest.raises(ValueError):
            tree_segment(T, 0, 2, "sideways")


class TestFamilies:
    def test_leaf_childless(self):
        T = normal_spanning_tree(path_graph(4), 0)
        assert children(T, 3) == frozenset()

    def test_star_root(self):
        T = normal_spanning_tree(star(5), 0)
        assert children(T, 0) == {1, 2, 3, 4, 5}
        assert descendants(T, 0) == {1, 2, 3, 4, 5}

    def test_single_vertex_height(self):
        T = normal_spanning_tree(Graph(1, frozenset()), 0)
        assert height(T) == 0

    def test_deepest_branch_order(self):
        T = normal_spanning_tree(cycle_graph(7), 0)
        assert deepest_branch(T).order == height(T) + 1
