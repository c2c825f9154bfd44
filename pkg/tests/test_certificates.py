from itertools import permutations

import pytest

from unavoidable.certificates import (
    Certificate,
    clean_cycle_certificate,
    clean_fan_certificate,
    clique_certificate,
    ladder_certificate,
    path_certificate,
    theta_certificate,
    verify_certificate,
    verify_clean_ladder,
    verify_clique,
    verify_messy_ladder,
    verify_theta,
)
from unavoidable.graphs import Graph, complete_bipartite, complete_graph, cycle_graph
from unavoidable.ladder_clean import find_crosses
from unavoidable.ladders import MessyLadder
from unavoidable.oracle import LadderParams, gen_messy_ladder


def ladder_graph(lx, ly, rungs):
    """Explicit ladder host: X = 0..lx-1, Y = lx..lx+ly-1, given extra rungs
    as (x_index, y_index) pairs; sigma and tau are always present."""
    X = list(range(lx))
    Y = list(range(lx, lx + ly))
    edges = [(a, b) for a, b in zip(X, X[1:])] + [(a, b) for a, b in zip(Y, Y[1:])]
    edges += [(X[0], Y[0]), (X[-1], Y[-1])]
    edges += [(X[i], Y[j]) for i, j in rungs]
    return Graph.from_edges(lx + ly, edges), tuple(X), tuple(Y)


class TestClique:
    def test_k4(self):
        assert verify_clique(complete_graph(4), [0, 1, 2, 3], 4)

    def test_c4_triple(self):
        assert not verify_clique(cycle_graph(4), [0, 1, 2], 3)

    def test_missing_edge(self):
        G = Graph.from_edges(5, [e for e in complete_graph(5).edges if e != (0, 1)])
        assert not verify_clique(G, range(5), 5)

    def test_too_small(self):
        assert not verify_clique(complete_graph(4), [0, 1], 3)


class TestTheta:
    def test_k23_canonical(self):
        G = complete_bipartite(2, 3)
        c = theta_certificate(0, 1, [(0, 2, 1), (0, 3, 1), (0, 4, 1)], False, 3)
        assert verify_theta(G, c, 3)

    def test_k23_plus(self):
        G = Graph.from_edges(5, list(complete_bipartite(2, 3).edges) + [(0, 1)])
        c = theta_certificate(0, 1, [(0, 2, 1), (0, 3, 1), (0, 4, 1)], True, 3)
        assert verify_theta(G, c, 3)

    def test_plus_flag_must_match_host(self):
        G = complete_bipartite(2, 3)
        c = theta_certificate(0, 1, [(0, 2, 1), (0, 3, 1), (0, 4, 1)], True, 3)
        assert not verify_theta(G, c, 3)

    def test_k4_no_labeling_works(self):
        # brute force over all hub/path labelings of K_4
        G = complete_graph(4)
        for u, v in permutations(range(4), 2):
            rest = [w for w in range(4) if w not in (u, v)]
            for mid in permutations(rest):
                paths = [(u, m, v) for m in mid]
                c = theta_certificate(u, v, paths, G.has_edge(u, v), 2)
                assert not verify_theta(G, c, 2)

    def test_rejects_shared_internal(self):
        G = complete_bipartite(2, 5)
        good = theta_certificate(0, 1, [(0, i, 1) for i in (2, 3, 4)], False, 3)
        assert verify_theta(G, good, 3)
        shared = theta_certificate(0, 1, [(0, 2, 1), (0, 2, 1), (0, 4, 1)], False, 3)
        assert not verify_theta(G, shared, 3)

    def test_rejects_single_edge_path(self):
        G = Graph.from_edges(5, list(complete_bipartite(2, 3).edges) + [(0, 1)])
        c = Certificate(
            "theta_plus", 3, (0, 1, 2, 3), branch_u=0, branch_v=1,
            paths=((0, 2, 1), (0, 3, 1), (0, 1)),
        )
        assert not verify_theta(G, c, 3)

    def test_rejects_chord(self):
        # an edge between internals of different paths must fail
        edges = list(complete_bipartite(2, 3).edges) + [(2, 3)]
        G = Graph.from_edges(5, edges)
        c = theta_certificate(0, 1, [(0, 2, 1), (0, 3, 1), (0, 4, 1)], False, 3)
        assert not verify_theta(G, c, 3)

    def test_too_few_paths(self):
        G = complete_bipartite(2, 3)
        c = theta_certificate(0, 1, [(0, 2, 1), (0, 3, 1)], False, 2)
        assert verify_theta(G, c, 2)
        assert not verify_theta(G, c, 3)


class TestMessyLadder:
    def test_c4_split(self):
        G = cycle_graph(4)
        assert verify_messy_ladder(G, (0, 1), (3, 2))

    def test_shared_vertex_rejected(self):
        G = cycle_graph(4)
        assert not verify_messy_ladder(G, (0, 1), (1, 2))

    def test_rail_chord_rejected(self):
        G, X, Y = ladder_graph(3, 3, [])
        chorded = Graph.from_edges(6, list(G.edges) + [(0, 2)])
        assert not verify_messy_ladder(chorded, X, Y)

    def test_missing_tau_rejected(self):
        G, X, Y = ladder_graph(3, 3, [])
        missing = Graph.from_edges(6, [e for e in G.edges if e != (2, 5)])
        assert not verify_messy_ladder(missing, X, Y)

    def test_both_trivial_rejected(self):
        G = Graph.from_edges(2, [(0, 1)])
        assert not verify_messy_ladder(G, (0,), (1,))

    def test_one_trivial_allowed(self):
        G = cycle_graph(3)
        assert verify_messy_ladder(G, (0, 1), (2,))


class TestCleanLadder:
    def test_c6_cross_free(self):
        G = cycle_graph(6)
        assert verify_clean_ladder(G, rail_x=(0, 1, 2), rail_y=(5, 4, 3))

    def test_degenerate_cross_accepted(self):
        # order-6 ladder with the two crossing rungs adjacent on both rails
        G, X, Y = ladder_graph(3, 3, [(0, 1), (1, 0)])
        assert verify_clean_ladder(G, rail_x=X, rail_y=Y)

    def test_degenerate_cross_uneven_rails(self):
        # order-6 ladder, rails 2+4, rungs (x0,y2) and (x1,y1): both spans
        # are single edges, so the cross is degenerate and the ladder clean
        G, X, Y = ladder_graph(2, 4, [(0, 2), (1, 1)])
        assert verify_messy_ladder(G, X, Y)
        assert verify_clean_ladder(G, rail_x=X, rail_y=Y)

    def test_wide_cross_rejected(self):
        # order-8 ladder with a cross whose X-span has two edges
        G, X, Y = ladder_graph(4, 4, [(0, 3), (2, 1)])
        assert verify_messy_ladder(G, X, Y)
        assert not verify_clean_ladder(G, rail_x=X, rail_y=Y)

    def test_agrees_with_cross_enumerator(self):
        # independent implementations: verifier's inline scan vs find_crosses
        for seed in range(1000):
            lad = gen_messy_ladder(LadderParams(5, 5, rung_num=1, rung_den=3), seed)
            expected = all(c.degenerate for c in find_crosses(lad))
            got = verify_clean_ladder(lad.graph, lad)
            assert got == expected


class TestDispatchAndJson:
    def test_clique_dispatch(self):
        cert = clique_certificate([0, 1, 2, 3], 4)
        assert verify_certificate(complete_graph(4), cert)

    def test_path_rejects_nonadjacent(self):
        cert = path_certificate((0, 2, 4), 3)
        assert not verify_certificate(cycle_graph(6), cert)

    def test_fan_example(self):
        # apex 0 on rail (0,1), rim (3,2): only the sigma edge lands on the
        # rim, one blade short of a 3-fan
        G = cycle_graph(4)
        cert = clean_fan_certificate(0, (3, 2), 3)
        assert not verify_certificate(G, cert)

    def test_fan_accepts(self):
        G, X, Y = ladder_graph(2, 3, [(0, 1)])
        cert = clean_fan_certificate(0, Y[:2], 3)
        assert verify_certificate(G, cert)

    def test_clean_cycle(self):
        cert = clean_cycle_certificate((0, 1, 2, 3, 4, 5), 6)
        assert verify_certificate(cycle_graph(6), cert)
        assert not verify_certificate(complete_graph(6), cert)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            verify_certificate(cycle_graph(3), Certificate("mystery", 1, (0,)))

    def test_json_round_trip_all_kinds(self):
        G, X, Y = ladder_graph(3, 3, [(1, 1)])
        lad = MessyLadder(G, X, Y)
        certs = [
            clique_certificate([0, 1, 2], 3),
            theta_certificate(0, 1, [(0, 2, 1), (0, 3, 1)], False, 2),
            ladder_certificate(lad, 6, clean=True),
            ladder_certificate(lad, 6, clean=False),
            path_certificate((0, 1, 2), 3),
            clean_cycle_certificate((0, 1, 2), 3),
            clean_fan_certificate(0, (3, 4), 3),
            Certificate("independent_set", 2, (0, 2)),
        ]
        for cert in certs:
            assert Certificate.from_json(cert.to_json()) == cert
