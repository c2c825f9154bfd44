from itertools import combinations

import pytest

from unavoidable.certificates import verify_certificate
from unavoidable.graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    is_two_connected,
)
from unavoidable.io import encode_graph6
from unavoidable.oracle import (
    LadderParams,
    _induced_cycle_sequences,
    _ladder_split,
    _ladder_witness,
    brute_force_structures,
    census_record,
    gen_messy_ladder,
    gen_two_connected,
    summarize_census,
    verify_theorem_on_corpus,
)
from unavoidable.certificates import verify_messy_ladder
from unavoidable.ladder_clean import find_crosses


class TestBruteForce:
    def test_c5(self):
        res = brute_force_structures(cycle_graph(5), 3)
        assert res.flags == {
            "clique": False,
            "theta": False,
            "theta_plus": False,
            "clean_ladder": True,
        }
        assert len(res.clean_ladder.vertices) == 5

    def test_k4(self):
        res = brute_force_structures(complete_graph(4), 4)
        assert res.flags["clique"] and res.clique.vertices == (0, 1, 2, 3)

    def test_k23(self):
        res = brute_force_structures(complete_bipartite(2, 3), 3)
        assert res.flags["theta"] and not res.flags["theta_plus"]

    def test_cap(self):
        with pytest.raises(ValueError):
            brute_force_structures(complete_graph(11), 3)

    def test_witnesses_verify(self):
        for seed in range(40):
            G = gen_two_connected(7, seed)
            res = brute_force_structures(G, 4)
            for kind in ("clique", "theta", "theta_plus", "clean_ladder"):
                cert = getattr(res, kind)
                if cert is not None:
                    assert verify_certificate(G, cert)

    def test_ladder_search_r5_cases(self):
        # full-scan branch (r >= 5): K_5 hosts no order-5 ladder (no rail of
        # order >= 2 is induced in a clique with both rails nontrivial...
        # any 3-vertex rail would need a nonadjacent pair), C_7 and the
        # triangular prism do
        assert _ladder_witness(complete_graph(5), 5) is None
        assert _ladder_witness(cycle_graph(7), 5) is not None
        prism = Graph.from_edges(
            6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
        )
        cert = _ladder_witness(prism, 6)
        assert cert is not None and len(cert.vertices) == 6
        assert verify_certificate(prism, cert)

    def test_ladder_shortcut_matches_full_scan(self, two_connected_upto8):
        # r=4 shortcut (cycle >= 4 / diamond / K_4) vs the exhaustive
        # subset-partition scan, on every 2-connected graph up to 7 vertices
        def full_scan(G, r):
            for size in range(max(r, 3), G.n + 1):
                for combo in combinations(range(G.n), size):
                    if _ladder_split(G, combo) is not None:
                        return True
            return False

        small = [G for G in two_connected_upto8 if G.n <= 7]
        assert len(small) == 538
        for G in small:
            assert (_ladder_witness(G, 4) is not None) == full_scan(G, 4)
            has_cycle = any(
                True for size in range(3, G.n + 1) for _ in _induced_cycle_sequences(G, size)
            )
            assert (_ladder_witness(G, 3) is not None) == has_cycle


class TestGenerators:
    def test_triangle_base_case(self):
        G = gen_two_connected(3, 123)
        assert sorted(G.edges) == [(0, 1), (0, 2), (1, 2)]

    def test_always_two_connected(self):
        for seed in range(1000):
            assert is_two_connected(gen_two_connected(12, seed))

    def test_deterministic(self):
        assert gen_two_connected(9, 5) == gen_two_connected(9, 5)
        p = LadderParams(5, 6, rung_num=1, rung_den=2)
        a, b = gen_messy_ladder(p, 9), gen_messy_ladder(p, 9)
        assert a.graph == b.graph and a.rail_x == b.rail_x

    def test_ladder_zero_density_crossfree(self):
        lad = gen_messy_ladder(LadderParams(6, 6), 4)
        assert find_crosses(lad) == []
        assert verify_messy_ladder(lad.graph, lad.rail_x, lad.rail_y)

    def test_ladder_forced_degenerate_cross(self):
        lad = gen_messy_ladder(LadderParams(5, 5, pattern="one_degenerate_cross"), 17)
        crosses = find_crosses(lad)
        assert len(crosses) == 1 and crosses[0].degenerate

    def test_ladder_trivial_rail(self):
        lad = gen_messy_ladder(LadderParams(1, 6, rung_num=1, rung_den=2), 3)
        assert verify_messy_ladder(lad.graph, lad.rail_x, lad.rail_y)

    def test_ladder_param_errors(self):
        with pytest.raises(ValueError):
            gen_messy_ladder(LadderParams(1, 1), 0)
        with pytest.raises(ValueError):
            gen_messy_ladder(LadderParams(3, 3, rung_num=5, rung_den=2), 0)

    def test_gen_errors(self):
        with pytest.raises(ValueError):
            gen_two_connected(2, 0)


class TestCorpusCensus:
    def test_skips_non_two_connected(self):
        lines = [encode_graph6(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))]
        recs = list(verify_theorem_on_corpus(lines, 3))
        assert recs[0]["skipped"] == "not 2-connected"

    def test_empty_corpus(self):
        assert list(verify_theorem_on_corpus([], 3)) == []
        summary = summarize_census([])
        assert summary["total"] == 0 and summary["agreement_rate"] is None

    def test_small_census(self):
        lines = [
            encode_graph6(cycle_graph(5)),
            encode_graph6(complete_graph(4)),
            encode_graph6(complete_bipartite(2, 3)),
        ]
        recs = list(verify_theorem_on_corpus(lines, 3))
        assert all(r["oracle_any"] for r in recs)
        assert all(r["agreement"] for r in recs)
        summary = summarize_census(recs)
        assert summary["agreement_rate"] == 1.0
        assert summary["min_order_all_contain"] == 4

    def test_census_record_sound(self):
        rec = census_record(0, encode_graph6(cycle_graph(6)), 4)
        assert rec["pipeline_kind"] in (None, "clique", "theta", "theta_plus", "clean_ladder")
        assert rec["oracle"]["clean_ladder"]
