import pytest

from unavoidable.certificates import verify_certificate
from unavoidable.errors import ExtractionFailure
from unavoidable.graphs import Graph, complete_bipartite, cycle_graph
from unavoidable.oracle import _theta_witness
from unavoidable.short_path import extract_short_path_structure, f_shortp


class TestThreshold:
    def test_exact_values(self):
        assert f_shortp(3, 3) == 8
        assert f_shortp(2, 5) == 2
        assert f_shortp(3, 4) == 14

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            f_shortp(1, 3)
        with pytest.raises(ValueError):
            f_shortp(3, 1)


class TestExtraction:
    def test_k23_best_effort_theta(self):
        # below the order-8 guarantee, best effort still finds the theta
        G = complete_bipartite(2, 3)
        out = extract_short_path_structure(G, 3, 3)
        assert out.theta is not None and out.theta.kind == "theta"
        assert verify_certificate(G, out.theta)
        assert _theta_witness(G, 3, plus=False) is not None  # family really present

    def test_tall_tree_path(self):
        # a long cycle has no theta, so the deep tree branch is the outcome
        G = cycle_graph(8)
        out = extract_short_path_structure(G, 4, 3)
        assert out.long_path is not None
        assert out.long_path.order >= 5
        verts = out.long_path.vertices
        assert all(G.has_edge(a, b) for a, b in zip(verts, verts[1:]))

    def test_k27_plus_edge(self):
        G = Graph.from_edges(9, list(complete_bipartite(2, 7).edges) + [(0, 1)])
        out = extract_short_path_structure(G, 3, 5)
        cert = out.theta
        assert cert is not None and cert.kind == "theta_plus"
        assert len(cert.paths) == 5
        assert verify_certificate(G, cert)
        assert _theta_witness(G, 5, plus=True) is not None

    def test_internal_disjointness(self):
        G = complete_bipartite(2, 7)
        cert = extract_short_path_structure(G, 3, 4).theta
        internals = [set(p[1:-1]) for p in cert.paths]
        for i, a in enumerate(internals):
            for b in internals[i + 1 :]:
                assert not (a & b)

    def test_failure_is_structured(self):
        # triangle: no theta with two branch paths, no path of order 4
        with pytest.raises(ExtractionFailure) as exc:
            extract_short_path_structure(cycle_graph(3), 3, 2)
        assert exc.value.partials["tree_path"].order == 3

    def test_desk_scale_completeness(self, two_connected_upto8):
        # q=3, r=2: guarantee order is 4, so no failures at or above it
        for G in two_connected_upto8:
            if G.n < f_shortp(3, 2):
                continue
            out = extract_short_path_structure(G, 3, 2)
            if out.theta is not None:
                assert verify_certificate(G, out.theta)
            else:
                assert out.long_path.order >= 4
