"""Path-or-theta extraction for graphs without a long path.

Given targets q and r, a 2-connected graph of order at least
f_shortp(q, r) yields either a path of order q+1 (a deep branch of a
normal spanning tree) or an induced subdivided-two-hub structure with r
branch paths.  Below the threshold the same procedure runs best-effort
and reports a structured failure when neither outcome verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .certificates import Certificate, theta_certificate, verify_theta
from .errors import ExtractionFailure
from .graphs import Graph, Path, shortest_path
from .trees import RootedTree, deepest_branch, descendants, height, normal_spanning_tree

__all__ = ["ShortPathOutcome", "extract_short_path_structure", "f_shortp"]


def f_shortp(q: int, r: int) -> int:
    """Order guarantee for the path-or-theta dichotomy.

    Equals 2 + (d-1) + (d-1)^2 + ... + (d-1)^(q-1) with
    d = 1 + (q-2)(r-1).  Exact integer arithmetic.
    """
    if q <= 1 or r <= 1:
        raise ValueError("q and r must exceed 1")
    d = 1 + (q - 2) * (r - 1)
    b = d - 1
    if b == 0:
        total = 0
    elif b == 1:
        total = q - 1
    else:
        total = (b**q - b) // (b - 1)
    return 2 + total


@dataclass(frozen=True)
class ShortPathOutcome:
    """Exactly one of the two fields is populated."""

    long_path: Optional[Path] = None
    theta: Optional[Certificate] = None

    def __post_init__(self):
        if (self.long_path is None) == (self.theta is None):
            raise ValueError("outcome must hold exactly one variant")


def _theta_from_branch_vertex(G: Graph, T: RootedTree, v: int, r: int) -> Optional[Certificate]:
    """Try to assemble r internally-disjoint hub paths below v.

    R is the root path to v.  Each child subtree of v spans a component
    of G - V(R); by normality its outside edges land on R.  A vertex u
    on R - v that receives edges from >= r distinct subtrees closes the
    structure: the subtree components, each extended by its edges to
    {u, v}, contain shortest u-v paths whose union is induced.
    """
    R = T.root_path(v)
    if len(R) < 2:
        return None
    r_minus_v = R[:-1]
    kids = T.children_map[v]
    if not kids:
        return None
    subtree_verts = []
    for c in kids:
        subtree_verts.append(frozenset({c} | descendants(T, c)))
    on_r = {u: i for i, u in enumerate(r_minus_v)}
    # reach[u] = subtree indices with an edge into u
    reach: dict[int, list[int]] = {u: [] for u in r_minus_v}
    for j, verts in enumerate(subtree_verts):
        hit = set()
        for w in verts:
            for z in G.adj[w]:
                if z in on_r:
                    hit.add(z)
        if not hit:
            # normality confines outside edges of the subtree to the root
            # path, so no edge into it means v is a cut-vertex
            raise ValueError(
                f"subtree under child {kids[j]} attaches only at {v}; host not 2-connected"
            )
        for z in hit:
            reach[z].append(j)
    for u in r_minus_v:  # root side first
        indices = reach[u]
        if len(indices) < r:
            continue
        chosen = sorted(indices)[:r]
        paths = []
        for j in chosen:
            verts = subtree_verts[j]
            pool = sorted(verts | {u, v})
            index = {w: i for i, w in enumerate(pool)}
            edges = set()
            for w in verts:
                for z in G.adj[w]:
                    if z in index and (z in verts or z in (u, v)):
                        a, b = index[w], index[z]
                        edges.add((a, b) if a < b else (b, a))
            sub = Graph.from_edges(len(pool), edges)
            p = shortest_path(sub, index[u], index[v])
            paths.append(tuple(pool[i] for i in p.vertices))
        cert = theta_certificate(u, v, paths, plus_edge=G.has_edge(u, v), parameter=r)
        if verify_theta(G, cert, r):
            return cert
    return None


def _theta_from_hub_pair(G: Graph, r: int) -> Optional[Certificate]:
    """Best-effort fallback: a vertex pair with r pairwise nonadjacent
    common neighbours is a theta whose branch paths all have one
    internal vertex.  Pairs are scanned by descending common-neighbour
    count."""
    from .graphs import mask_vertices, pivot_ramsey  # shared pivot helper

    masks = G.masks
    pairs = []
    for a in range(G.n):
        for b in range(a + 1, G.n):
            cnt = (masks[a] & masks[b]).bit_count()
            if cnt >= r:
                pairs.append((-cnt, a, b))
    pairs.sort()
    for _negcnt, a, b in pairs:
        _clique, indep = pivot_ramsey(masks, masks[a] & masks[b])
        if indep.bit_count() >= r:
            chosen = mask_vertices(indep)[:r]
            paths = [(a, w, b) for w in chosen]
            cert = theta_certificate(a, b, paths, plus_edge=G.has_edge(a, b), parameter=r)
            if verify_theta(G, cert, r):
                return cert
    return None


def extract_short_path_structure(G: Graph, q: int, r: int) -> ShortPathOutcome:
    """A verified theta with parameter r, or a path of order q+1.

    The constructive argument drives the search: on a normal spanning
    tree, a vertex with many children pigeonholes r subtree attachment
    edges onto one root-path vertex u, and shortest u-v routes through
    the subtree components assemble the theta.  Candidate branch
    vertices with >= d children (d = 1 + (q-2)(r-1)) are scanned first,
    smallest depth then identifier; below the guarantee threshold every
    branching vertex is tried, and a direct hub-pair search backs the
    tree up.  When no theta verifies and the tree has height >= q, its
    deepest branch is the path outcome; the theta is preferred whenever
    both exist.  Failures carry the deepest tree branch as a partial.
    """
    if q <= 1 or r <= 1:
        raise ValueError("q and r must exceed 1")
    T = normal_spanning_tree(G, 0)
    d = 1 + (q - 2) * (r - 1)
    order = sorted(range(G.n), key=lambda v: (T.depth[v], v))
    preferred = [v for v in order if len(T.children_map[v]) >= d]
    rest = [v for v in order if 0 < len(T.children_map[v]) < d]
    if G.n >= f_shortp(q, r) and height(T) < q and not preferred:
        # pigeonhole: a short tree on this many vertices must branch d ways
        raise AssertionError("guarantee-regime tree has no vertex with d children")
    for v in preferred + rest:
        cert = _theta_from_branch_vertex(G, T, v, r)
        if cert is not None:
            return ShortPathOutcome(theta=cert)
    cert = _theta_from_hub_pair(G, r)
    if cert is not None:
        return ShortPathOutcome(theta=cert)
    if height(T) >= q:
        return ShortPathOutcome(long_path=deepest_branch(T))
    raise ExtractionFailure(
        "short_path",
        f"no path of order {q + 1} and no theta with {r} branch paths found",
        partials={"tree_path": deepest_branch(T)},
    )
