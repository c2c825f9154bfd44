"""From a long induced path to a messy ladder.

Pieces: the bridge decomposition of an induced path, interleaved bridge
chains, the wide-bridge / long-chain dichotomy, rail assembly from
either outcome, and the clique / two-hub / long-induced-path split that
feeds the whole route.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .certificates import (
    Certificate,
    clique_certificate,
    independent_set_certificate,
    theta_certificate,
    verify_certificate,
    verify_messy_ladder,
)
from .errors import ExtractionFailure
from .graphs import (
    Graph,
    Path,
    components,
    find_induced_path_of_order,
    induced_subgraph,
    is_induced_path,
    longest_induced_path,
    mask_vertices,
    pivot_ramsey,
    shortest_path,
)
from .ladders import MessyLadder

__all__ = [
    "Bridge",
    "BridgeChain",
    "WideBridgeOutcome",
    "ChainOutcome",
    "compute_bridges",
    "is_valid_chain",
    "find_chain_or_wide_bridge",
    "build_messy_ladder",
    "ramsey_upper",
    "ramsey_upper2",
    "ramsey_extract",
    "grs_split",
    "GrsOutcome",
    "long_path_to_messy",
    "LongPathResult",
    "f_bridges",
]


def f_bridges(r: int) -> int:
    """Induced-path order that forces a wide bridge or a long chain:
    (r-2) + (r-4)^2 + 1.  The same number guarantees a messy ladder of
    order r, so the ladder-assembly stage reuses it."""
    if r <= 3:
        raise ValueError("r must exceed 3")
    return (r - 2) + (r - 4) * (r - 4) + 1


@dataclass(frozen=True)
class Bridge:
    """A bridge of an induced path P inside its host graph.

    ``span`` holds positions on P of the leftmost and rightmost
    attachment.  P is induced, so degenerate (chord) bridges cannot
    occur; the kind field exists for completeness of the data model.
    """

    kind: str  # 'proper' or 'degenerate'
    interior: frozenset
    attachments: frozenset
    span: tuple[int, int]

    @property
    def span_order(self) -> int:
        return self.span[1] - self.span[0] + 1


@dataclass(frozen=True)
class BridgeChain:
    bridges: tuple[Bridge, ...]

    @property
    def rank(self) -> int:
        return len(self.bridges)

    @property
    def span(self) -> tuple[int, int]:
        return (self.bridges[0].span[0], self.bridges[-1].span[1])


def compute_bridges(G: Graph, P: Path) -> list[Bridge]:
    """Bridges of the induced path P: one per component of G - V(P),
    with its attachment vertices and span positions.  Every edge off P
    belongs to exactly one bridge."""
    seq = tuple(P.vertices)
    if not is_induced_path(G, seq):
        raise ValueError("P must be an induced path of G")
    pos = {v: i for i, v in enumerate(seq)}
    rest = [v for v in range(G.n) if v not in pos]
    out = []
    for comp in components(G, rest):
        attach = set()
        for w in comp:
            for z in G.adj[w]:
                if z in pos:
                    attach.add(z)
        positions = sorted(pos[a] for a in attach)
        if not positions:
            continue  # component with no edge to P: irrelevant to the path
        out.append(
            Bridge(
                kind="proper",
                interior=comp,
                attachments=frozenset(attach),
                span=(positions[0], positions[-1]),
            )
        )
    out.sort(key=lambda b: (b.span, min(b.interior)))
    return out


def is_valid_chain(chain: BridgeChain, P: Path) -> bool:
    """Positional interleaving check: the chain starts at the path's
    first vertex, consecutive spans overlap strictly, spans two apart
    are disjoint (sharing an endpoint allowed), and span ends strictly
    increase."""
    bs = chain.bridges
    if not bs:
        return False
    lo = [b.span[0] for b in bs]
    hi = [b.span[1] for b in bs]
    k = len(bs)
    if lo[0] != 0:
        return False
    if hi[-1] > len(P.vertices) - 1:
        return False
    for i in range(k - 1):
        if not (lo[i] < lo[i + 1] < hi[i] < hi[i + 1]):
            return False
    for i in range(k - 2):
        if not (hi[i] <= lo[i + 2]):
            return False
    return True


@dataclass(frozen=True)
class WideBridgeOutcome:
    bridge: Bridge
    target: int
    meets_target: bool


@dataclass(frozen=True)
class ChainOutcome:
    chain: BridgeChain
    target: int
    meets_target: bool


def find_chain_or_wide_bridge(G: Graph, P: Path, r: int):
    """A bridge with span order >= r-1, or a bridge chain of rank >= r-2.

    The chain is grown greedily from the path's first vertex: start with
    the bridge attached there whose span reaches furthest, then
    repeatedly take a bridge straddling the current end, truncating back
    to the earliest prefix it can legally extend.  Every step strictly
    advances the span end, so the loop terminates; in the guarantee
    regime (|P| >= f_bridges(r), host 2-connected) it cannot stop before
    rank r-2.  Below the threshold the best verified outcome is
    returned with meets_target=False.
    """
    if r <= 3:
        raise ValueError("r must exceed 3")
    bridges = compute_bridges(G, P)
    if not bridges:
        raise ExtractionFailure("bridges", "induced path has no bridges")

    wide = max(bridges, key=lambda b: (b.span_order, -b.span[0], -min(b.interior)))
    if wide.span_order >= r - 1:
        return WideBridgeOutcome(wide, r, True)

    starters = [b for b in bridges if b.span[0] == 0]
    chain: list[Bridge] = []
    if starters:
        first = max(starters, key=lambda b: (b.span[1], -min(b.interior)))
        chain = [first]
        while True:
            cur_hi = chain[-1].span[1]
            straddlers = [b for b in bridges if b.span[0] < cur_hi < b.span[1]]
            if not straddlers:
                break
            nxt = max(straddlers, key=lambda b: (b.span[1], -b.span[0], -min(b.interior)))
            cut = next(i for i, b in enumerate(chain) if nxt.span[0] < b.span[1])
            chain = chain[: cut + 1] + [nxt]
        assert is_valid_chain(BridgeChain(tuple(chain)), P)

    if chain and len(chain) >= r - 2:
        return ChainOutcome(BridgeChain(tuple(chain)), r, True)

    # neither outcome met its bound: pick whichever promises the larger
    # ladder (a wide bridge of span s yields order >= s+1, a chain of
    # rank k yields order >= k+2)
    wide_score = wide.span_order + 1 if wide.span_order >= 3 else 0
    chain_score = len(chain) + 2 if len(chain) >= 2 else 0
    if wide_score == 0 and chain_score == 0:
        raise ExtractionFailure(
            "bridges", f"no usable bridge structure (best span {wide.span_order}, chain rank {len(chain)})"
        )
    if wide_score >= chain_score:
        return WideBridgeOutcome(wide, r, False)
    return ChainOutcome(BridgeChain(tuple(chain)), r, False)


def _bridge_route(G: Graph, bridge: Bridge, a: int, b: int) -> tuple[int, ...]:
    """Shortest a-b path through the bridge interior only.

    Confining the search to interior plus the two endpoints keeps the
    route off every other path vertex, and shortest routes are
    chordless, so the result is induced in the host.
    """
    pool = sorted(bridge.interior | {a, b})
    index = {w: i for i, w in enumerate(pool)}
    edges = set()
    for w in bridge.interior:
        for z in G.adj[w]:
            if z in index and (z in bridge.interior or z in (a, b)):
                i, j = index[w], index[z]
                edges.add((i, j) if i < j else (j, i))
    sub = Graph.from_edges(len(pool), edges)
    p = shortest_path(sub, index[a], index[b])
    return tuple(pool[i] for i in p.vertices)


def build_messy_ladder(G: Graph, P: Path, outcome) -> MessyLadder:
    """Assemble the rails from a wide bridge or a bridge chain.

    Wide bridge with span P[u', v']: one rail is the open path segment
    P(u', v'), the other an induced u'-v' route through the bridge.

    Chain B_1..B_k: route Q_i through each bridge; odd-indexed routes
    (joined by the path segments between consecutive odd spans) form one
    rail, even-indexed routes (prefixed by the segment following the
    first vertex) form the other; the segments interior to consecutive
    span overlaps are dropped.  Each bridge contributes at least one
    interior vertex, so a chain of rank k yields order >= k+2.
    """
    seq = tuple(P.vertices)

    if isinstance(outcome, WideBridgeOutcome):
        br = outcome.bridge
        lo, hi = br.span
        if hi - lo < 2:
            raise ExtractionFailure("ladder_assembly", "wide bridge span too short for rails")
        u1, v1 = seq[lo], seq[hi]
        route = _bridge_route(G, br, u1, v1)
        ladder = MessyLadder(G, rail_x=seq[lo + 1 : hi], rail_y=route)
        if not verify_messy_ladder(G, ladder.rail_x, ladder.rail_y):
            raise AssertionError("wide-bridge ladder failed verification")
        return ladder

    chain = outcome.chain.bridges
    if len(chain) == 1:
        return build_messy_ladder(G, P, WideBridgeOutcome(chain[0], outcome.target, False))
    lo = [b.span[0] for b in chain]
    hi = [b.span[1] for b in chain]
    k = len(chain)
    routes = [_bridge_route(G, b, seq[b.span[0]], seq[b.span[1]]) for b in chain]

    def extend(rail: list, piece) -> None:
        piece = list(piece)
        if rail and piece and piece[0] == rail[-1]:
            piece = piece[1:]
        rail.extend(piece)

    rail_x: list[int] = []
    extend(rail_x, routes[0])
    for j in range(2, k, 2):  # bridges B_3, B_5, ... (odd 1-based)
        extend(rail_x, seq[hi[j - 2] + 1 : lo[j]])
        extend(rail_x, routes[j])
    rail_y: list[int] = list(seq[1 : lo[1]])
    extend(rail_y, routes[1])
    for j in range(3, k, 2):  # bridges B_4, B_6, ...
        extend(rail_y, seq[hi[j - 2] + 1 : lo[j]])
        extend(rail_y, routes[j])
    tail = seq[hi[k - 2] + 1 : hi[k - 1]]
    if k % 2 == 0:
        extend(rail_x, tail)
    else:
        extend(rail_y, tail)

    ladder = MessyLadder(G, rail_x=tuple(rail_x), rail_y=tuple(rail_y))
    if not verify_messy_ladder(G, ladder.rail_x, ladder.rail_y):
        raise AssertionError("chain ladder failed verification")
    return ladder


def ramsey_upper2(a: int, b: int) -> int:
    """Binomial upper bound C(a+b-2, a-1) on the two-colour threshold."""
    if a < 1 or b < 1:
        raise ValueError("both parts must be >= 1")
    return comb(a + b - 2, a - 1)


def ramsey_upper(q: int) -> int:
    return ramsey_upper2(q, q)


def ramsey_extract(G: Graph, q: int, pool=None) -> Certificate:
    """Verified clique or independent set of size q.

    Guaranteed when the pool has at least ramsey_upper(q) vertices;
    below that the same recursion runs best-effort and a structured
    failure carries the best sets found.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    pool_mask = (1 << G.n) - 1 if pool is None else sum(1 << v for v in pool)
    clique, indep = pivot_ramsey(G.masks, pool_mask)
    if clique.bit_count() >= q:
        return clique_certificate(mask_vertices(clique)[:q], q)
    if indep.bit_count() >= q:
        return independent_set_certificate(mask_vertices(indep)[:q], q)
    raise ExtractionFailure(
        "ramsey",
        f"no clique or independent set of size {q} found",
        partials={
            "clique": mask_vertices(clique),
            "independent_set": mask_vertices(indep),
        },
    )


@dataclass(frozen=True)
class GrsOutcome:
    """Exactly one field set: a certificate (clique or theta kind) or an
    induced path in host identifiers."""

    certificate: Optional[Certificate] = None
    path: Optional[Path] = None


def grs_split(G: Graph, P: Path, p: int, r: int, budget: Optional[int] = None) -> GrsOutcome:
    """Restrict to the path's vertices and split four ways.

    On H, the subgraph induced by V(P): first search for an induced path
    of order r (the branch the ladder route consumes); otherwise find a
    vertex pair with many common neighbours and run the pivot recursion
    on the common-neighbour side B.  A clique there extends by the pair
    itself (both pair vertices see all of B) to a clique of order p; an
    independent set I of order p makes the pair plus I an induced
    two-hub structure, with or without the hub edge.
    """
    if p <= 2:
        raise ValueError("p must exceed 2")
    H, vmap = induced_subgraph(G, set(P.vertices))
    ipath = find_induced_path_of_order(H, r, budget)
    if ipath is not None:
        lifted = tuple(vmap[i] for i in ipath.vertices)
        return GrsOutcome(path=Path(lifted, induced=True))

    masks = H.masks
    pairs = []
    for a in range(H.n):
        for b in range(a + 1, H.n):
            cnt = (masks[a] & masks[b]).bit_count()
            if cnt >= max(1, p - 2):
                pairs.append((-cnt, a, b))
    pairs.sort()
    for negcnt, a, b in pairs:
        common = masks[a] & masks[b]
        clique, indep = pivot_ramsey(masks, common)
        ext = clique | (1 << a) | ((1 << b) if H.has_edge(a, b) else 0)
        if ext.bit_count() >= p:
            cert = clique_certificate(sorted(vmap[i] for i in mask_vertices(ext)[:p]), p)
            if verify_certificate(G, cert):
                return GrsOutcome(certificate=cert)
        if indep.bit_count() >= p and (-negcnt) >= p:
            chosen = mask_vertices(indep)[:p]
            hu, hv = vmap[a], vmap[b]
            paths = [(hu, vmap[w], hv) for w in chosen]
            cert = theta_certificate(hu, hv, paths, plus_edge=G.has_edge(hu, hv), parameter=p)
            if verify_certificate(G, cert):
                return GrsOutcome(certificate=cert)

    best, exhausted = longest_induced_path(H, budget)
    lifted = tuple(vmap[i] for i in best.vertices)
    raise ExtractionFailure(
        "grs_split",
        f"no induced path of order {r}, clique, or two-hub structure of order {p}",
        partials={"best_path": Path(lifted, induced=True), "exhaustive": exhausted},
    )


@dataclass(frozen=True)
class LongPathResult:
    """Either a terminal certificate or a messy ladder to be cleaned."""

    certificate: Optional[Certificate] = None
    ladder: Optional[MessyLadder] = None
    meets_target: bool = False


def long_path_to_messy(
    G: Graph,
    p: int,
    q: int,
    path: Optional[Path] = None,
    budget: Optional[int] = None,
) -> LongPathResult:
    """Clique of order p, two-hub structure with p branch paths, or a
    messy ladder of order >= q (best effort below the thresholds).

    The supplied path seeds the split; when absent, a deep branch of a
    depth-first spanning tree stands in.
    """
    from .trees import deepest_branch, normal_spanning_tree  # local: avoids cycle

    if path is None:
        path = deepest_branch(normal_spanning_tree(G, 0))
    target_path_order = f_bridges(max(q, 4))
    try:
        split = grs_split(G, path, p, target_path_order, budget)
    except ExtractionFailure as exc:
        fallback = exc.partials.get("best_path")
        if fallback is not None and fallback.order >= 4:
            split = GrsOutcome(path=fallback)
        else:
            # paths of the host may be too short to expose the structure
            # inside their own vertex set; hunt a hub pair globally
            from .short_path import _theta_from_hub_pair

            cert = _theta_from_hub_pair(G, p)
            if cert is None:
                raise
            split = GrsOutcome(certificate=cert)
    if split.certificate is not None:
        return LongPathResult(certificate=split.certificate, meets_target=True)
    ipath = split.path
    outcome = find_chain_or_wide_bridge(G, ipath, max(q, 4))
    ladder = build_messy_ladder(G, ipath, outcome)
    return LongPathResult(ladder=ladder, meets_target=ladder.order >= q)
