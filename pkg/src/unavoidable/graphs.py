"""Immutable simple undirected graphs and the path-search primitives.

Vertices are dense integers 0..n-1.  Every operation is a pure function
of its inputs; graphs and paths are immutable and safe to share across
threads.  Tie-breaking is lexicographic on vertex identifiers throughout
(search frontiers expand neighbours in increasing order), so every
search result is deterministic and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

__all__ = [
    "Graph",
    "Path",
    "induced_subgraph",
    "is_connected",
    "is_two_connected",
    "shortest_path",
    "longest_induced_path",
    "find_induced_path_of_order",
    "find_k2s_subgraph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite",
]


def _canonical_edges(edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex set {0, ..., n-1}."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{self.n - 1}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(n, _canonical_edges(edges))

    @cached_property
    def adj(self) -> tuple[frozenset, ...]:
        nbr: list[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return tuple(frozenset(s) for s in nbr)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Adjacency as bitmasks; masks[v] has bit u set iff uv is an edge."""
        m = [0] * self.n
        for u, v in self.edges:
            m[u] |= 1 << v
            m[v] |= 1 << u
        return tuple(m)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges if u < v else (v, u) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Path:
    """A vertex sequence with consecutive adjacency in its host graph.

    ``induced`` records whether the sequence was verified chordless in
    the host; verifiers recompute it rather than trusting the flag.
    """

    vertices: tuple[int, ...]
    induced: bool = False

    @property
    def order(self) -> int:
        return len(self.vertices)

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)), self.induced)


def is_path(G: Graph, seq) -> bool:
    seq = tuple(seq)
    if len(seq) == 0 or len(set(seq)) != len(seq):
        return False
    if any(not (0 <= v < G.n) for v in seq):
        return False
    return all(G.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_induced_path(G: Graph, seq, exempt: Optional[tuple[int, int]] = None) -> bool:
    """True iff seq is a chordless path of G.

    ``exempt`` names one vertex pair whose adjacency is ignored; theta
    verification uses it for the pair of branch vertices.
    """
    seq = tuple(seq)
    if not is_path(G, seq):
        return False
    k = len(seq)
    ex = None
    if exempt is not None:
        ex = (exempt[0], exempt[1]) if exempt[0] < exempt[1] else (exempt[1], exempt[0])
    for i in range(k):
        for j in range(i + 2, k):
            a, b = seq[i], seq[j]
            pair = (a, b) if a < b else (b, a)
            if pair == ex:
                continue
            if pair in G.edges:
                return False
    return True


def induced_subgraph(G: Graph, S) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by S, re-indexed densely.

    Returns (H, vmap) where vmap[i] is the original identifier of H's
    vertex i; the map is ascending so certificates can be lifted back to
    the host graph.
    """
    S = sorted(set(S))
    for v in S:
        if not (0 <= v < G.n):
            raise ValueError(f"unknown vertex identifier {v}")
    index = {v: i for i, v in enumerate(S)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return Graph.from_edges(len(S), edges), tuple(S)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return False
    seen = 1
    stack = [0]
    masks = G.masks
    while stack:
        v = stack.pop()
        rest = masks[v] & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            seen |= low
            stack.append(low.bit_length() - 1)
    return seen == (1 << G.n) - 1


def _connected_within(masks, allowed: int) -> bool:
    """Connectivity of the subgraph induced by the bitmask ``allowed``."""
    if allowed == 0:
        return False
    start = (allowed & -allowed).bit_length() - 1
    seen = 1 << start
    stack = [start]
    while stack:
        v = stack.pop()
        rest = masks[v] & allowed & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            seen |= low
            stack.append(low.bit_length() - 1)
    return seen == allowed


def is_two_connected(G: Graph) -> bool:
    """True iff G has >= 3 vertices, is connected, and has no cut-vertex."""
    if G.n < 3 or not is_connected(G):
        return False
    full = (1 << G.n) - 1
    masks = G.masks
    for v in range(G.n):
        if not _connected_within(masks, full & ~(1 << v)):
            return False
    return True


def components(G: Graph, allowed: Optional[Iterable[int]] = None) -> list[frozenset]:
    """Connected components, restricted to ``allowed`` vertices if given."""
    pool = set(G.vertices()) if allowed is None else set(allowed)
    out = []
    while pool:
        start = min(pool)
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in G.adj[v]:
                if w in pool and w not in comp:
                    comp.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
        pool -= comp
    return sorted(out, key=min)


def shortest_path(G: Graph, u: int, v: int) -> Path:
    """Lexicographic breadth-first shortest u-v path.

    Shortest paths are chordless, so the result always carries
    induced=True.
    """
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise ValueError("endpoint outside vertex range")
    parent = {u: None}
    frontier = [u]
    while frontier and v not in parent:
        nxt = []
        for x in frontier:
            for y in G.neighbors(x):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    if v not in parent:
        raise ValueError(f"vertices {u} and {v} are disconnected")
    seq = [v]
    while parent[seq[-1]] is not None:
        seq.append(parent[seq[-1]])
    return Path(tuple(reversed(seq)), induced=True)


def _induced_path_dfs(G: Graph, target: Optional[int], budget: Optional[int]):
    """Shared engine: depth-first enumeration of induced paths.

    Extends sequences at the tail only; a vertex may join if it is
    adjacent to the tail and non-adjacent to every earlier vertex.
    Returns (best sequence, exhausted flag).  If ``target`` is given the
    search stops at the first sequence of that order.
    """
    if G.n == 0:
        raise ValueError("graph is empty")
    if budget is not None and budget <= 0:
        raise ValueError("expansion budget must be positive")
    masks = G.masks
    best: tuple[int, ...] = (0,)
    spent = 0
    exhausted = True
    for start in range(G.n):
        # stack entries: (sequence, forbidden mask = seq plus nbrs of seq[:-1])
        stack = [((start,), 1 << start)]
        while stack:
            seq, blocked = stack.pop()
            if budget is not None:
                spent += 1
                if spent > budget:
                    return best, False
            if len(seq) > len(best):
                best = seq
                if target is not None and len(best) >= target:
                    return best, False
            tail = seq[-1]
            ext = masks[tail] & ~blocked
            picks = []
            while ext:
                low = ext & -ext
                ext ^= low
                picks.append(low.bit_length() - 1)
            # push in reverse so the smallest identifier is explored first
            for w in reversed(picks):
                stack.append((seq + (w,), blocked | (1 << w) | masks[tail]))
    return best, exhausted


def longest_induced_path(G: Graph, budget: Optional[int] = None) -> tuple[Path, bool]:
    """Longest induced path by exhaustive backtracking.

    ``budget`` caps node expansions; the second component reports
    whether the search ran to completion (maximum order certified) or
    stopped early (best found so far).
    """
    seq, exhausted = _induced_path_dfs(G, None, budget)
    return Path(seq, induced=True), exhausted


def find_induced_path_of_order(G: Graph, target: int, budget: Optional[int] = None) -> Optional[Path]:
    """First induced path of order >= target in deterministic DFS order."""
    seq, _ = _induced_path_dfs(G, target, budget)
    if len(seq) >= target:
        return Path(seq[:], induced=True)
    return None


def find_k2s_subgraph(G: Graph, s: int):
    """Vertex pair with >= s common neighbours, or None.

    Returns the lexicographically least such pair (a, b) with its s
    least common neighbours.  This is subgraph containment: the a-b edge
    and edges inside the witness set are permitted.
    """
    if s < 1:
        raise ValueError("s must be >= 1")
    masks = G.masks
    for a in range(G.n):
        for b in range(a + 1, G.n):
            common = masks[a] & masks[b]
            if common.bit_count() >= s:
                picks = []
                rest = common
                while rest and len(picks) < s:
                    low = rest & -rest
                    rest ^= low
                    picks.append(low.bit_length() - 1)
                return (a, b), tuple(picks)
    return None


def pivot_ramsey(masks, pool: int) -> tuple[int, int]:
    """(clique mask, independent-set mask) by pivot recursion.

    The pivot is the least vertex of the pool; the clique side recurses
    into its neighbours, the independent side into its non-neighbours,
    and each side keeps the larger result.  A pool of at least
    C(a+b-2, a-1) vertices is guaranteed to yield a clique of size a or
    an independent set of size b.
    """
    if pool == 0:
        return 0, 0
    vbit = pool & -pool
    v = vbit.bit_length() - 1
    nbrs = masks[v] & pool
    others = pool & ~nbrs & ~vbit
    c1, i1 = pivot_ramsey(masks, nbrs)
    c2, i2 = pivot_ramsey(masks, others)
    c1 |= vbit
    i2 |= vbit
    clique = c1 if c1.bit_count() >= c2.bit_count() else c2
    indep = i2 if i2.bit_count() >= i1.bit_count() else i1
    return clique, indep


def mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        mask ^= low
        out.append(low.bit_length() - 1)
    return tuple(out)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs >= 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])
