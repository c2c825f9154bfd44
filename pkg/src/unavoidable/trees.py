"""Rooted spanning trees with the ancestor order, built depth-first.

A spanning tree is *normal* when every host-graph edge joins two
vertices that are comparable in the tree order (one lies on the root
path of the other).  Depth-first trees of undirected graphs have this
property, which is what :func:`normal_spanning_tree` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, Path

__all__ = [
    "RootedTree",
    "normal_spanning_tree",
    "tree_leq",
    "tree_segment",
    "children",
    "descendants",
    "height",
    "deepest_branch",
    "is_normal",
]


@dataclass(frozen=True)
class RootedTree:
    """Spanning tree addressed by parent pointers; parent[root] is None."""

    root: int
    parent: tuple  # parent[v] is None for the root
    depth: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @cached_property
    def children_map(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in range(self.n)]
        for v, p in enumerate(self.parent):
            if p is not None:
                kids[p].append(v)
        return tuple(tuple(sorted(k)) for k in kids)

    def root_path(self, v: int) -> tuple[int, ...]:
        """Vertices from the root down to v, inclusive."""
        seq = [v]
        while self.parent[seq[-1]] is not None:
            seq.append(self.parent[seq[-1]])
        return tuple(reversed(seq))


def normal_spanning_tree(G: Graph, root: int = 0) -> RootedTree:
    """Depth-first spanning tree with lexicographic neighbour order.

    Deterministic for fixed (G, root); raises if G is disconnected.
    """
    if not (0 <= root < G.n):
        raise ValueError("root outside vertex range")
    parent: list = [None] * G.n
    depth = [-1] * G.n
    depth[root] = 0
    # entries (vertex, iterator over sorted neighbours) emulate recursion
    stack = [(root, iter(G.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if depth[w] < 0:
                parent[w] = v
                depth[w] = depth[v] + 1
                stack.append((w, iter(G.neighbors(w))))
                advanced = True
                break
        if not advanced:
            stack.pop()
    if any(d < 0 for d in depth):
        raise ValueError("graph is disconnected")
    return RootedTree(root, tuple(parent), tuple(depth))


def tree_leq(T: RootedTree, u: int, v: int) -> bool:
    """True iff u lies on the root-to-v path (reflexive)."""
    while v is not None:
        if v == u:
            return True
        v = T.parent[v]
    return False


def tree_segment(T: RootedTree, a: int, b: int, openness: str = "closed") -> frozenset:
    """Vertices v with a <= v <= b in tree order; empty when a is not below b.

    openness: 'closed' [a,b], 'open' (a,b), 'left_open' (a,b],
    'right_open' [a,b).
    """
    if openness not in ("closed", "open", "left_open", "right_open"):
        raise ValueError(f"unknown openness {openness!r}")
    if not tree_leq(T, a, b):
        return frozenset()
    seq = []
    v = b
    while v != a:
        seq.append(v)
        v = T.parent[v]
    seq.append(a)
    if openness in ("open", "left_open"):
        seq.remove(a)
    if openness in ("open", "right_open") and b in seq:
        seq.remove(b)
    return frozenset(seq)


def children(T: RootedTree, v: int) -> frozenset:
    return frozenset(T.children_map[v])


def descendants(T: RootedTree, v: int) -> frozenset:
    out = set()
    stack = list(T.children_map[v])
    while stack:
        w = stack.pop()
        out.add(w)
        stack.extend(T.children_map[w])
    return frozenset(out)


def height(T: RootedTree) -> int:
    return max(T.depth)


def deepest_branch(T: RootedTree) -> Path:
    """Root-to-deepest-leaf path; ties broken by smallest leaf identifier."""
    h = height(T)
    leaf = min(v for v in range(T.n) if T.depth[v] == h)
    return Path(T.root_path(leaf), induced=False)


def is_normal(G: Graph, T: RootedTree) -> bool:
    return all(tree_leq(T, u, v) or tree_leq(T, v, u) for u, v in G.edges)
