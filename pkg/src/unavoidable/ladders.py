"""The two-railed ladder state shared by the builder and cleaner stages.

A messy ladder is a triple (L, X, Y): two disjoint induced paths X and Y
(the rails, each rooted at its initial vertex), an edge sigma between
the initial vertices, an edge tau between the terminal vertices, and a
ladder graph L whose vertices all lie on the rails.  Edges of L on
neither rail are rungs.  At most one rail may be trivial.

Here a ladder keeps a reference to its host graph and stores the rails
as vertex sequences in host identifiers; the ladder graph L is the host
subgraph induced by the rail vertices.  Resolution and sub-ladder
operations return new values; nothing is mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, induced_subgraph

__all__ = ["MessyLadder"]


@dataclass(frozen=True)
class MessyLadder:
    graph: Graph  # host graph; the ladder is induced inside it
    rail_x: tuple[int, ...]
    rail_y: tuple[int, ...]

    def __post_init__(self):
        if not self.rail_x or not self.rail_y:
            raise ValueError("both rails must be nonempty")
        object.__setattr__(self, "rail_x", tuple(self.rail_x))
        object.__setattr__(self, "rail_y", tuple(self.rail_y))

    @property
    def order(self) -> int:
        return len(self.rail_x) + len(self.rail_y)

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.rail_x) | frozenset(self.rail_y)

    @cached_property
    def pos_x(self) -> dict:
        return {v: i for i, v in enumerate(self.rail_x)}

    @cached_property
    def pos_y(self) -> dict:
        return {v: i for i, v in enumerate(self.rail_y)}

    @property
    def sigma(self) -> tuple[int, int]:
        return (self.rail_x[0], self.rail_y[0])

    @property
    def tau(self) -> tuple[int, int]:
        return (self.rail_x[-1], self.rail_y[-1])

    @cached_property
    def rungs(self) -> tuple[tuple[int, int], ...]:
        """All ladder edges joining the rails, as (x_end, y_end) pairs.

        sigma and tau are rungs too (they lie on neither rail).  Sorted
        by (x position, y position).
        """
        out = []
        ys = set(self.rail_y)
        for x in self.rail_x:
            for w in self.graph.adj[x]:
                if w in ys:
                    out.append((x, w))
        out.sort(key=lambda r: (self.pos_x[r[0]], self.pos_y[r[1]]))
        return tuple(out)

    def ladder_graph(self) -> tuple[Graph, tuple[int, ...]]:
        """The induced ladder graph L with its host-vertex map."""
        return induced_subgraph(self.graph, self.vertex_set)

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"MessyLadder(order={self.order}, |X|={len(self.rail_x)}, |Y|={len(self.rail_y)})"
