#!/usr/bin/env python3
"""Regenerate the vendored graph6 corpora in tests/data/.

Outputs:
  allgraphs_upto7.g6      every graph on 1..7 vertices, one per iso class
  corpus_2conn_upto8.g6   every 2-connected graph on 3..8 vertices
  corpus_2conn_9.g6.gz    every 2-connected graph on 9 vertices

Method: the networkx graph atlas supplies all classes up to 7 vertices;
larger orders come from vertex augmentation (every graph on n vertices
is some (n-1)-vertex graph plus one vertex, and deleting any vertex of
a 2-connected graph leaves a connected one, so augmenting all connected
graphs suffices for the 2-connected corpus one order up).  Isomorphism
dedup buckets candidates by a colour-refinement invariant and settles
collisions with an exact backtracking check.  Class counts per order
are validated against the published values before anything is written.

Usage: python tools/make_corpus.py [--skip-n9]
"""

from __future__ import annotations

import argparse
import gzip
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from unavoidable.graphs import Graph  # noqa: E402
from unavoidable.io import encode_graph6  # noqa: E402

EXPECTED_ALL = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
EXPECTED_CONNECTED = {7: 853, 8: 11117}
EXPECTED_2CONN = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468, 8: 7123, 9: 194066}


def bits(mask):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1


def wl_colors(n, masks):
    colors = [masks[v].bit_count() for v in range(n)]
    for _ in range(n):
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in bits(masks[v]))))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return colors


def invariant_key(n, masks):
    full = (1 << n) - 1
    colors = wl_colors(n, masks)
    prof = []
    for v in range(n):
        nb = masks[v]
        tri = tuple(sorted((masks[w] & nb).bit_count() for w in bits(nb)))
        non = tuple(
            sorted((masks[w] & nb).bit_count() for w in bits(full & ~nb & ~(1 << v)))
        )
        prof.append((colors[v], tri, non))
    prof.sort()
    return (n, sum(m.bit_count() for m in masks) // 2, tuple(prof))


def isomorphic(n, m1, m2):
    c1, c2 = wl_colors(n, m1), wl_colors(n, m2)
    if sorted(c1) != sorted(c2):
        return False
    by_color2 = {}
    for w in range(n):
        by_color2.setdefault(c2[w], []).append(w)
    order = sorted(range(n), key=lambda v: (c1[v], v))
    mapping = [-1] * n
    mapped: list[int] = []

    def bt(i):
        if i == n:
            return True
        v = order[i]
        for w in by_color2.get(c1[v], ()):
            if w in mapping:
                continue
            if all(((m1[v] >> u) & 1) == ((m2[w] >> mapping[u]) & 1) for u in mapped):
                mapping[v] = w
                mapped.append(v)
                if bt(i + 1):
                    return True
                mapped.pop()
                mapping[v] = -1
        return False

    # mapping doubles as "used" check via `w in mapping`
    return bt(0)


def connected(n, masks):
    if n == 0:
        return False
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        rest = masks[v] & ~seen
        while rest:
            low = rest & -rest
            rest ^= low
            seen |= low
            stack.append(low.bit_length() - 1)
    return seen == (1 << n) - 1


def connected_within(masks, allowed):
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


def two_connected(n, masks):
    if n < 3 or not connected(n, masks):
        return False
    full = (1 << n) - 1
    for v in range(n):
        if not connected_within(masks, full & ~(1 << v)):
            return False
    return True


class Dedup:
    """Invariant-bucketed isomorphism classes."""

    def __init__(self, n):
        self.n = n
        self.buckets: dict = {}
        self.count = 0

    def add(self, masks) -> bool:
        key = invariant_key(self.n, masks)
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if isomorphic(self.n, masks, rep):
                return False
        bucket.append(masks)
        self.count += 1
        return True

    def all_masks(self):
        for bucket in self.buckets.values():
            yield from bucket


def masks_to_graph(n, masks) -> Graph:
    edges = [(u, v) for u in range(n) for v in bits(masks[u]) if u < v]
    return Graph.from_edges(n, edges)


def atlas_by_order():
    import networkx as nx

    out: dict[int, list] = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0:
            continue
        masks = [0] * n
        for u, v in g.edges():
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        out.setdefault(n, []).append(tuple(masks))
    for n, want in EXPECTED_ALL.items():
        got = len(out.get(n, []))
        if got != want:
            raise SystemExit(f"atlas count mismatch at n={n}: {got} != {want}")
    return out


def augment_all(parents, n_parent, keep):
    """All (parent + one vertex) graphs passing ``keep``, deduped."""
    dd = Dedup(n_parent + 1)
    newbit = 1 << n_parent
    for masks in parents:
        base = list(masks) + [0]
        for nb in range(1, 1 << n_parent):
            cand = base[:]
            cand[n_parent] = nb
            rest = nb
            while rest:
                low = rest & -rest
                rest ^= low
                cand[low.bit_length() - 1] |= newbit
            cand = tuple(cand)
            if keep(n_parent + 1, cand):
                dd.add(cand)
    return dd


def augment_two_connected_9(parents8, writer):
    """2-connected 9-vertex classes from connected 8-vertex parents.

    Neighbourhoods must cover every degree-1 parent vertex and have size
    >= 2, or the result has a vertex of degree < 2.
    """
    dd = Dedup(9)
    newbit = 1 << 8
    t0 = time.time()
    for idx, masks in enumerate(parents8):
        required = 0
        for v in range(8):
            if masks[v].bit_count() == 1:
                required |= 1 << v
        for nb in range(3, 256):
            if nb.bit_count() < 2 or (nb & required) != required:
                continue
            cand = list(masks) + [nb]
            rest = nb
            while rest:
                low = rest & -rest
                rest ^= low
                cand[low.bit_length() - 1] |= newbit
            cand = tuple(cand)
            if two_connected(9, cand):
                dd.add(cand)
        if (idx + 1) % 1000 == 0:
            print(
                f"  ... {idx + 1}/{len(parents8)} parents, {dd.count} classes, "
                f"{time.time() - t0:.0f}s",
                flush=True,
            )
    return dd


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--skip-n9", action="store_true", help="skip the 9-vertex corpus")
    args = ap.parse_args()
    data_dir = Path(__file__).resolve().parent.parent / "tests" / "data"
    data_dir.mkdir(parents=True, exist_ok=True)

    print("loading atlas ...", flush=True)
    atlas = atlas_by_order()

    with open(data_dir / "allgraphs_upto7.g6", "w") as fh:
        for n in sorted(atlas):
            for masks in atlas[n]:
                fh.write(encode_graph6(masks_to_graph(n, masks)) + "\n")
    print("wrote allgraphs_upto7.g6")

    print("augmenting to connected n=8 ...", flush=True)
    conn8 = augment_all(atlas[7], 7, keep=lambda n, m: connected(n, m))
    if conn8.count != EXPECTED_CONNECTED[8]:
        raise SystemExit(f"connected-8 count {conn8.count} != {EXPECTED_CONNECTED[8]}")
    print(f"connected n=8: {conn8.count} classes")

    twos: dict[int, list] = {}
    for n in range(3, 8):
        twos[n] = [m for m in atlas[n] if two_connected(n, m)]
    twos[8] = [m for m in conn8.all_masks() if two_connected(8, m)]
    for n in range(3, 9):
        if len(twos[n]) != EXPECTED_2CONN[n]:
            raise SystemExit(f"2-connected count at n={n}: {len(twos[n])} != {EXPECTED_2CONN[n]}")
    with open(data_dir / "corpus_2conn_upto8.g6", "w") as fh:
        for n in range(3, 9):
            for masks in twos[n]:
                fh.write(encode_graph6(masks_to_graph(n, masks)) + "\n")
    print(f"wrote corpus_2conn_upto8.g6 ({sum(len(twos[n]) for n in range(3, 9))} graphs)")

    if args.skip_n9:
        return
    print("augmenting to 2-connected n=9 (this is the long step) ...", flush=True)
    dd9 = augment_two_connected_9(list(conn8.all_masks()), None)
    if dd9.count != EXPECTED_2CONN[9]:
        raise SystemExit(f"2-connected count at n=9: {dd9.count} != {EXPECTED_2CONN[9]}")
    with gzip.open(data_dir / "corpus_2conn_9.g6.gz", "wt") as fh:
        for masks in dd9.all_masks():
            fh.write(encode_graph6(masks_to_graph(9, masks)) + "\n")
    print(f"wrote corpus_2conn_9.g6.gz ({dd9.count} graphs)")


if __name__ == "__main__":
    main()
