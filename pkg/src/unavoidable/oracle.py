"""Brute-force ground truth, seeded instance generators, and the corpus
census.

The brute-force searches are exact on small graphs (default cap 10
vertices) and are the reference every extraction result is measured
against.  The clean-ladder search uses two exact shortcuts backed by a
structure argument (verified against the full scan in the test suite):

* order >= 3 is equivalent to the existence of any induced cycle
  (a chordless cycle split into two arcs is a cross-free ladder, and
  every ladder contains an induced cycle);
* order >= 4 is equivalent to an induced cycle of length >= 4, an
  induced diamond, or a K_4: a ladder all of whose induced cycles are
  triangles is 2-connected and chordal, and a 2-connected chordal graph
  on >= 4 vertices that avoids both the diamond and K_4 does not exist
  (delete a simplicial vertex and induct down to the 4-vertex base
  case, which is forced to be the diamond itself).

For order >= 5 the exhaustive subset scan runs: a subset hosts a ladder
iff it splits into two induced-path vertex sets whose endpoint edges
supply sigma and tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .certificates import (
    Certificate,
    clique_certificate,
    ladder_certificate,
    theta_certificate,
    verify_certificate,
)
from .graphs import Graph, _connected_within, is_two_connected
from .io import decode_graph6
from .ladders import MessyLadder
from .pipeline import Budgets, extract_unavoidable
from .rng import SplitMix64

__all__ = [
    "OracleResult",
    "brute_force_structures",
    "gen_two_connected",
    "LadderParams",
    "gen_messy_ladder",
    "verify_theorem_on_corpus",
    "census_record",
    "summarize_census",
]

DEFAULT_CAP = 10


# ----------------------------------------------------------------- cliques

def _clique_witness(G: Graph, r: int) -> Optional[Certificate]:
    masks = G.masks
    for combo in combinations(range(G.n), r):
        ok = True
        for i, u in enumerate(combo):
            mu = masks[u]
            for v in combo[i + 1 :]:
                if not (mu >> v) & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return clique_certificate(combo, r)
    return None


# -------------------------------------------------------------- theta packs

def _induced_ab_paths(G: Graph, a: int, b: int, max_internal: int):
    """All paths a, x1..xk, b (k >= 1) with internals off {a, b} and no
    chords; the a-b pair itself is exempt from the chord rule.  Yields
    (internal_mask, sequence) sorted by (length, sequence)."""
    masks = G.masks
    out = []
    abit, bbit = 1 << a, 1 << b
    start_ext = masks[a] & ~abit & ~bbit
    stack = []
    rest = start_ext
    while rest:
        low = rest & -rest
        rest ^= low
        stack.append(((low.bit_length() - 1,), low))
    stack.reverse()
    while stack:
        seq, mask = stack.pop()
        tail = seq[-1]
        # b closes the path if adjacent to the tail and to no earlier internal
        if (masks[b] >> tail) & 1 and not (masks[b] & (mask & ~(1 << tail))):
            out.append((mask, (a,) + seq + (b,)))
        if len(seq) >= max_internal:
            continue
        blocked = mask | abit | bbit
        for w in range(G.n):
            wb = 1 << w
            if blocked & wb:
                continue
            if not (masks[w] >> tail) & 1:
                continue
            # no chord back to a or to earlier internals
            if masks[w] & ((mask & ~(1 << tail)) | abit):
                continue
            stack.append((seq + (w,), mask | wb))
    out.sort(key=lambda t: (len(t[1]), t[1]))
    return out


def _theta_witness(G: Graph, r: int, plus: bool) -> Optional[Certificate]:
    """Two hub vertices with r internally-disjoint chordless paths and no
    edges between distinct path interiors; hub adjacency must equal
    ``plus``."""
    if G.n < 2 + r:
        return None
    masks = G.masks
    for a in range(G.n):
        if len(G.adj[a]) < r:
            continue
        for b in range(a + 1, G.n):
            if len(G.adj[b]) < r:
                continue
            if G.has_edge(a, b) != plus:
                continue
            budget = G.n - 2 - (r - 1)  # every other path needs an internal
            cands = _induced_ab_paths(G, a, b, budget)
            if len(cands) < r:
                continue
            closures = [m | _nbr_closure(masks, m) for m, _ in cands]

            def pack(start: int, chosen: list, blocked: int) -> Optional[list]:
                # blocked = union of chosen interiors and their neighbourhoods;
                # a compatible path's interior must avoid it entirely
                if len(chosen) == r:
                    return chosen
                for idx in range(start, len(cands)):
                    if len(cands) - idx < r - len(chosen):
                        return None
                    if cands[idx][0] & blocked:
                        continue
                    got = pack(idx + 1, chosen + [idx], blocked | closures[idx])
                    if got is not None:
                        return got
                return None

            got = pack(0, [], 0)
            if got is not None:
                paths = [cands[i][1] for i in got]
                cert = theta_certificate(a, b, paths, plus_edge=plus, parameter=r)
                if verify_certificate(G, cert):
                    return cert
    return None


def _nbr_closure(masks, mask: int) -> int:
    acc = 0
    rest = mask
    while rest:
        low = rest & -rest
        rest ^= low
        acc |= masks[low.bit_length() - 1]
    return acc


# ------------------------------------------------------------ clean ladders

def _induced_cycle_sequences(G: Graph, size: int) -> Iterator[tuple[int, ...]]:
    """Chordless cycles on exactly ``size`` vertices, as cyclic orders."""
    masks = G.masks
    for combo in combinations(range(G.n), size):
        sub = 0
        for v in combo:
            sub |= 1 << v
        if any((masks[v] & sub).bit_count() != 2 for v in combo):
            continue
        if not _connected_within(masks, sub):
            continue
        seq = [combo[0]]
        prev = None
        while len(seq) < size:
            nxt = min(
                w
                for w in combo
                if w != prev and w != seq[-1] and (masks[seq[-1]] >> w) & 1
            )
            prev = seq[-1]
            seq.append(nxt)
        yield tuple(seq)


def _cycle_as_ladder(G: Graph, cyc: tuple[int, ...]) -> MessyLadder:
    k = len(cyc)
    cut = (k + 1) // 2
    rail_x = cyc[:cut]
    rail_y = tuple(reversed(cyc[cut:]))
    return MessyLadder(G, rail_x, rail_y)


def _path_set_sequence(masks, subset_mask: int) -> Optional[tuple[int, ...]]:
    """If the subset induces a path graph, return its vertex sequence
    (from the least-labelled endpoint); None otherwise."""
    size = subset_mask.bit_count()
    verts = []
    rest = subset_mask
    while rest:
        low = rest & -rest
        rest ^= low
        verts.append(low.bit_length() - 1)
    if size == 1:
        return (verts[0],)
    degs = {v: (masks[v] & subset_mask).bit_count() for v in verts}
    ends = [v for v in verts if degs[v] == 1]
    if len(ends) != 2 or any(d > 2 for d in degs.values()):
        return None
    if not _connected_within(masks, subset_mask):
        return None
    seq = [min(ends)]
    prev = None
    while len(seq) < size:
        nxt = next(
            w for w in verts if w != prev and w != seq[-1] and (masks[seq[-1]] >> w) & 1
        )
        prev = seq[-1]
        seq.append(nxt)
    return tuple(seq)


def _all_crosses_degenerate_on(G: Graph, X: tuple[int, ...], Y: tuple[int, ...]) -> bool:
    px = {v: i for i, v in enumerate(X)}
    py = {v: i for i, v in enumerate(Y)}
    rungs = [(px[u], py[w]) for u in X for w in G.adj[u] if w in py]
    for i, (x1, y1) in enumerate(rungs):
        for x2, y2 in rungs[i + 1 :]:
            if (x1 - x2) * (y1 - y2) < 0:
                if abs(x1 - x2) != 1 or abs(y1 - y2) != 1:
                    return False
    return True


def _ladder_split(G: Graph, combo: tuple[int, ...]) -> Optional[MessyLadder]:
    """Try to present the induced subgraph on combo as a clean ladder."""
    masks = G.masks
    size = len(combo)
    sub = 0
    for v in combo:
        sub |= 1 << v
    if any((masks[v] & sub).bit_count() < 2 for v in combo):
        return None  # every ladder vertex has degree >= 2 in the ladder
    if not _connected_within(masks, sub):
        return None
    anchor = combo[0]
    others = combo[1:]
    for take in range(0, size):
        for rest_combo in combinations(others, take):
            amask = 1 << anchor
            for v in rest_combo:
                amask |= 1 << v
            bmask = sub & ~amask
            if bmask == 0:
                continue
            if amask.bit_count() == 1 and bmask.bit_count() == 1:
                continue
            sa = _path_set_sequence(masks, amask)
            if sa is None:
                continue
            sb = _path_set_sequence(masks, bmask)
            if sb is None:
                continue
            for Y in (sb, tuple(reversed(sb))):
                if not G.has_edge(sa[0], Y[0]) or not G.has_edge(sa[-1], Y[-1]):
                    continue
                if _all_crosses_degenerate_on(G, sa, Y):
                    return MessyLadder(G, sa, Y)
    return None


def _has_induced_diamond(G: Graph) -> Optional[tuple[int, int, int, int]]:
    """Hub edge plus two nonadjacent common neighbours."""
    masks = G.masks
    for a, b in sorted(G.edges):
        common = masks[a] & masks[b]
        cs = []
        rest = common
        while rest:
            low = rest & -rest
            rest ^= low
            cs.append(low.bit_length() - 1)
        for i, c in enumerate(cs):
            for d in cs[i + 1 :]:
                if not (masks[c] >> d) & 1:
                    return (a, b, c, d)
    return None


def _has_k4(G: Graph) -> Optional[tuple[int, ...]]:
    masks = G.masks
    for a, b in sorted(G.edges):
        common = masks[a] & masks[b]
        cs = []
        rest = common
        while rest:
            low = rest & -rest
            rest ^= low
            cs.append(low.bit_length() - 1)
        for i, c in enumerate(cs):
            for d in cs[i + 1 :]:
                if (masks[c] >> d) & 1:
                    return (a, b, c, d)
    return None


def _ladder_witness(G: Graph, r: int) -> Optional[Certificate]:
    if G.n < max(r, 3):
        return None
    if r <= 4:
        # exact shortcuts, smallest structures first
        if r <= 3:
            for size in range(3, G.n + 1):
                for cyc in _induced_cycle_sequences(G, size):
                    lad = _cycle_as_ladder(G, cyc)
                    return ladder_certificate(lad, r, clean=True)
            return None
        for cyc in _induced_cycle_sequences(G, 4):
            return ladder_certificate(_cycle_as_ladder(G, cyc), r, clean=True)
        k4 = _has_k4(G)
        if k4 is not None:
            a, b, c, d = k4
            return ladder_certificate(MessyLadder(G, (a, b), (c, d)), r, clean=True)
        dia = _has_induced_diamond(G)
        if dia is not None:
            a, b, c, d = dia  # ab edge, c/d nonadjacent hubs of the square
            return ladder_certificate(MessyLadder(G, (c, a, d), (b,)), r, clean=True)
        for size in range(5, G.n + 1):
            for cyc in _induced_cycle_sequences(G, size):
                return ladder_certificate(_cycle_as_ladder(G, cyc), r, clean=True)
        return None
    for size in range(max(r, 3), G.n + 1):
        for cyc in _induced_cycle_sequences(G, size):
            return ladder_certificate(_cycle_as_ladder(G, cyc), r, clean=True)
        for combo in combinations(range(G.n), size):
            lad = _ladder_split(G, combo)
            if lad is not None:
                return ladder_certificate(lad, r, clean=True)
    return None


# ------------------------------------------------------------------ results

@dataclass(frozen=True)
class OracleResult:
    clique: Optional[Certificate]
    theta: Optional[Certificate]
    theta_plus: Optional[Certificate]
    clean_ladder: Optional[Certificate]

    @property
    def flags(self) -> dict:
        return {
            "clique": self.clique is not None,
            "theta": self.theta is not None,
            "theta_plus": self.theta_plus is not None,
            "clean_ladder": self.clean_ladder is not None,
        }

    @property
    def any_present(self) -> bool:
        return any(self.flags.values())

    def to_dict(self) -> dict:
        return {
            "flags": self.flags,
            "witnesses": {
                k: (getattr(self, k).to_dict() if getattr(self, k) else None)
                for k in ("clique", "theta", "theta_plus", "clean_ladder")
            },
        }


def brute_force_structures(G: Graph, r: int, cap: int = DEFAULT_CAP) -> OracleResult:
    """Exhaustive presence search for the four structures at parameter r.

    Witnesses are deterministic and small (searches ascend by size);
    every witness passes its verifier.
    """
    if G.n > cap:
        raise ValueError(f"graph order {G.n} exceeds oracle cap {cap}")
    if r < 3:
        raise ValueError("r must be at least 3")
    result = OracleResult(
        clique=_clique_witness(G, r),
        theta=_theta_witness(G, r, plus=False),
        theta_plus=_theta_witness(G, r, plus=True),
        clean_ladder=_ladder_witness(G, r),
    )
    for cert in (result.clique, result.theta, result.theta_plus, result.clean_ladder):
        if cert is not None and not verify_certificate(G, cert):
            raise AssertionError(f"oracle produced an unverified {cert.kind} witness")
    return result


# --------------------------------------------------------------- generators

def gen_two_connected(n: int, seed: int, extra_edges: Optional[int] = None) -> Graph:
    """Random 2-connected graph by ear decomposition.

    A seed cycle takes between 3 and n vertices, open ears absorb the
    rest, and ``extra_edges`` chord ears (default: a random count up to
    n) densify the result.  Every output passes the 2-connectivity
    check; identical seeds give identical graphs on every platform.
    """
    if n < 3:
        raise ValueError("need at least 3 vertices")
    rng = SplitMix64(seed)
    k = rng.randint(3, n)
    edges = {(i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)}
    used = k
    while used < n:
        ear = rng.randint(1, n - used)
        a = rng.randrange(used)
        b = rng.randrange(used)
        while b == a:
            b = rng.randrange(used)
        chain = [a] + list(range(used, used + ear)) + [b]
        for u, v in zip(chain, chain[1:]):
            edges.add((u, v) if u < v else (v, u))
        used += ear
    extra = rng.randrange(n + 1) if extra_edges is None else extra_edges
    for _ in range(extra):
        a = rng.randrange(n)
        b = rng.randrange(n)
        if a != b:
            edges.add((a, b) if a < b else (b, a))
    return Graph(n, frozenset(edges))


@dataclass(frozen=True)
class LadderParams:
    """Knobs for the ladder generator.

    pattern 'random' sprinkles rungs anywhere, 'local' confines each
    rung to a window around the diagonal (keeps clean cycles and fans
    small), 'crossfree' lays a monotone staircase, and
    'one_degenerate_cross' plants exactly one crossing rung pair with
    single-edge spans.
    """

    len_x: int
    len_y: int
    rung_num: int = 0
    rung_den: int = 1
    window: int = 2
    pattern: str = "random"


def gen_messy_ladder(params: LadderParams, seed: int) -> MessyLadder:
    lx, ly = params.len_x, params.len_y
    if lx < 1 or ly < 1:
        raise ValueError("rail lengths must be >= 1")
    if lx == 1 and ly == 1:
        raise ValueError("at most one rail may be trivial")
    if params.rung_den < 1 or not (0 <= params.rung_num <= params.rung_den):
        raise ValueError("rung density must be a probability")
    if params.pattern not in ("random", "local", "crossfree", "one_degenerate_cross"):
        raise ValueError(f"unknown pattern {params.pattern!r}")
    rng = SplitMix64(seed)
    n = lx + ly
    X = tuple(range(lx))
    Y = tuple(range(lx, lx + ly))
    edges = set()
    for seq in (X, Y):
        edges.update((a, b) for a, b in zip(seq, seq[1:]))
    edges.add((X[0], Y[0]) if X[0] < Y[0] else (Y[0], X[0]))
    edges.add((X[-1], Y[-1]) if X[-1] < Y[-1] else (Y[-1], X[-1]))

    def add_rung(i: int, j: int) -> None:
        u, v = X[i], Y[j]
        edges.add((u, v) if u < v else (v, u))

    if params.pattern == "crossfree":
        i = j = 0
        while i < lx - 1 or j < ly - 1:
            if rng.chance(params.rung_num, params.rung_den):
                add_rung(i, j)
            step = rng.randrange(3)
            if step != 0 and i < lx - 1:
                i += 1
            if step != 1 and j < ly - 1:
                j += 1
    elif params.pattern == "one_degenerate_cross":
        if lx < 2 or ly < 2:
            raise ValueError("degenerate cross needs both rails of length >= 2")
        i = rng.randrange(lx - 1)
        j = rng.randrange(ly - 1)
        add_rung(i, j + 1)
        add_rung(i + 1, j)
    else:
        for i in range(lx):
            if params.pattern == "local":
                centre = i * (ly - 1) // max(lx - 1, 1)
                lo = max(0, centre - params.window)
                hi = min(ly - 1, centre + params.window)
            else:
                lo, hi = 0, ly - 1
            for j in range(lo, hi + 1):
                if rng.chance(params.rung_num, params.rung_den):
                    add_rung(i, j)
    return MessyLadder(Graph(n, frozenset(edges)), X, Y)


# ------------------------------------------------------------------- census

def census_record(index: int, line: str, r: int, cap: int = DEFAULT_CAP, budgets=None) -> dict:
    """Oracle vs pipeline verdict for one graph6 line."""
    G = decode_graph6(line)
    rec: dict = {"index": index, "g6": line.strip(), "n": G.n, "m": G.m}
    if not is_two_connected(G):
        rec.update({"two_connected": False, "skipped": "not 2-connected"})
        return rec
    rec["two_connected"] = True
    oracle = brute_force_structures(G, r, cap=cap)
    rec["oracle"] = oracle.flags
    rec["oracle_any"] = oracle.any_present
    report = extract_unavoidable(G, r, budgets=budgets or Budgets())
    kind = report.certificate.kind if report.certificate else None
    rec["pipeline_kind"] = kind
    if kind is not None and not oracle.flags[kind]:
        raise AssertionError(
            f"pipeline found a {kind} the oracle missed on graph {line.strip()!r}"
        )
    rec["agreement"] = (kind is not None) if oracle.any_present else None
    return rec


def summarize_census(records: Iterable[dict]) -> dict:
    total = skipped = positives = found = 0
    max_n = 0
    contains_by_n: dict[int, list[int]] = {}
    for rec in records:
        total += 1
        if rec.get("skipped"):
            skipped += 1
            continue
        n = rec["n"]
        max_n = max(max_n, n)
        has = rec["oracle_any"]
        contains_by_n.setdefault(n, [0, 0])
        contains_by_n[n][0] += 1
        contains_by_n[n][1] += 1 if has else 0
        if has:
            positives += 1
            if rec["pipeline_kind"] is not None:
                found += 1
    min_order = None
    for n in sorted(contains_by_n):
        cnt, hit = contains_by_n[n]
        if cnt == hit and all(
            contains_by_n[m][0] == contains_by_n[m][1] for m in contains_by_n if m >= n
        ):
            min_order = n
            break
    return {
        "summary": True,
        "total": total,
        "skipped": skipped,
        "oracle_positive": positives,
        "pipeline_found": found,
        "agreement_rate": (found / positives) if positives else None,
        "min_order_all_contain": min_order,
        "per_order": {str(n): {"graphs": c, "containing": h} for n, (c, h) in sorted(contains_by_n.items())},
    }


def verify_theorem_on_corpus(
    lines: Iterable[str], r: int, cap: int = DEFAULT_CAP, budgets=None
) -> Iterator[dict]:
    """One census record per nonempty graph6 line, in input order."""
    index = 0
    for line in lines:
        line = line.strip()
        if not line:
            continue
        yield census_record(index, line, r, cap=cap, budgets=budgets)
        index += 1
