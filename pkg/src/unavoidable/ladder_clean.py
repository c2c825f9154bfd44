"""Cross algebra on ladders and the cleaning procedure.

An ordered rung pair (e, f) is a cross when e_X < f_X on rail X and
f_Y < e_Y on rail Y; its X-span is X[e_X, f_X] and its Y-span is
Y[f_Y, e_Y].  A cross is degenerate when both spans are single edges,
full when no other cross's spans contain both of its spans, and two
crosses are independent when their spans are edge-disjoint on both
rails.  Resolving a full cross deletes the span interiors and reroutes
the rails through the two rungs; resolving a maximal sequence of
pairwise independent full crosses leaves a clean ladder.

Rail positions are cached as index maps so every span comparison is an
integer comparison.  sigma and tau are rungs like any other and are
handled by the same code; they can never be members of a cross because
their endpoints are the extreme rail positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .certificates import (
    Certificate,
    clean_cycle_certificate,
    clean_fan_certificate,
    verify_clean_ladder,
    verify_messy_ladder,
)
from .ladders import MessyLadder

__all__ = [
    "Cross",
    "CrossSequence",
    "find_crosses",
    "is_full",
    "are_independent",
    "maximal_cross_sequence",
    "resolve_cross",
    "resolve_all",
    "augmented_matching",
    "find_clean_cycle",
    "max_clean_cycle_order",
    "is_cycle_free",
    "find_clean_fan",
    "max_clean_fan_order",
    "is_fan_free",
    "largest_crossfree_subladder",
    "CleanOutcome",
    "clean_messy_ladder",
    "f_dist",
    "f_crossrungs",
    "f_spans",
    "f_manycross",
    "f_messyfinite",
]


# ---------------------------------------------------------------- thresholds

def f_dist(r: int, s: int) -> int:
    """Rail vertices between consecutive augmented-matching rungs,
    endpoints included: 2((s-3)(r-4)+(s-2)) + r - 5."""
    if r <= 3 or s <= 3:
        raise ValueError("r and s must exceed 3")
    return 2 * ((s - 3) * (r - 4) + (s - 2)) + r - 5


def f_crossrungs(r: int, s: int) -> int:
    """Rail vertices spanned by two matching rungs crossed by one rung:
    m1*m2 + (m1+1)(r-4) - 1 with m1 = f_dist(r,s)-1, m2 = (r-4)(s-3)+(s-2)."""
    if r <= 3 or s <= 3:
        raise ValueError("r and s must exceed 3")
    m1 = f_dist(r, s) - 1
    m2 = (r - 4) * (s - 3) + (s - 2)
    return m1 * m2 + (m1 + 1) * (r - 4) - 1


def f_spans(r: int, s: int) -> int:
    """Span-order bound for any cross of a ladder with no large clean
    cycle or fan: 2(f_crossrungs + 2 f_dist - 2)."""
    return 2 * (f_crossrungs(r, s) + 2 * f_dist(r, s) - 2)


def f_manycross(q: int, w: int) -> int:
    """Ladder order forcing every maximal independent-full-cross
    sequence to length >= w, given no cross-free sub-ladder of order q.

    Implemented verbatim; the (w-2) term makes the value dip for w = 1
    (e.g. f_manycross(4, 1) = 40), which only weakens the claim there.
    """
    if q <= 3:
        raise ValueError("q must exceed 3")
    if w < 1:
        raise ValueError("w must be >= 1")
    big = f_spans(q, q)
    qq = q * q + q
    return 4 * (big + 1) * qq + 2 * (w - 1) * big + 2 * (2 * big + 1) * qq * (w - 2)


def f_messyfinite(t: int) -> int:
    """Messy-ladder order guaranteeing a clean ladder of order >= t
    after resolution; t is rounded up to even and w = t/2 - 1."""
    if t <= 2:
        raise ValueError("t must exceed 2")
    t = t + (t % 2)
    w = t // 2 - 1
    return f_manycross(t, w)


# ------------------------------------------------------------------- crosses

@dataclass(frozen=True)
class Cross:
    """Ordered rung pair; rungs are (x_vertex, y_vertex) in ladder rails.

    ``x_span``/``y_span`` are position intervals on the rails of the
    ladder the cross was found in: (pos e_X, pos f_X) and
    (pos f_Y, pos e_Y).
    """

    e: tuple[int, int]
    f: tuple[int, int]
    x_span: tuple[int, int]
    y_span: tuple[int, int]

    @property
    def degenerate(self) -> bool:
        return self.x_span[1] - self.x_span[0] == 1 and self.y_span[1] - self.y_span[0] == 1


@dataclass(frozen=True)
class CrossSequence:
    crosses: tuple[Cross, ...]

    def __len__(self):
        return len(self.crosses)


def find_crosses(L: MessyLadder) -> list[Cross]:
    """All ordered rung pairs satisfying the cross condition, sorted by
    span positions."""
    rungs = L.rungs
    px, py = L.pos_x, L.pos_y
    out = []
    for i, e in enumerate(rungs):
        for f in rungs:
            if e is f:
                continue
            if px[e[0]] < px[f[0]] and py[f[1]] < py[e[1]]:
                out.append(
                    Cross(
                        e=e,
                        f=f,
                        x_span=(px[e[0]], px[f[0]]),
                        y_span=(py[f[1]], py[e[1]]),
                    )
                )
    out.sort(key=lambda c: (c.x_span, c.y_span))
    return out


def is_full(L: MessyLadder, c: Cross, crosses: Optional[list[Cross]] = None) -> bool:
    """No other cross's spans contain both of c's spans."""
    if crosses is None:
        crosses = find_crosses(L)
    for d in crosses:
        if d == c:
            continue
        if (
            d.x_span[0] <= c.x_span[0]
            and c.x_span[1] <= d.x_span[1]
            and d.y_span[0] <= c.y_span[0]
            and c.y_span[1] <= d.y_span[1]
        ):
            return False
    return True


def are_independent(c1: Cross, c2: Cross) -> bool:
    """Edge-disjoint X-spans and edge-disjoint Y-spans (shared span
    endpoints allowed)."""
    x_ok = c1.x_span[1] <= c2.x_span[0] or c2.x_span[1] <= c1.x_span[0]
    y_ok = c1.y_span[1] <= c2.y_span[0] or c2.y_span[1] <= c1.y_span[0]
    return x_ok and y_ok


def maximal_cross_sequence(L: MessyLadder) -> CrossSequence:
    """Greedy maximal sequence of pairwise independent full crosses.

    Candidates are scanned by (f_X, e_Y) position and accepted when
    independent of everything accepted so far; any full cross left out
    conflicts with an accepted one, so the result is maximal.  Accepted
    crosses are already in the order induced by their spans.
    """
    crosses = find_crosses(L)
    full = [c for c in crosses if is_full(L, c, crosses)]
    full.sort(key=lambda c: (c.x_span[1], c.y_span[1], c.x_span[0], c.y_span[0]))
    accepted: list[Cross] = []
    for c in full:
        if all(are_independent(c, a) for a in accepted):
            accepted.append(c)
    for c in full:  # maximality safety net
        if c not in accepted and all(are_independent(c, a) for a in accepted):
            raise AssertionError("greedy cross sequence is not maximal")
    accepted.sort(key=lambda c: c.x_span)
    return CrossSequence(tuple(accepted))


def resolve_cross(L: MessyLadder, c: Cross) -> MessyLadder:
    """Delete the span interiors and reroute the rails through the rungs.

    The new X-rail is the X-prefix up to e_X, the rung e, and the
    Y-suffix from e_Y; the new Y-rail is the Y-prefix up to f_Y, the
    rung f, and the X-suffix from f_X.  Fullness is required: a rung
    from the X-prefix to the Y-suffix (or Y-prefix to X-suffix) other
    than the cross's own rungs would chord the new rails, and fullness
    is exactly what rules this out.  Resolving a degenerate cross keeps
    every vertex and edge: the spans' rail edges become rungs and the
    rungs become rail edges.
    """
    px, py = L.pos_x, L.pos_y
    exp, fxp = px.get(c.e[0]), px.get(c.f[0])
    fyp, eyp = py.get(c.f[1]), py.get(c.e[1])
    if None in (exp, fxp, fyp, eyp) or not (exp < fxp and fyp < eyp):
        raise ValueError("not a cross of this ladder")
    if not L.graph.has_edge(*c.e) or not L.graph.has_edge(*c.f):
        raise ValueError("cross rungs are not ladder edges")
    if not is_full(L, c):
        raise ValueError("cross is not full; resolution would break rail inducedness")
    new_x = L.rail_x[: exp + 1] + L.rail_y[eyp:]
    new_y = L.rail_y[: fyp + 1] + L.rail_x[fxp:]
    out = MessyLadder(L.graph, new_x, new_y)
    if not verify_messy_ladder(L.graph, out.rail_x, out.rail_y):
        raise AssertionError("resolution produced an invalid ladder")
    return out


def _orient_in(L: MessyLadder, edge: tuple[int, int]) -> tuple[int, int]:
    a, b = edge
    if a in L.pos_x and b in L.pos_y:
        return (a, b)
    if b in L.pos_x and a in L.pos_y:
        return (b, a)
    raise ValueError(f"edge {edge} is not a rung of the current ladder")


def _seeded_maximal_sequence(L: MessyLadder) -> CrossSequence:
    """Maximal sequence forced to contain the positionally least
    non-degenerate full cross (when one exists), so that resolving it is
    guaranteed to delete a vertex."""
    crosses = find_crosses(L)
    full = [c for c in crosses if is_full(L, c, crosses)]
    full.sort(key=lambda c: (c.x_span[1], c.y_span[1], c.x_span[0], c.y_span[0]))
    accepted: list[Cross] = []
    for c in full:
        if not c.degenerate:
            accepted.append(c)
            break
    for c in full:
        if c not in accepted and all(are_independent(c, a) for a in accepted):
            accepted.append(c)
    accepted.sort(key=lambda c: c.x_span)
    return CrossSequence(tuple(accepted))


def _resolve_sequence_once(L: MessyLadder, seq: CrossSequence) -> MessyLadder:
    """One pass: resolve the given sequence in order.

    Independence keeps later crosses intact while earlier ones are
    resolved, but each resolution swaps the rail tails, so the rung
    pair of each remaining cross is re-oriented against the current
    rails before resolving.
    """
    current = L
    for c in seq.crosses:
        e = _orient_in(current, c.e)
        f = _orient_in(current, c.f)
        px, py = current.pos_x, current.pos_y
        if px[e[0]] < px[f[0]] and py[f[1]] < py[e[1]]:
            oe, of = e, f
        elif px[f[0]] < px[e[0]] and py[e[1]] < py[f[1]]:
            oe, of = f, e
        else:
            raise ValueError("sequence is stale: pair no longer crosses")
        oriented = Cross(
            e=oe,
            f=of,
            x_span=(px[oe[0]], px[of[0]]),
            y_span=(py[of[1]], py[oe[1]]),
        )
        current = resolve_cross(current, oriented)
    return current


def resolution_passes(L: MessyLadder, seq: Optional[CrossSequence] = None):
    """Yields (ladder_before, sequence, ladder_after) per resolution pass
    until the ladder is clean.

    A single pass over a maximal sequence need not clean the ladder: a
    cross dominated only by crosses that conflict with the sequence can
    lose every dominator during resolution and emerge full and
    non-degenerate.  Follow-up passes therefore run on freshly computed
    maximal sequences, each seeded with the least non-degenerate full
    cross; that cross's resolution deletes at least one span-interior
    vertex, so the iteration terminates.
    """
    current = L
    first = seq if seq is not None else maximal_cross_sequence(L)
    while True:
        if first is None:
            if _all_crosses_clean(current):
                return
            nxt = _seeded_maximal_sequence(current)
        else:
            nxt, first = first, None
        after = _resolve_sequence_once(current, nxt)
        yield current, nxt, after
        current = after


def _all_crosses_clean(L: MessyLadder) -> bool:
    return all(c.degenerate for c in find_crosses(L))


def resolve_all(L: MessyLadder, seq: CrossSequence) -> MessyLadder:
    """Resolve the sequence, then keep resolving fresh maximal sequences
    until every remaining cross is degenerate.  Returns a clean ladder."""
    current = L
    for _before, _seq, after in resolution_passes(L, seq):
        current = after
    if not verify_clean_ladder(current.graph, current):
        raise AssertionError("iterated resolution did not clean the ladder")
    return current


# ---------------------------------------------------------------- matchings

def _noncrossing(px, py, r1, r2) -> bool:
    a = px[r1[0]] < px[r2[0]] and py[r2[1]] < py[r1[1]]
    b = px[r2[0]] < px[r1[0]] and py[r1[1]] < py[r2[1]]
    return not a and not b


def augmented_matching(L: MessyLadder) -> tuple[tuple[int, int], ...]:
    """Maximal set of pairwise non-adjacent, non-crossing rungs seeded
    with sigma and tau, listed in order of appearance on the rails.

    sigma and tau cross nothing, so seeding them first keeps the greedy
    scan deterministic while the result remains a maximal non-crossing
    matching containing both.
    """
    px, py = L.pos_x, L.pos_y
    sigma, tau = L.sigma, L.tau
    ordered = [sigma, tau] + [r for r in L.rungs if r not in (sigma, tau)]
    accepted: list[tuple[int, int]] = []
    for r in ordered:
        if any(r[0] == a[0] or r[1] == a[1] for a in accepted):
            continue
        if all(_noncrossing(px, py, r, a) for a in accepted):
            accepted.append(r)
    accepted.sort(key=lambda r: (px[r[0]], py[r[1]]))
    return tuple(accepted)


# ---------------------------------------------------------------- detectors

def _clean_cycle_orders(L: MessyLadder):
    """Yields (order, e, f, vertex sequence) for each induced clean
    cycle formed by a non-crossing rung pair."""
    rungs = L.rungs
    px, py = L.pos_x, L.pos_y
    G = L.graph
    for i, e in enumerate(rungs):
        for f in rungs[i + 1 :]:
            pxe, pxf = px[e[0]], px[f[0]]
            pye, pyf = py[e[1]], py[f[1]]
            if (pxe - pxf) * (pye - pyf) < 0:
                continue  # crossing pair
            if pxe > pxf or (pxe == pxf and pye > pyf):
                e2, f2 = f, e
                pxe, pxf, pye, pyf = pxf, pxe, pyf, pye
            else:
                e2, f2 = e, f
            xs = L.rail_x[pxe : pxf + 1]
            ys = L.rail_y[pye : pyf + 1]
            cyc = list(xs) + list(reversed(ys))
            if len(cyc) < 3:
                continue
            vset = set(cyc)
            inner = sum(1 for u, v in G.edges if u in vset and v in vset)
            if inner == len(cyc):
                yield len(cyc), e2, f2, tuple(cyc)


def max_clean_cycle_order(L: MessyLadder) -> int:
    return max((o for o, *_ in _clean_cycle_orders(L)), default=0)


def find_clean_cycle(L: MessyLadder, r: int) -> Optional[Certificate]:
    """Largest induced clean cycle of order >= r, as a certificate."""
    best = None
    for order, _e, _f, cyc in _clean_cycle_orders(L):
        if order >= r and (best is None or order > len(best)):
            best = cyc
    if best is None:
        return None
    return clean_cycle_certificate(best, r)


def is_cycle_free(L: MessyLadder, r: int) -> bool:
    return max_clean_cycle_order(L) < r


def _fan_candidates(L: MessyLadder):
    G = L.graph
    for apex in L.rail_x:
        nbrs = sorted((w for w in G.adj[apex] if w in L.pos_y), key=lambda w: L.pos_y[w])
        yield apex, nbrs, L.rail_y, L.pos_y
    for apex in L.rail_y:
        nbrs = sorted((w for w in G.adj[apex] if w in L.pos_x), key=lambda w: L.pos_x[w])
        yield apex, nbrs, L.rail_x, L.pos_x


def max_clean_fan_order(L: MessyLadder) -> int:
    """Largest s with a clean fan member of order s: one more than the
    maximum cross-rail degree."""
    best = 0
    for _apex, nbrs, _rail, _pos in _fan_candidates(L):
        best = max(best, len(nbrs) + 1)
    return best


def find_clean_fan(L: MessyLadder, s: int) -> Optional[Certificate]:
    """A clean fan of order >= s: apex on one rail, rim the opposite
    rail segment spanning its first s-1 neighbours."""
    if s < 3:
        raise ValueError("fan order must be >= 3")
    for apex, nbrs, rail, pos in _fan_candidates(L):
        if len(nbrs) >= s - 1:
            rim = rail[pos[nbrs[0]] : pos[nbrs[s - 2]] + 1]
            return clean_fan_certificate(apex, rim, s)
    return None


def is_fan_free(L: MessyLadder, s: int) -> bool:
    return max_clean_fan_order(L) < s


def largest_crossfree_subladder(
    L: MessyLadder, budget: Optional[int] = None
) -> tuple[Optional[MessyLadder], bool]:
    """Largest sub-ladder (rails are contiguous rail windows) with no
    crossing rung pair inside.

    Window corners must be existing cross-rail edges (they act as the
    sub-ladder's sigma and tau).  ``budget`` caps the number of windows
    examined; the flag reports whether the scan was exhaustive.
    """
    rungs = L.rungs
    px, py = L.pos_x, L.pos_y
    boxes = [
        (c.x_span[0], c.x_span[1], c.y_span[0], c.y_span[1]) for c in find_crosses(L)
    ]
    best = None
    best_order = 0
    spent = 0
    exhausted = True
    for e in rungs:
        for f in rungs:
            if e is f:
                continue
            x0, x1 = px[e[0]], px[f[0]]
            y0, y1 = py[e[1]], py[f[1]]
            if x0 > x1 or y0 > y1:
                continue
            if budget is not None:
                spent += 1
                if spent > budget:
                    return best, False
            order = (x1 - x0 + 1) + (y1 - y0 + 1)
            if order <= best_order:
                continue
            if any(
                x0 <= bx0 and bx1 <= x1 and y0 <= by0 and by1 <= y1
                for bx0, bx1, by0, by1 in boxes
            ):
                continue
            best = MessyLadder(L.graph, L.rail_x[x0 : x1 + 1], L.rail_y[y0 : y1 + 1])
            best_order = order
    return best, exhausted


@dataclass(frozen=True)
class CleanOutcome:
    ladder: MessyLadder
    via: str  # 'cross_free' or 'resolved'
    sequence: Optional[CrossSequence]
    meets_target: bool


def clean_messy_ladder(L: MessyLadder, t: int, budget: Optional[int] = None) -> CleanOutcome:
    """Clean ladder of order >= t from a messy ladder.

    First look for a cross-free sub-ladder of order >= t (cross-free
    ladders are clean); otherwise resolve a maximal sequence of
    independent full crosses, which always cleans the ladder, and check
    the resulting order.  In the guarantee regime,
    order(L) >= f_messyfinite(t) forces a sequence of length >= t/2 - 1
    and therefore a resolved order >= t.  Below it, the larger of the
    two clean ladders is returned with meets_target=False.
    """
    if t <= 2:
        raise ValueError("t must exceed 2")
    crossfree, _exhausted = largest_crossfree_subladder(L, budget)
    if crossfree is not None and crossfree.order >= t:
        return CleanOutcome(crossfree, "cross_free", None, True)
    seq = maximal_cross_sequence(L)
    resolved = resolve_all(L, seq)
    if resolved.order >= t:
        return CleanOutcome(resolved, "resolved", seq, True)
    if crossfree is not None and crossfree.order > resolved.order:
        return CleanOutcome(crossfree, "cross_free", None, False)
    return CleanOutcome(resolved, "resolved", seq, False)
