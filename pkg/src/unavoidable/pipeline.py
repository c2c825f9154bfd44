"""Top-level extract-and-certify orchestration.

Stages: a theta attempt on a normal spanning tree; the clique /
two-hub / induced-path split on a long path; bridge decomposition and
messy-ladder assembly; cross resolution down to a clean ladder.  The
four admissible top-level certificate kinds are exactly clique, theta,
theta_plus and clean_ladder; paths and messy ladders are consumed
internally.

Thresholds are advisory metadata, not gates: every stage runs
best-effort, and the report records whether the input met the composed
guarantee.  All threshold arithmetic is arbitrary precision; the
composed bound explodes past 64-bit range even for small parameters.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .certificates import Certificate, verify_certificate
from .errors import ExtractionFailure
from .graphs import Graph, is_two_connected
from .ladder_build import f_bridges, long_path_to_messy, ramsey_upper
from .ladder_clean import (
    clean_messy_ladder,
    f_messyfinite,
    find_crosses,
    max_clean_cycle_order,
    max_clean_fan_order,
)
from .certificates import ladder_certificate
from .short_path import extract_short_path_structure, f_shortp

__all__ = [
    "Budgets",
    "ExtractionReport",
    "f_main",
    "f_clean_from_path",
    "extract_unavoidable",
]

# hook for the external bound on spanning-path graphs: a callable
# (p, q, r) -> int.  The source result asserts existence of the bound
# without stating it, so there is no default number; threshold
# compositions that need it report "unbounded" when it is unset.
GrsBound = Callable[[int, int, int], int]


def f_clean_from_path(t: int, grs_bound: Optional[GrsBound] = None) -> Optional[int]:
    """Path order guaranteeing a clique, two-hub structure, or clean
    ladder at parameter t.  None when the external bound is unset."""
    if t <= 2:
        raise ValueError("t must exceed 2")
    messy_target = f_messyfinite(max(t, 3))
    path_order = f_bridges(max(messy_target, 4))
    if grs_bound is None:
        return None
    return grs_bound(2, ramsey_upper(t), path_order)


def f_main(r: int, grs_bound: Optional[GrsBound] = None) -> Optional[int]:
    """Composed order guarantee for the four-way dichotomy.

    None (unbounded marker) while the external spanning-path bound is
    unconfigured.
    """
    if r <= 2:
        raise ValueError("r must exceed 2")
    q = f_clean_from_path(r, grs_bound)
    if q is None:
        return None
    return f_shortp(max(q, 2), r)


@dataclass(frozen=True)
class Budgets:
    """Deterministic search budgets (node expansions / windows), never
    wall-clock time."""

    induced_path: Optional[int] = 200_000
    subladder_windows: Optional[int] = 200_000


@dataclass
class ExtractionReport:
    certificate: Optional[Certificate]
    trace: list = field(default_factory=list)
    guarantee_met: bool = False

    def add(self, stage: str, outcome: str, input_size: int, output_size: int) -> None:
        self.trace.append(
            {
                "stage": stage,
                "outcome": outcome,
                "input_size": input_size,
                "output_size": output_size,
            }
        )

    def to_dict(self) -> dict:
        return {
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "trace": list(self.trace),
            "guarantee_met": self.guarantee_met,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def extract_unavoidable(
    G: Graph,
    r: int,
    budgets: Optional[Budgets] = None,
    grs_bound: Optional[GrsBound] = None,
) -> ExtractionReport:
    """Extract a verified K_r, theta, theta-plus, or clean ladder of
    order >= r from a 2-connected graph.

    Identical inputs and budgets yield identical reports.  Every
    certificate in the report has passed its verifier; below the
    composed threshold the report may instead carry an empty
    certificate with the failure trace.
    """
    if r <= 2:
        raise ValueError("r must exceed 2")
    if not is_two_connected(G):
        raise ValueError("input graph is not 2-connected")
    budgets = budgets or Budgets()
    bound = f_main(r, grs_bound)
    report = ExtractionReport(certificate=None)
    report.guarantee_met = bound is not None and G.n >= bound

    # theta attempt first: with q above any attainable tree height the
    # dichotomy always lands on the branching side, matching the way the
    # composed guarantee invokes it; the tree's deep branch survives as
    # the long-path fallback.
    path = None
    try:
        outcome = extract_short_path_structure(G, max(G.n, 3), r)
        if outcome.theta is not None:
            report.add("short_path", outcome.theta.kind, G.n, len(outcome.theta.vertices))
            report.certificate = outcome.theta
        else:
            path = outcome.long_path
            report.add("short_path", "long_path", G.n, path.order)
    except ExtractionFailure as exc:
        path = exc.partials.get("tree_path")
        report.add("short_path", "no_theta", G.n, path.order if path else 0)

    if report.certificate is None and path is not None:
        try:
            result = long_path_to_messy(G, r, r, path=path, budget=budgets.induced_path)
        except ExtractionFailure as exc:
            report.add("long_path_split", f"failed: {exc.message}", path.order, 0)
            result = None
        if result is not None and result.certificate is not None:
            report.add(
                "long_path_split",
                result.certificate.kind,
                path.order,
                len(result.certificate.vertices),
            )
            report.certificate = result.certificate
        elif result is not None:
            ladder = result.ladder
            report.add("ladder_assembly", "messy_ladder", path.order, ladder.order)
            cleaned = clean_messy_ladder(ladder, r, budgets.subladder_windows)
            clean = cleaned.ladder
            # descriptive subtype tags only; no refined trichotomy claimed
            subtypes = []
            if max_clean_cycle_order(clean) >= clean.order:
                subtypes.append("cycle")
            if max_clean_fan_order(clean) >= clean.order:
                subtypes.append("fan")
            in_cross = set()
            for c in find_crosses(clean):
                in_cross.add(c.e)
                in_cross.add(c.f)
            interior = [g for g in clean.rungs if g not in (clean.sigma, clean.tau)]
            if interior and all(g in in_cross for g in interior):
                subtypes.append("degenerate_rungs")
            tag = "+".join(["clean_ladder"] + subtypes)
            report.add(f"ladder_cleaning[{cleaned.via}]", tag, ladder.order, clean.order)
            if clean.order >= r:
                report.certificate = ladder_certificate(clean, r, clean=True)

    if report.certificate is not None and not verify_certificate(G, report.certificate):
        raise AssertionError("pipeline produced an unverified certificate")
    if report.certificate is not None and report.certificate.kind not in (
        "clique",
        "theta",
        "theta_plus",
        "clean_ladder",
    ):
        raise AssertionError(f"inadmissible top-level kind {report.certificate.kind}")
    return report
