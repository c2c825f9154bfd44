"""Certificate-producing extraction of unavoidable induced structures
in 2-connected graphs: cliques, subdivided two-hub structures (with or
without the hub edge), and clean ladders, together with brute-force
oracles, seeded generators, and a batch CLI."""

from .certificates import Certificate, verify_certificate
from .errors import ExtractionFailure
from .graphs import Graph, Path, induced_subgraph, is_two_connected
from .ladders import MessyLadder
from .oracle import OracleResult, brute_force_structures, gen_messy_ladder, gen_two_connected
from .pipeline import Budgets, ExtractionReport, extract_unavoidable, f_main

__all__ = [
    "Certificate",
    "verify_certificate",
    "ExtractionFailure",
    "Graph",
    "Path",
    "induced_subgraph",
    "is_two_connected",
    "MessyLadder",
    "OracleResult",
    "brute_force_structures",
    "gen_messy_ladder",
    "gen_two_connected",
    "Budgets",
    "ExtractionReport",
    "extract_unavoidable",
    "f_main",
]

__version__ = "0.1.0"
