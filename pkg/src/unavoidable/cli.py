"""Batch command-line surface.

Machine-readable output goes to stdout only; diagnostics go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage error,
3 malformed input file.  Input format is detected from the extension
(.el edge list, .g6 graph6, optionally .gz-compressed) and can be
overridden with --format.  Randomized commands require an explicit
--seed.
"""

from __future__ import annotations

import argparse
import gzip
import json
import sys
from multiprocessing import Pool

from .certificates import Certificate, verify_certificate
from .io import GraphFormatError, encode_graph6, format_edge_list, load_graph
from .oracle import (
    DEFAULT_CAP,
    LadderParams,
    brute_force_structures,
    census_record,
    gen_messy_ladder,
    gen_two_connected,
    summarize_census,
)
from .pipeline import Budgets, extract_unavoidable
from .thresholds import REGISTRY, evaluate

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_INPUT = 3


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path: str, fmt):
    try:
        return load_graph(path, fmt)
    except FileNotFoundError:
        _err(f"no such file: {path}")
        raise SystemExit(EXIT_INPUT)
    except GraphFormatError as exc:
        _err(f"malformed input {path}: {exc}")
        raise SystemExit(EXIT_INPUT)


def _emit(text: str, output) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_extract(args) -> int:
    G = _load(args.input, args.format)
    budgets = Budgets(induced_path=args.budget, subladder_windows=args.budget)
    try:
        report = extract_unavoidable(G, args.r, budgets=budgets)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    _emit(report.to_json(), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load(args.graph, args.format)
    try:
        with open(args.cert) as fh:
            cert = Certificate.from_json(fh.read())
    except FileNotFoundError:
        _err(f"no such file: {args.cert}")
        return EXIT_INPUT
    except (json.JSONDecodeError, KeyError, ValueError) as exc:
        _err(f"malformed certificate {args.cert}: {exc}")
        return EXIT_INPUT
    ok = verify_certificate(G, cert)
    print(json.dumps({"verified": ok, "kind": cert.kind, "parameter": cert.parameter}))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_oracle(args) -> int:
    G = _load(args.input, args.format)
    try:
        result = brute_force_structures(G, args.r, cap=args.cap)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_USAGE
    _emit(json.dumps(result.to_dict(), sort_keys=True), args.output)
    return EXIT_OK


def _census_worker(job):
    index, line, r, cap = job
    return census_record(index, line, r, cap=cap)


def cmd_corpus(args) -> int:
    opener = gzip.open if args.input.endswith(".gz") else open
    try:
        with opener(args.input, "rt") as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except FileNotFoundError:
        _err(f"no such file: {args.input}")
        return EXIT_INPUT
    jobs = [(i, ln, args.r, args.cap) for i, ln in enumerate(lines)]
    try:
        if args.workers > 1:
            with Pool(args.workers) as pool:
                records = pool.map(_census_worker, jobs, chunksize=256)
        else:
            records = [_census_worker(j) for j in jobs]
    except GraphFormatError as exc:
        _err(f"malformed graph6 in {args.input}: {exc}")
        return EXIT_INPUT
    out = sys.stdout if not args.output else open(args.output, "w")
    try:
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
        out.write(json.dumps(summarize_census(records), sort_keys=True) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "two-connected":
        G = gen_two_connected(args.n, args.seed)
    else:
        params = LadderParams(
            len_x=args.rail_x,
            len_y=args.rail_y,
            rung_num=args.rung_num,
            rung_den=args.rung_den,
            window=args.window,
            pattern=args.pattern,
        )
        ladder = gen_messy_ladder(params, args.seed)
        G = ladder.graph
    text = encode_graph6(G) if args.format == "g6" else format_edge_list(G)
    _emit(text, args.output)
    return EXIT_OK


def cmd_thresholds(args) -> int:
    try:
        value = evaluate(args.name, args.args)
    except (KeyError, ValueError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    print("unbounded" if value is None else str(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="unavoidable",
        description="Extract and verify unavoidable induced structures in 2-connected graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    px = sub.add_parser("extract", help="run the extraction pipeline on one graph")
    px.add_argument("--input", required=True)
    px.add_argument("--format", choices=["el", "g6"], default=None)
    px.add_argument("--r", type=int, required=True)
    px.add_argument("--budget", type=int, default=200_000)
    px.add_argument("--output", default=None)
    px.set_defaults(fn=cmd_extract)

    pv = sub.add_parser("verify", help="check a certificate JSON against a graph")
    pv.add_argument("--graph", required=True)
    pv.add_argument("--format", choices=["el", "g6"], default=None)
    pv.add_argument("--cert", required=True)
    pv.set_defaults(fn=cmd_verify)

    po = sub.add_parser("oracle", help="brute-force structure census for one graph")
    po.add_argument("--input", required=True)
    po.add_argument("--format", choices=["el", "g6"], default=None)
    po.add_argument("--r", type=int, required=True)
    po.add_argument("--cap", type=int, default=DEFAULT_CAP)
    po.add_argument("--output", default=None)
    po.set_defaults(fn=cmd_oracle)

    pc = sub.add_parser("corpus", help="oracle-vs-pipeline census over a graph6 corpus")
    pc.add_argument("--input", required=True)
    pc.add_argument("--r", type=int, required=True)
    pc.add_argument("--cap", type=int, default=DEFAULT_CAP)
    pc.add_argument("--workers", type=int, default=1)
    pc.add_argument("--output", default=None)
    pc.set_defaults(fn=cmd_corpus)

    pg = sub.add_parser("gen", help="generate a seeded random instance")
    pg.add_argument("--kind", choices=["two-connected", "ladder"], required=True)
    pg.add_argument("--seed", type=int, required=True)
    pg.add_argument("--n", type=int, default=10)
    pg.add_argument("--rail-x", type=int, default=8)
    pg.add_argument("--rail-y", type=int, default=8)
    pg.add_argument("--rung-num", type=int, default=1)
    pg.add_argument("--rung-den", type=int, default=3)
    pg.add_argument("--window", type=int, default=2)
    pg.add_argument(
        "--pattern",
        choices=["random", "local", "crossfree", "one_degenerate_cross"],
        default="random",
    )
    pg.add_argument("--format", choices=["el", "g6"], default="el")
    pg.add_argument("--output", default=None)
    pg.set_defaults(fn=cmd_gen)

    pt = sub.add_parser("thresholds", help="evaluate a named threshold function")
    pt.add_argument("--name", required=True, help=", ".join(sorted(REGISTRY)))
    pt.add_argument("--args", type=int, nargs="+", required=True)
    pt.set_defaults(fn=cmd_thresholds)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        raise SystemExit(EXIT_USAGE if exc.code not in (0,) else 0)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except GraphFormatError as exc:
        _err(str(exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
