"""Command-line interface.

Subcommands: solve, verify, certify, oracle, sweep, gen. Documents are the
JSON schemas from :mod:`antimagic.jsonio`; graphs are edge-list text. Exit
status is 0 on success, 1 when a solve or verification fails, 2 for usage
and parse errors. Output is byte-reproducible for a fixed config and seed.
Set ANTIMAGIC_LOG=debug for trace logging on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import oracle as oracle_mod
from .errors import (
    AntimagicError,
    BudgetExceededError,
    CertificateError,
    InfeasibleInstanceError,
)
from .generators import FAMILIES, random_graph
from .graph import format_graph, parse_graph
from .jsonio import (
    dumps_canonical,
    read_labeling,
    read_lists,
    read_weighting,
    write_labeling,
)
from .labeling import (
    MODE_ORIENTED,
    MODE_UNDIRECTED,
    ListAssignment,
    verify_quasi_antimagic,
)
from .pipeline import (
    VARIANT_ORIENTED,
    VARIANT_UNDIRECTED,
    SolveRequest,
    default_extra_labels,
    solve,
)
from .poly import MODES, certify_reduction_monomial

VARIANT_FLAGS = {
    "weighted-list": VARIANT_UNDIRECTED,
    "oriented": VARIANT_ORIENTED,
}


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(args, text):
    out = getattr(args, "output", None)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_n_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None


def cmd_solve(args):
    graph = parse_graph(_read_text(args.graph))
    variant = VARIANT_FLAGS[args.variant]
    weighting = read_weighting(_read_text(args.weights)) if args.weights else None
    lists = read_lists(_read_text(args.lists)) if args.lists else None
    request = SolveRequest(
        graph=graph,
        variant=variant,
        weighting=weighting,
        lists=lists,
        k=args.k,
        node_budget=args.budget,
    )
    result = solve(request)
    _emit(args, dumps_canonical(result.to_obj(include_trace=args.trace)))
    return 0


def cmd_verify(args):
    graph = parse_graph(_read_text(args.graph))
    doc = read_labeling(_read_text(args.labeling))
    variant = VARIANT_FLAGS[args.variant] if args.variant else doc.variant or VARIANT_UNDIRECTED
    k = args.k if args.k is not None else doc.k
    if k is None:
        k = default_extra_labels(graph.n, variant)
    weighting = read_weighting(_read_text(args.weights)) if args.weights else None
    lists = read_lists(_read_text(args.lists)) if args.lists else None
    if variant == VARIANT_ORIENTED:
        report = verify_quasi_antimagic(
            graph, doc.labeling, mode=MODE_ORIENTED, label_bound=graph.m + k
        )
    else:
        if lists is None:
            lists = ListAssignment.uniform_range(graph.edges, graph.m + k)
        report = verify_quasi_antimagic(
            graph,
            doc.labeling,
            weighting,
            mode=MODE_UNDIRECTED,
            lists=lists,
            relax_k2=args.relax_k2,
        )
    _emit(args, dumps_canonical(report.to_obj()))
    return 0 if report.ok else 1


def cmd_certify(args):
    lo, hi = args.n_range
    modes = list(MODES) if args.mode == "both" else [args.mode]
    jobs = [(mode, n) for mode in modes for n in range(lo, hi + 1)]

    def one(job):
        mode, n = job
        return certify_reduction_monomial(n, mode).to_obj()

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(one, jobs))
    else:
        rows = [one(job) for job in jobs]

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["mode", "n", "a", "b", "c", "coefficient", "nonzero"])
        for r in rows:
            writer.writerow([r["mode"], r["n"], *r["abc"], r["coefficient"], r["nonzero"]])
        _emit(args, buf.getvalue())
    else:
        _emit(args, dumps_canonical(rows))
    return 0 if all(r["nonzero"] for r in rows) else 1


def cmd_oracle(args):
    graph = parse_graph(_read_text(args.graph))
    weighting = read_weighting(_read_text(args.weights)) if args.weights else None
    lists = read_lists(_read_text(args.lists)) if args.lists else None
    orientation = None
    if args.orientation:
        odoc = read_labeling(_read_text(args.orientation))
        orientation = odoc.labeling.orientation
    query = oracle_mod.OracleQuery(
        graph=graph,
        variant=args.variant,
        k=args.k,
        weighting=weighting,
        lists=lists,
        mode=args.mode,
        orientation=orientation,
        cap=args.cap,
    )
    result = oracle_mod.brute_force(query)
    obj = {
        "variant": args.variant,
        "k": args.k,
        "mode": args.mode,
        "exists": result.exists,
        "nodes": result.nodes,
    }
    if result.count is not None:
        obj["count"] = result.count
    if args.mode == oracle_mod.MODE_FIND_ONE and result.labeling is not None:
        obj["labeling"] = json.loads(
            write_labeling(result.labeling, k=args.k, variant=args.variant)
        )
    _emit(args, dumps_canonical(obj))
    return 0 if result.exists else 1


def cmd_sweep(args):
    graph = parse_graph(_read_text(args.graph))
    report = oracle_mod.sweep_min_k(
        graph,
        args.variant,
        trials=args.trials,
        seed=args.seed,
        k_max=args.k_max,
        cap=args.cap,
    )
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["variant", "k", "successes", "samples", "is_min"])
        for k, successes, samples in report.per_k:
            writer.writerow([report.variant, k, successes, samples, k == report.min_k])
        _emit(args, buf.getvalue())
    else:
        _emit(args, dumps_canonical(report.to_obj()))
    return 0


def cmd_gen(args):
    if args.family == "random":
        graph = random_graph(
            args.n, edge_prob=args.edge_prob, max_degree=args.max_degree, seed=args.seed
        )
    else:
        graph = FAMILIES[args.family](args.n)
    _emit(args, format_graph(graph))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Constructive antimagic-style graph labelings with exact certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")

    p = sub.add_parser("solve", help="label a graph")
    p.add_argument("graph", help="edge-list file, '-' for stdin")
    p.add_argument("--variant", choices=sorted(VARIANT_FLAGS), default="weighted-list")
    p.add_argument("--weights", help="weighting JSON file")
    p.add_argument("--lists", help="list-assignment JSON file")
    p.add_argument("--k", type=int, default=None, help="override the label budget")
    p.add_argument("--budget", type=int, default=10**7, help="search node budget")
    p.add_argument("--trace", action="store_true", help="include the construction trace")
    add_common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a labeling document")
    p.add_argument("graph")
    p.add_argument("labeling", help="labeling JSON file, '-' for stdin")
    p.add_argument("--variant", choices=sorted(VARIANT_FLAGS), default=None)
    p.add_argument("--weights")
    p.add_argument("--lists")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--relax-k2", action="store_true", help="exempt two-vertex components entirely")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("certify", help="extract extension coefficients over a range of n")
    p.add_argument("--mode", choices=[*MODES, "both"], default="both")
    p.add_argument("--n-range", type=_parse_n_range, default=(4, 14), metavar="A..B")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", help="brute-force a small instance")
    p.add_argument("graph")
    p.add_argument("--variant", choices=oracle_mod.VARIANTS, default=oracle_mod.ANTIMAGIC)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--mode", choices=[oracle_mod.MODE_EXISTS, oracle_mod.MODE_FIND_ONE, oracle_mod.MODE_COUNT], default=oracle_mod.MODE_EXISTS)
    p.add_argument("--weights")
    p.add_argument("--lists")
    p.add_argument("--orientation", help="labeling JSON whose orientation is fixed")
    p.add_argument("--cap", type=int, default=oracle_mod.DEFAULT_CAP)
    add_common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="probe the smallest workable k empirically")
    p.add_argument("graph")
    p.add_argument("--variant", choices=oracle_mod.VARIANTS, default=oracle_mod.QUASI_ANTIMAGIC)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--cap", type=int, default=oracle_mod.DEFAULT_CAP)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gen", help="emit a graph in edge-list form")
    p.add_argument("family", choices=[*sorted(FAMILIES), "random"])
    p.add_argument("n", type=int)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    add_common(p)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None):
    level = os.environ.get("ANTIMAGIC_LOG")
    if level:
        logging.basicConfig(
            stream=sys.stderr,
            level=getattr(logging, level.upper(), logging.INFO),
            format="%(name)s: %(message)s",
        )
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, InfeasibleInstanceError, CertificateError) as exc:
        # the instance was understood but could not be solved or verified
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AntimagicError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
