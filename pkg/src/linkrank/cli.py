"""``linkrank`` command line.

Exit codes: 0 ok, 1 usage, 2 I/O, 3 parse, 4 validation (including empty
graphs), 5 non-convergence.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from .corpus_io import (
    ParseError,
    ValidationError,
    export_ranks,
    fixture_bytes,
    format_score,
    load_corpus_path,
    paper_fixture,
)
from .hybrid_query import HybridWeights, rank_query
from .link_rank import (
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_TOLERANCE,
    DampingParams,
    IterationParams,
    NonFiniteRank,
    damped_pagerank,
    simplified_pagerank,
)
from .webgraph import EmptyGraph, GraphError
from .weighted_rank import vol_pagerank, weighted_pagerank, wpr_vol

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_PARSE, EXIT_VALIDATION, EXIT_NONCONVERGENCE = range(6)

FIXTURE_NAMES = ("paper-fixture", "fixture")

ALGORITHMS = {
    "pagerank": damped_pagerank,
    "wpr": weighted_pagerank,
    "vol": vol_pagerank,
    "wprvol": wpr_vol,
}
COMPARE_ORDER = ("pagerank", "wpr", "vol", "wprvol")


class UsageError(Exception):
    pass


class NonConvergence(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _unit_interval(text):
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in [0, 1], got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text}")
    return value


def _non_negative_float(text):
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linkrank", description="Link-analysis and hybrid query ranking.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def corpus_opt(p):
        p.add_argument("--corpus", default="paper-fixture",
                       help="corpus file, or 'paper-fixture' for the bundled sites")

    def iter_opts(p):
        p.add_argument("--tolerance", type=_positive_float, default=DEFAULT_TOLERANCE)
        p.add_argument("--max-iterations", type=_positive_int, default=DEFAULT_MAX_ITERATIONS)

    def format_opt(p):
        p.add_argument("--format", choices=("tabular", "structured"), default="tabular")

    p = sub.add_parser("rank", help="rank pages with a PageRank variant")
    corpus_opt(p)
    p.add_argument("--algorithm", choices=("simplified",) + COMPARE_ORDER, default="pagerank")
    p.add_argument("--d", type=_unit_interval, default=0.85)
    p.add_argument("--c-norm", type=_positive_float, default=1.0,
                   help="normalization factor for --algorithm simplified")
    iter_opts(p)
    format_opt(p)

    p = sub.add_parser("query", help="hybrid metadata/degree/hits ranking for a query")
    corpus_opt(p)
    p.add_argument("--text", required=True)
    defaults = HybridWeights()
    p.add_argument("--s", type=_non_negative_float, default=defaults.s)
    p.add_argument("--vl", type=_non_negative_float, default=defaults.vl)
    p.add_argument("--ga", type=_non_negative_float, default=defaults.ga)
    p.add_argument("--d", type=_unit_interval, default=defaults.d)
    p.add_argument("--hits-divisor", type=_positive_float, default=defaults.hits_divisor)
    format_opt(p)

    p = sub.add_parser("compare", help="side-by-side scores of the damped variants")
    corpus_opt(p)
    p.add_argument("--d", type=_unit_interval, default=0.85)
    iter_opts(p)
    format_opt(p)

    p = sub.add_parser("validate", help="check that a corpus loads cleanly")
    p.add_argument("path", nargs="?")
    p.add_argument("--corpus", dest="corpus_flag")

    p = sub.add_parser("fixture", help="write the bundled corpus to a file")
    p.add_argument("--out", required=True)
    p.add_argument("--force", action="store_true", help="overwrite an existing file")
    return parser


def _load(name):
    if name in FIXTURE_NAMES:
        return paper_fixture()
    return load_corpus_path(name)


def _check(rv):
    if not rv.converged:
        raise NonConvergence(
            f"{rv.algorithm} did not converge within {rv.iterations_used} iterations"
        )
    return rv


def cmd_rank(args, out):
    g = _load(args.corpus)
    params = IterationParams(args.tolerance, args.max_iterations)
    if args.algorithm == "simplified":
        rv = simplified_pagerank(g, args.c_norm, params)
    else:
        rv = ALGORITHMS[args.algorithm](g, DampingParams(args.d), params)
    out.write(export_ranks(_check(rv), args.format))


def cmd_query(args, out):
    if not args.text.strip():
        raise UsageError("--text must be non-empty")
    g = _load(args.corpus)
    w = HybridWeights(args.s, args.vl, args.ga, args.d, args.hits_divisor)
    out.write(export_ranks(rank_query(g, args.text, w), args.format))


def compare_table(g, d, params):
    """Per-page score and rank position under each damped variant."""
    if len(g) == 0:
        raise EmptyGraph("cannot rank an empty graph")
    results = {name: _check(ALGORITHMS[name](g, DampingParams(d), params))
               for name in COMPARE_ORDER}
    positions = {name: {page: r for r, page, _ in rv.ranked()}
                 for name, rv in results.items()}
    return [
        {
            "page": page,
            **{name: results[name][page] for name in COMPARE_ORDER},
            **{f"{name}_rank": positions[name][page] for name in COMPARE_ORDER},
        }
        for page in g.page_ids
    ]


def cmd_compare(args, out):
    g = _load(args.corpus)
    rows = compare_table(g, args.d, IterationParams(args.tolerance, args.max_iterations))
    if args.format == "structured":
        out.write((json.dumps({"d": args.d, "rows": rows}, indent=2) + "\n").encode())
        return
    cols = ["page", *COMPARE_ORDER, *(f"{n}_rank" for n in COMPARE_ORDER)]
    buf = io.StringIO()
    buf.write("\t".join(cols) + "\n")
    for row in rows:
        cells = [row["page"]]
        cells += [format_score(row[n]) for n in COMPARE_ORDER]
        cells += [str(row[f"{n}_rank"]) for n in COMPARE_ORDER]
        buf.write("\t".join(cells) + "\n")
    out.write(buf.getvalue().encode("utf-8"))


def cmd_validate(args, out):
    name = args.path or args.corpus_flag
    if name is None:
        raise UsageError("validate needs a corpus path")
    _load(name)
    out.write(b"OK\n")


def cmd_fixture(args, out):
    mode = "wb" if args.force else "xb"
    with open(args.out, mode) as fh:
        fh.write(fixture_bytes())


COMMANDS = {
    "rank": cmd_rank,
    "query": cmd_query,
    "compare": cmd_compare,
    "validate": cmd_validate,
    "fixture": cmd_fixture,
}


def main(argv=None, stdout=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    out = stdout if stdout is not None else sys.stdout.buffer
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"linkrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"linkrank: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParseError as exc:
        print(f"linkrank: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, GraphError) as exc:
        print(f"linkrank: validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (NonConvergence, NonFiniteRank) as exc:
        print(f"linkrank: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    out.flush()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
