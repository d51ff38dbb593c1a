"""Command-line entry point: python -m src.pipeline.cli <command> ..."""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace

from src.enumeration.genfunc import (
    GraphCountVector,
    multigraph_series,
    simple_genfunc_det,
    simple_genfunc_elementwise,
    simple_genfunc_harary,
)
from src.errors import ConsistencyError, GuardError
from src.groups.cycle_index import pair_cycle_index
from src.oracle.brute import brute_multigraph_counts, brute_simple_counts
from src.pipeline.config import OUTPUT_FORMATS, EnumerationConfig, EnvSettings, resolve_config
from src.pipeline.formatting import render_counts, render_cycle_index
from src.pipeline.logging import log_error, log_run, set_level
from src.pipeline.verify import SUITES, run_verify

SIMPLE_METHODS = ("det", "harary", "element", "brute")
MULTI_METHODS = ("molien", "brute")

EXIT_OK = 0
EXIT_CONSISTENCY = 1
EXIT_USAGE = 2


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        description="Exact generating functions of simple graphs and multigraphs counted by edges."
    )
    parser.add_argument("--config", type=str, default=None, help="Path to enumeration config JSON (default: $GRAPHGF_CONFIG)")
    parser.add_argument("--jobs", type=int, default=None, help="Worker count for class-summed pipelines (overrides config)")
    sub = parser.add_subparsers(dest="command", required=True)

    simple = sub.add_parser("simple", help="Print g_n(z), simple graphs by edge count")
    simple.add_argument("--n", type=int, required=True, help="Number of vertices")
    simple.add_argument("--method", choices=SIMPLE_METHODS, default="det", help="Computation path")
    simple.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")

    multi = sub.add_parser("multi", help="Print m_n(z) up to z^max-degree, multigraphs by edge count")
    multi.add_argument("--n", type=int, required=True, help="Number of vertices")
    multi.add_argument("--max-degree", type=int, default=None, help="Series cutoff (default: C(n, 2))")
    multi.add_argument("--method", choices=MULTI_METHODS, default="molien", help="Computation path")
    multi.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")

    verify = sub.add_parser("verify", help="Cross-check every pipeline and identity at n")
    verify.add_argument("--n", type=int, required=True, help="Number of vertices")
    verify.add_argument(
        "--suites",
        nargs="+",
        default=["all"],
        help=f"Suites to run: {', '.join(SUITES)} or all (comma or space separated)",
    )
    verify.add_argument("--json", action="store_true", help="Print the report as JSON")

    cycle = sub.add_parser("cycle-index", help="Print the cycle index of the pair group")
    cycle.add_argument("--n", type=int, required=True, help="Number of vertices")
    cycle.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="Output format")

    return parser.parse_args(argv)


def _simple(args: argparse.Namespace, config: EnumerationConfig) -> GraphCountVector:
    if args.method == "det":
        return simple_genfunc_det(args.n, config=config)
    if args.method == "harary":
        return simple_genfunc_harary(args.n)
    if args.method == "element":
        return simple_genfunc_elementwise(args.n, config=config)
    return brute_simple_counts(args.n, config=config)


def cmd_simple(args: argparse.Namespace, config: EnumerationConfig, fmt: str) -> tuple[int, str]:
    vector = _simple(args, config)
    return EXIT_OK, render_counts(args.n, vector.a, fmt)


def cmd_multi(args: argparse.Namespace, config: EnumerationConfig, fmt: str) -> tuple[int, str]:
    if args.method == "brute":
        degree = args.max_degree if args.max_degree is not None else args.n * (args.n - 1) // 2
        series = brute_multigraph_counts(args.n, degree, config=config)
    else:
        series = multigraph_series(args.n, args.max_degree, config=config)
    return EXIT_OK, render_counts(args.n, series.c, fmt)


def cmd_verify(args: argparse.Namespace, config: EnumerationConfig, fmt: str) -> tuple[int, str]:
    """Exit 0 iff every selected identity holds; the report is text or JSON, never csv."""
    suites = [s for token in args.suites for s in token.split(",") if s]
    report = run_verify(args.n, suites, config=config)
    text = report.model_dump_json(indent=2) + "\n" if args.json else report.render()
    return (EXIT_OK if report.passed else EXIT_CONSISTENCY), text


def cmd_cycle_index(args: argparse.Namespace, config: EnumerationConfig, fmt: str) -> tuple[int, str]:
    if args.n < 1:
        raise ValueError(f"n must be >= 1, got {args.n}")
    return EXIT_OK, render_cycle_index(args.n, pair_cycle_index(args.n), fmt)


COMMANDS = {
    "simple": cmd_simple,
    "multi": cmd_multi,
    "verify": cmd_verify,
    "cycle-index": cmd_cycle_index,
}


def run_command(args: argparse.Namespace, config: EnumerationConfig) -> tuple[int, str]:
    """Execute one parsed command; returns (exit code, stdout text)."""
    fmt = getattr(args, "format", None) or config.output.default_format
    return COMMANDS[args.command](args, config, fmt)


def main(argv: list[str] | None = None) -> int:
    args = parse_args(argv)
    start = time.perf_counter()

    try:
        settings = EnvSettings()
        set_level(settings.log_level)
        config = resolve_config(args.config)
        if args.jobs is not None:
            config = replace(config, parallel=replace(config.parallel, n_jobs=args.jobs))
    except (FileNotFoundError, ValueError) as e:
        print(f"[ERROR] configuration: {e}", file=sys.stderr)
        log_error(str(e), "config", command=args.command)
        return EXIT_USAGE

    try:
        code, text = run_command(args, config)
    except GuardError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        log_error(str(e), "guard", command=args.command)
        code, text = EXIT_USAGE, ""
    except ValueError as e:
        print(f"[ERROR] {e}", file=sys.stderr)
        log_error(str(e), "invalid_input", command=args.command)
        code, text = EXIT_USAGE, ""
    except ConsistencyError as e:
        print(f"[ERROR] internal consistency failure: {e}", file=sys.stderr)
        log_error(str(e), "consistency", command=args.command, exc_info=e)
        code, text = EXIT_CONSISTENCY, ""

    sys.stdout.write(text)
    log_run(
        args.command,
        args.n,
        (time.perf_counter() - start) * 1000.0,
        code,
        method=getattr(args, "method", None),
    )
    return code


if __name__ == "__main__":
    raise SystemExit(main())
