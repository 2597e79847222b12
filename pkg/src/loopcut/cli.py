"""Command line interface: ``loopcut solve | gen | experiment``.

Reports go to standard output, logs to standard error. Exit status is 0 on
success, 1 for bad input or configuration and 2 when a solver fails.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import __version__
from .core.config import LoopcutConfig, parse_domain_range
from .core.errors import LoopcutError, ValidationError
from .core.logging import configure_logging, get_logger
from .models.results import SolveResult
from .services.experiments import run_experiment, run_preset, write_batch
from .services.instance_gen import instance_spec
from .services.pipeline import ALGORITHMS, loop_cutset, solve_graph
from .utils.textformat import format_weight, load_graph, load_network

logger = get_logger(__name__)


def create_argument_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopcut",
        description="Loop cutsets and weighted vertex feedback sets",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  loopcut solve --input net.txt --kind network --algorithm mga
  loopcut gen --nodes 15 --edges 25 --domains 2:2 --seed 1 --count 100 --out runs/15-25
  loopcut experiment --dir runs/15-25 --algorithms ga,mga --exact
  loopcut experiment --preset exact-15-25 --out runs/exact-15-25
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="Configuration YAML file (default: environment)")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Override the configured logging level",
    )
    parser.add_argument("--log-json", action="store_true", help="Render logs as JSON")
    commands = parser.add_subparsers(dest="command", required=True)

    solve = commands.add_parser("solve", help="Solve one graph or network file")
    solve.add_argument("--input", required=True, help="Graph or network text file")
    solve.add_argument("--kind", choices=["network", "graph"], default="network")
    solve.add_argument("--algorithm", choices=ALGORITHMS, help="Default: configured algorithm")
    solve.add_argument("--skip-phase2", action="store_true", help="MGA: keep the phase 1 set")
    solve.add_argument("--format", choices=["tsv", "json"], help="Report format")
    solve.add_argument("--trace", action="store_true", help="Include the per-iteration trace")

    gen = commands.add_parser("gen", help="Generate seeded random instances")
    gen.add_argument("--nodes", type=int, required=True)
    gen.add_argument("--edges", type=int, required=True)
    gen.add_argument("--domains", default="2:2", help="Domain size range LO:HI")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--kind", choices=["network", "graph"], default="network")
    gen.add_argument("--out", required=True, help="Output directory")

    experiment = commands.add_parser("experiment", help="Run a batch comparison")
    source = experiment.add_mutually_exclusive_group(required=True)
    source.add_argument("--dir", help="Directory of network files")
    source.add_argument("--preset", help="Named preset to generate and run")
    experiment.add_argument("--out", help="Where a preset's batch is written")
    experiment.add_argument("--presets", help="Presets YAML (default: config/experiments.yaml)")
    experiment.add_argument("--algorithms", default="ga,mga", help="Comma-separated list")
    experiment.add_argument("--exact", action="store_true", help="Also compute the optimum")
    experiment.add_argument("--format", choices=["tsv", "json"], help="Report format")
    experiment.add_argument("--workers", type=int, help="Parallel worker processes")

    return parser


def load_config(args: argparse.Namespace) -> LoopcutConfig:
    config = LoopcutConfig.from_file(args.config) if args.config else LoopcutConfig.from_environment()
    if args.log_level:
        config.log_level = args.log_level
    if args.log_json:
        config.log_json = True
    return config


def cmd_solve(args: argparse.Namespace, config: LoopcutConfig, out: TextIO) -> int:
    algorithm = args.algorithm or config.default_algorithm
    if args.kind == "network":
        result = loop_cutset(load_network(args.input), algorithm, config=config, skip_phase2=args.skip_phase2)
    else:
        result = solve_graph(load_graph(args.input), algorithm, config=config, skip_phase2=args.skip_phase2)

    if (args.format or config.report_format) == "json":
        exclude = None if args.trace else {"trace", "charges"}
        out.write(result.model_dump_json(indent=2, exclude=exclude) + "\n")
    else:
        out.write(format_solve_tsv(result, trace=args.trace))
    return 0


def format_solve_tsv(result: SolveResult, trace: bool = False) -> str:
    lines = [
        f"algorithm\t{result.algorithm}",
        f"members\t{' '.join(result.vertices)}",
        f"set_size\t{result.size}",
        f"weight\t{format_weight(result.total_weight)}",
    ]
    if result.instance_count is not None:
        lines.append(f"instances\t{result.instance_count}")
        lines.append(f"instances_log\t{format_weight(result.instance_count_log or 0.0)}")
    if result.phase2_removed:
        lines.append(f"phase2_removed\t{' '.join(result.phase2_removed)}")
    if trace:
        lines.append("# iteration\tvertex\tratio\tremoved_edges")
        for record in result.trace:
            removed = ",".join(str(e) for e in record.removed_edges)
            lines.append(f"{record.iteration}\t{record.vertex}\t{record.ratio!r}\t{removed}")
    return "\n".join(lines) + "\n"


def cmd_gen(args: argparse.Namespace, config: LoopcutConfig, out: TextIO) -> int:
    try:
        lo, hi = parse_domain_range(args.domains)
    except ValueError as e:
        raise ValidationError(str(e)) from e
    spec = instance_spec(
        n_vertices=args.nodes,
        n_edges=args.edges,
        domain_lo=lo,
        domain_hi=hi,
        seed=args.seed,
        count=args.count,
    )
    paths = write_batch(spec, args.out, kind=args.kind)
    out.write(f"wrote {len(paths)} {args.kind} files to {args.out}\n")
    return 0


def cmd_experiment(args: argparse.Namespace, config: LoopcutConfig, out: TextIO) -> int:
    if args.workers is not None:
        if args.workers < 1:
            raise ValidationError(f"--workers must be >= 1, got {args.workers}")
        config.workers = args.workers
    if args.preset:
        if not args.out:
            raise ValidationError("--preset needs --out for the generated batch")
        report = run_preset(args.preset, args.out, config=config, presets_path=args.presets)
    else:
        algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
        report = run_experiment(args.dir, algorithms, args.exact, config=config)

    if (args.format or config.report_format) == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_tsv())
    return 0


COMMANDS = {"solve": cmd_solve, "gen": cmd_gen, "experiment": cmd_experiment}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    """Run the CLI and return its exit status."""
    out = out or sys.stdout
    args = create_argument_parser().parse_args(argv)
    try:
        config = load_config(args)
        configure_logging(level=config.log_level, format_json=config.log_json)
        return COMMANDS[args.command](args, config, out)
    except LoopcutError as e:
        logger.error("Command failed", command=args.command, error=str(e), error_type=type(e).__name__)
        sys.stderr.write(f"error: {e}\n")
        return e.exit_code
    except Exception as e:
        logger.exception("Unexpected error occurred", command=args.command)
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
