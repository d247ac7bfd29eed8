"""Command-line entry point for clustervar.

Sub-commands:
    analyze   Estimate tau_hat and its variance by all three routes.
    simulate  Draw a synthetic cluster-randomized experiment to CSV.
    check     Equivalence sweep over consecutive seeds.
    coverage  Monte Carlo confidence-interval coverage study.

Exit statuses:
    0  success
    1  input or parameter error
    2  the variance routes disagree beyond tolerance
"""

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any, NoReturn, TextIO

from clustervar import __version__
from clustervar.application.dtos import OutputEnvelope
from clustervar.application.use_cases import (
    AnalyzeExperiment,
    CheckEquivalence,
    RunCoverageStudy,
    SimulateExperiment,
)
from clustervar.domain.exceptions import DomainError
from clustervar.domain.services import DEFAULT_CI_LEVEL, DEFAULT_TOLERANCE
from clustervar.domain.value_objects import AssignmentScheme, MomentMode, SimConfig
from clustervar.infrastructure.files import LocalFileStore
from clustervar.infrastructure.rng import NumpyRandomSourceFactory
from clustervar.interface_adapters.adapters import CsvExperimentRepository
from clustervar.interface_adapters.presenters import render_json, render_table

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_EQUIVALENCE_VIOLATION = 2

DEFAULT_SEED = 1


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all sub-commands."""
    parser = _ArgumentParser(
        prog="clustervar",
        description=(
            "Variance of the average treatment effect in cluster-randomized "
            "experiments: sandwich, simplified, and delta-method estimators."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-v info, -vv debug)",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="analyze an experiment CSV")
    analyze.add_argument("--input", required=True, help="CSV with cluster_id,w,y")
    analyze.add_argument("--ci-level", type=float, default=DEFAULT_CI_LEVEL)
    analyze.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    analyze.add_argument(
        "--mode",
        choices=[mode.value for mode in MomentMode],
        default=MomentMode.POPULATION.value,
    )
    _add_format(analyze)

    simulate = commands.add_parser("simulate", help="write a synthetic experiment")
    _add_simulation_arguments(simulate)
    simulate.add_argument("--output", required=True, help="CSV file to write")
    _add_format(simulate)

    check = commands.add_parser("check", help="run an equivalence sweep")
    _add_simulation_arguments(check)
    check.add_argument("--seeds", type=int, default=1000)
    check.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    check.add_argument("--workers", type=int, default=1)
    _add_format(check)

    coverage = commands.add_parser("coverage", help="run a coverage study")
    _add_simulation_arguments(coverage)
    coverage.add_argument("--replications", type=int, default=2000)
    coverage.add_argument("--ci-level", type=float, default=DEFAULT_CI_LEVEL)
    coverage.add_argument("--workers", type=int, default=1)
    _add_format(coverage)

    return parser


def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    """Run the command line and return the exit status.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:].
        stdout: Stream for reports; defaults to sys.stdout.
    """
    out = stdout if stdout is not None else sys.stdout
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)

    handlers = {
        "analyze": _run_analyze,
        "simulate": _run_simulate,
        "check": _run_check,
        "coverage": _run_coverage,
    }
    parameters = _parameters(args)
    try:
        envelope, status = handlers[args.command](args, parameters)
    except DomainError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        envelope = OutputEnvelope(
            tool_version=__version__,
            command=args.command,
            parameters=parameters,
            result=None,
            error={"type": type(e).__name__, "message": str(e)},
        )
        status = EXIT_INPUT_ERROR

    if status == EXIT_EQUIVALENCE_VIOLATION:
        print("error: variance estimates disagree beyond tolerance", file=sys.stderr)
    renderer = render_json if args.format == "json" else render_table
    out.write(renderer(envelope))
    return status


def _run_analyze(
    args: argparse.Namespace, parameters: dict[str, Any]
) -> tuple[OutputEnvelope, int]:
    use_case = AnalyzeExperiment(CsvExperimentRepository(LocalFileStore()))
    output = use_case.execute(
        AnalyzeExperiment.Input(
            location=args.input,
            ci_level=args.ci_level,
            tol=args.tol,
            mode=MomentMode.from_string(args.mode),
        )
    )
    envelope = _envelope(args, parameters, output.report, output.warnings)
    status = EXIT_OK if output.within_tolerance else EXIT_EQUIVALENCE_VIOLATION
    return envelope, status


def _run_simulate(
    args: argparse.Namespace, parameters: dict[str, Any]
) -> tuple[OutputEnvelope, int]:
    use_case = SimulateExperiment(
        NumpyRandomSourceFactory(), CsvExperimentRepository(LocalFileStore())
    )
    output = use_case.execute(
        SimulateExperiment.Input(config=_sim_config(args), location=args.output)
    )
    envelope = _envelope(
        args, parameters, output.summary, output.warnings, output.metadata
    )
    return envelope, EXIT_OK


def _run_check(
    args: argparse.Namespace, parameters: dict[str, Any]
) -> tuple[OutputEnvelope, int]:
    use_case = CheckEquivalence(NumpyRandomSourceFactory())
    output = use_case.execute(
        CheckEquivalence.Input(
            config=_sim_config(args),
            n_seeds=args.seeds,
            tol=args.tol,
            workers=args.workers,
        )
    )
    summary = output.summary
    warnings: tuple[str, ...] = ()
    if not summary.within_tolerance:
        warnings = (
            f"seed {summary.worst_seed} gives max_rel_discrepancy "
            f"{summary.max_rel_discrepancy:.3e} > tol {summary.tolerance:.3e}; "
            f"reproduce with: clustervar simulate --seed {summary.worst_seed}",
        )
    envelope = _envelope(args, parameters, summary, warnings, output.metadata)
    status = EXIT_OK if summary.within_tolerance else EXIT_EQUIVALENCE_VIOLATION
    return envelope, status


def _run_coverage(
    args: argparse.Namespace, parameters: dict[str, Any]
) -> tuple[OutputEnvelope, int]:
    use_case = RunCoverageStudy(NumpyRandomSourceFactory())
    output = use_case.execute(
        RunCoverageStudy.Input(
            config=_sim_config(args),
            replications=args.replications,
            ci_level=args.ci_level,
            workers=args.workers,
        )
    )
    envelope = _envelope(
        args, parameters, output.result, output.warnings, output.metadata
    )
    return envelope, EXIT_OK


def _add_simulation_arguments(parser: argparse.ArgumentParser) -> None:
    defaults = SimConfig()
    parser.add_argument("--clusters", type=int, default=defaults.n_clusters)
    parser.add_argument("--mean-size", type=float, default=defaults.mean_cluster_size)
    parser.add_argument("--rate-low", type=float, default=defaults.rate_low)
    parser.add_argument("--rate-high", type=float, default=defaults.rate_high)
    parser.add_argument(
        "--assignment",
        choices=["alternating", "bernoulli"],
        default="alternating",
    )
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["json", "table"], default="table")


def _sim_config(args: argparse.Namespace) -> SimConfig:
    return SimConfig(
        n_clusters=args.clusters,
        mean_cluster_size=args.mean_size,
        rate_low=args.rate_low,
        rate_high=args.rate_high,
        assignment=AssignmentScheme.from_string(args.assignment),
        seed=args.seed,
    )


def _parameters(args: argparse.Namespace) -> dict[str, Any]:
    """Echo every effective parameter, in declaration order."""
    return {
        name: value
        for name, value in vars(args).items()
        if name not in ("command", "verbose")
    }


def _envelope(
    args: argparse.Namespace,
    parameters: dict[str, Any],
    result: Any,
    warnings: Sequence[str] = (),
    metadata: dict[str, str] | None = None,
) -> OutputEnvelope:
    return OutputEnvelope(
        tool_version=__version__,
        command=args.command,
        parameters=parameters,
        result=result,
        warnings=tuple(warnings),
        metadata=metadata or {},
    )


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


if __name__ == "__main__":
    raise SystemExit(main())
