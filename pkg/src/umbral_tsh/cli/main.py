"""Command-line entry point for umbral-tsh.

Subcommands:
    gen     one polynomial of a classical family (univariate or multivariate)
    tables  every family up to a given degree
    verify  run a verification suite; exit 0 iff every identity holds
    sim     Monte-Carlo corroboration of moments and martingale residuals
    runs    list, show or delete runs recorded with --record

Exit codes: 0 success, 1 internal failure or failed identity, 2 bad
arguments, 3 statistical failure.
"""

import argparse
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from ..exceptions import ParameterError, UnknownNameError
from ..multivar import MULTI_FAMILIES, family_multi
from ..simulation import JumpSpec, ProcessSpec, SimReport, empirical_moments, martingale_mc
from ..storage import DuckDBAdapter, StorageManager
from ..tsh import family_names, get_family, resolve_parameters, umbral
from ..utils import get_provenance, setup_truncating_logger
from .render import (
    OutputRecord,
    RecordedCheck,
    RunDetail,
    RunSummary,
    make_record,
    render_records,
    sim_report_to_csv,
    to_json,
)
from .verification import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_STATISTICAL = 3

FAMILY_FLAGS = ("sigma", "lam", "p", "a")
PROCESS_KINDS = (
    "brownian",
    "poisson",
    "gamma",
    "pascal",
    "compound-poisson",
    "multivariate-brownian",
)


def parse_index(text: str) -> Tuple[int, ...]:
    """'1,2' -> (1, 2)."""
    try:
        index = tuple(int(part) for part in text.split(","))
    except ValueError as e:
        raise ParameterError(f"Multi-index must be comma-separated integers, got '{text}'") from e
    if any(v < 0 for v in index):
        raise ParameterError(f"Multi-index entries must be nonnegative, got {index}")
    return index


def parse_matrix(text: str) -> List[List[str]]:
    """'1,0;0,1' -> [['1', '0'], ['0', '1']]."""
    rows = [[entry.strip() for entry in row.split(",")] for row in text.split(";")]
    if any(len(row) != len(rows) for row in rows) or any("" in row for row in rows):
        raise ParameterError(f"Covariance must be a square matrix like '1,0;0,1', got '{text}'")
    return rows


class CommandRunner:
    """Runs one subcommand and writes its artifact in a single piece."""

    def __init__(self, output: Optional[str] = None, record: Optional[str] = None):
        """Initialize the runner.

        Args:
            output: Write the artifact here instead of stdout
            record: DuckDB file for the run ledger; nothing is recorded when None
        """
        self.output = output
        self.record = record
        self.start_time = datetime.now()

    def emit(self, text: str) -> None:
        if self.output:
            path = Path(self.output)
            if path.parent != Path(""):
                path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            logger.info(f"Wrote {path}")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()

    def store(self, command: str, target: str, checks, parameters: Dict) -> None:
        if not self.record:
            return
        manager = StorageManager(DuckDBAdapter(db_path=self.record))
        manager.record_run(
            command,
            target,
            self.start_time,
            checks,
            parameters={**parameters, "provenance": get_provenance()},
        )

    # --- gen / tables ---

    @staticmethod
    def family_parameters(name: str, args: argparse.Namespace) -> Dict[str, str]:
        given = {key: getattr(args, key) for key in FAMILY_FLAGS if getattr(args, key, None) is not None}
        spec = get_family(name)
        unknown = sorted(set(given) - set(spec.parameters))
        if unknown:
            raise ParameterError(
                f"Family '{spec.name}' takes parameters {sorted(spec.parameters)}, got {unknown}"
            )
        if getattr(args, "symbolic", False):
            return given
        return {**spec.parameters, **given}

    def family_record(self, name: str, k: int, params: Dict[str, str]) -> OutputRecord:
        resolved = resolve_parameters(name, params)
        expr = umbral(name, k, resolved)
        metadata = {key: str(value) for key, value in sorted(resolved.items())}
        return make_record(get_family(name).name, [k], expr, metadata)

    def gen(self, args: argparse.Namespace) -> int:
        if args.index is not None:
            name = args.family.replace("_", "-")
            if name not in MULTI_FAMILIES:
                raise UnknownNameError(
                    f"No multivariate family '{args.family}'; expected one of {list(MULTI_FAMILIES)}"
                )
            index = parse_index(args.index)
            covariance = parse_matrix(args.covariance) if args.covariance else None
            if covariance is not None and (name != "hermite" or len(covariance) != len(index)):
                raise ParameterError("--covariance applies to hermite and must match the index dimension")
            metadata = {"dimension": str(len(index))}
            if covariance is not None:
                metadata["covariance"] = ";".join(",".join(row) for row in covariance)
            records = [make_record(name, index, family_multi(name, index, covariance), metadata)]
        else:
            if args.k is None:
                raise ParameterError("gen needs --k (or --index for a multivariate family)")
            if args.k < 0:
                raise ParameterError(f"Degree must be nonnegative, got {args.k}")
            name = get_family(args.family).name
            records = [self.family_record(name, args.k, self.family_parameters(name, args))]
        self.emit(render_records(records, args.format))
        return EXIT_OK

    def tables(self, args: argparse.Namespace) -> int:
        if args.k < 0:
            raise ParameterError(f"Degree must be nonnegative, got {args.k}")
        names = [get_family(args.family).name] if args.family else family_names()
        records = []
        for name in names:
            params = get_family(name).parameters
            records.extend(self.family_record(name, k, params) for k in range(args.k + 1))
        self.emit(render_records(records, args.format))
        return EXIT_OK

    # --- verify ---

    def verify(self, args: argparse.Namespace) -> int:
        if args.max_degree < 0:
            raise ParameterError(f"--max-degree must be nonnegative, got {args.max_degree}")
        report = run_suite(args.suite, args.max_degree)
        self.store(
            "verify",
            args.suite,
            [(c.name, c.holds, c.witness) for c in report.checks],
            {"max_degree": args.max_degree},
        )
        self.emit(to_json(report))
        if not report.passed:
            failed = sum(1 for c in report.checks if not c.holds)
            logger.error(f"{failed} of {len(report.checks)} identities failed in suite '{args.suite}'")
            return EXIT_FAILURE
        return EXIT_OK

    # --- runs ---

    def runs(self, args: argparse.Namespace) -> int:
        if not Path(args.record).exists():
            raise ParameterError(f"No run ledger at {args.record}")
        manager = StorageManager(DuckDBAdapter(db_path=args.record))
        if args.delete is not None:
            if manager.get_run(args.delete) is None:
                raise ParameterError(f"No run with id {args.delete} in {args.record}")
            manager.delete_run(args.delete)
            logger.info(f"Deleted run {args.delete}")
        if args.show is not None:
            run = manager.get_run(args.show)
            if run is None:
                raise ParameterError(f"No run with id {args.show} in {args.record}")
            detail = RunDetail(
                **RunSummary.model_validate(run).model_dump(),
                parameters=run.parameters,
                checks=[RecordedCheck.model_validate(c) for c in manager.list_run_checks(run.id)],
            )
            self.emit(to_json(detail))
            return EXIT_OK
        self.emit(to_json([RunSummary.model_validate(run) for run in manager.list_runs()]))
        return EXIT_OK

    # --- sim ---

    @staticmethod
    def process_spec(args: argparse.Namespace) -> ProcessSpec:
        jump_fields = {
            field: getattr(args, f"jump_{field}")
            for field in ("value", "low", "high", "mean", "std", "scale")
            if getattr(args, f"jump_{field}") is not None
        }
        jump = None
        if args.jump is not None or jump_fields:
            jump = JumpSpec(kind=args.jump or "point-mass", **jump_fields)
        covariance = None
        if args.covariance is not None:
            covariance = [[float(v) for v in row] for row in parse_matrix(args.covariance)]
        elif args.process == "multivariate-brownian":
            covariance = [[1.0, 0.0], [0.0, 1.0]]
        return ProcessSpec(
            kind=args.process, s=args.s, lam=args.lam, p=args.p, jump=jump, covariance=covariance
        )

    def sim(self, args: argparse.Namespace) -> int:
        spec = self.process_spec(args)
        report = empirical_moments(spec, args.t, args.k, args.n, args.seed, workers=args.workers)
        if args.cond_time is not None:
            residuals = []
            for k in range(args.k + 1):
                child_seed = int(np.random.SeedSequence([args.seed, k + 1]).generate_state(1)[0])
                residual_report = martingale_mc(
                    spec, k, args.cond_time, args.t, args.n, args.n_inner, child_seed, workers=args.workers
                )
                residuals.extend(residual_report.residuals)
            report = report.model_copy(update={"residuals": residuals, "n_inner": args.n_inner})
        text = to_json(report) if args.format == "json" else sim_report_to_csv(report)
        self.store("sim", spec.kind, _sim_checks(report, args.threshold), {"seed": args.seed, "n": args.n})
        self.emit(text)
        if not report.passes(args.threshold):
            logger.error(
                f"Simulation of {spec.kind}: max |z| = {report.max_abs_z():.3f} exceeds {args.threshold}"
            )
            return EXIT_STATISTICAL
        return EXIT_OK


def _sim_checks(report: SimReport, threshold: float):
    for m in report.moments:
        z = m.z_score
        holds = z is not None and abs(z) <= threshold
        yield f"moment {m.index}", holds, None if holds else f"z={z} exact={m.exact} empirical={m.empirical}"
    for r in report.residuals:
        z = r.z_score
        holds = z is not None and abs(z) <= threshold
        yield f"martingale k={r.k}", holds, None if holds else f"z={z} mean={r.mean}"


def _add_family_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sigma", help="Hermite scale (rational, e.g. 1 or 1/2)")
    parser.add_argument("--lambda", dest="lam", help="Intensity for Poisson-Charlier and actuarial")
    parser.add_argument("--p", help="Probability for Krawtchouk and Meixner, in (0, 1)")
    parser.add_argument("--a", help="pseudo-Narumi parameter")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="Write the artifact to this path instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Enable DEBUG logging")

    parser = argparse.ArgumentParser(
        prog="umbral-tsh",
        description="Exact umbral calculus for Lévy processes",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen = subparsers.add_parser("gen", parents=[common], help="Generate one family polynomial")
    gen.add_argument("--family", required=True, help="Family name (see the tables subcommand)")
    gen.add_argument("--k", type=int, help="Degree")
    gen.add_argument("--index", help="Multi-index for multivariate families, e.g. 1,1")
    gen.add_argument("--covariance", help="Covariance for multivariate Hermite, e.g. 1,0;0,1")
    _add_family_flags(gen)
    gen.add_argument(
        "--symbolic", action="store_true", help="Keep unset parameters as indeterminates"
    )
    gen.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    gen.set_defaults(handler=CommandRunner.gen)

    tables = subparsers.add_parser("tables", parents=[common], help="Render family tables")
    tables.add_argument("--k", type=int, default=4, help="Largest degree")
    tables.add_argument("--family", help="Restrict to one family")
    tables.add_argument("--format", choices=("json", "csv", "latex"), default="latex")
    tables.set_defaults(handler=CommandRunner.tables)

    verify = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--max-degree", type=int, default=6)
    verify.add_argument("--record", help="DuckDB file for the run ledger")
    verify.set_defaults(handler=CommandRunner.verify)

    sim = subparsers.add_parser("sim", parents=[common], help="Simulate a Lévy process")
    sim.add_argument("--process", required=True, choices=PROCESS_KINDS)
    sim.add_argument("--s", type=float, default=1.0, help="Brownian scale")
    sim.add_argument("--lambda", dest="lam", type=float, default=1.0, help="Intensity")
    sim.add_argument("--p", type=float, default=0.5, help="Pascal probability")
    sim.add_argument("--covariance", help="Covariance for multivariate Brownian motion")
    sim.add_argument(
        "--jump", choices=("point-mass", "uniform", "normal", "exponential"), help="Jump law"
    )
    for field in ("value", "low", "high", "mean", "std", "scale"):
        sim.add_argument(f"--jump-{field}", dest=f"jump_{field}", type=float)
    sim.add_argument("--t", type=float, default=1.0, help="Time horizon")
    sim.add_argument("--k", type=int, default=4, help="Largest moment degree")
    sim.add_argument("--n", type=int, default=100_000, help="Number of samples")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--cond-time", type=float, help="Conditioning time s for martingale residuals")
    sim.add_argument("--n-inner", type=int, default=16, help="Inner samples per conditioning value")
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--threshold", type=float, default=5.0, help="Largest accepted |z|")
    sim.add_argument("--format", choices=("json", "csv"), default="json")
    sim.add_argument("--record", help="DuckDB file for the run ledger")
    sim.set_defaults(handler=CommandRunner.sim)

    runs = subparsers.add_parser("runs", parents=[common], help="Inspect the run ledger")
    runs.add_argument("--record", required=True, help="DuckDB file written by verify or sim")
    runs.add_argument("--show", type=int, help="Print one run with its checks")
    runs.add_argument("--delete", type=int, help="Delete a run and its checks, then list the rest")
    runs.set_defaults(handler=CommandRunner.runs)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    setup_truncating_logger(
        "umbral_tsh", level=logging.DEBUG if args.verbose else logging.INFO
    )
    runner = CommandRunner(output=args.output, record=getattr(args, "record", None))
    try:
        return args.handler(runner, args)
    except (ParameterError, UnknownNameError, ValidationError) as e:
        logger.error(f"Invalid arguments: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
