"""
Command-line entry point: densities, the gl_n table, bound reports and the
verification suites.

    repdensity density --algebra gl:3 --m 2
    repdensity table --nmax 8 --m 2 3 --format csv
    repdensity bounds --algebra sd:sl:4 --m 2
    repdensity verify counterexample --r 1000
"""

import argparse
import json
import logging
import sys
from collections.abc import Sequence

from ..bounds import BoundChecker, BoundReport
from ..config import FORMATS, RunConfig
from ..density_engine import DensityEngine, ExactDensity
from ..exceptions import BudgetExceededError, DensityError
from ..root_systems import AlgebraId, VariantKind, VariantSpec
from ..verification import SUITES, SuiteReport, run_suites
from .labels import LABEL_HELP, parse_variant
from .render import (
    OutputRecord,
    render,
    render_bounds_markdown,
    render_csv,
    render_json,
    render_table_markdown,
)

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

logger = logging.getLogger(__name__)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="YAML run configuration")
    common.add_argument("--workers", type=_positive, help="Processes used for enumeration")
    common.add_argument(
        "--budget-points", type=_positive, help="Largest fundamental domain to enumerate"
    )
    common.add_argument(
        "--cache-dir", help="Density cache directory (default: $REPDENSITY_CACHE_DIR)"
    )
    common.add_argument("--format", choices=FORMATS, help="Output format")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only")

    parser = argparse.ArgumentParser(
        prog="repdensity",
        description=(
            "Exact densities of irreducible representations whose degree is not divisible by m."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    density = commands.add_parser("density", parents=[common], help="Exact d_m of a variant")
    density.add_argument("--algebra", "--variant", dest="variant", required=True, help=LABEL_HELP)
    density.add_argument("--m", type=_positive, nargs="+", required=True, help="One or more moduli")
    density.add_argument(
        "--direct", action="store_true", help="Enumerate the composite period once"
    )

    table = commands.add_parser("table", parents=[common], help="d_m(gl_n) for n = 1..nmax")
    table.add_argument("--nmax", type=_positive, help="Largest n")
    table.add_argument("--m", type=_positive, nargs="*", help="Row moduli")

    bounds = commands.add_parser(
        "bounds", parents=[common], help="Exact density against its bounds"
    )
    bounds.add_argument("--algebra", "--variant", dest="variant", required=True, help=LABEL_HELP)
    bounds.add_argument("--m", type=_positive, nargs="+", required=True, help="One or more moduli")
    bounds.add_argument(
        "--no-exact", action="store_true", help="Report the bounds without enumerating"
    )

    verify = commands.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument(
        "suites", nargs="*", metavar="SUITE", help=f"One of {sorted(SUITES)}; default all"
    )
    verify.add_argument(
        "--r", "--radius", dest="radius", type=_positive, help="Counterexample radius"
    )
    verify.add_argument("--samples", type=_positive, help="Random samples per property")
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.INFO if args.command == "verify" else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger("repdensity").setLevel(level)


def _load_config(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(args.config) if args.config else RunConfig.default()
    for warning in config.warnings:
        logger.warning(f"{config.path.name}: {warning}")
    return config.override(
        workers=args.workers,
        budget_points=args.budget_points,
        cache_dir=args.cache_dir,
        table_format=args.format,
        samples=getattr(args, "samples", None),
        counterexample_radius=getattr(args, "radius", None),
    )


def compute(
    engine: DensityEngine, variant: VariantSpec, m: int, direct: bool = False
) -> ExactDensity:
    """Density of a variant, with the subfamily inequalities asserted."""
    if direct:
        return engine.density(variant, m, mode="direct")
    if variant.kind is VariantKind.GROUP:
        assert variant.group is not None
        return engine.density_group(variant.group, m)
    if variant.kind is VariantKind.SELF_DUAL:
        return engine.density_selfdual(variant.algebra, m)
    if variant.kind is VariantKind.ORTHOGONAL:
        return engine.density_orthogonal(variant.algebra, m)
    return engine.density(variant, m)


def cmd_density(args: argparse.Namespace, config: RunConfig) -> int:
    variant = parse_variant(args.variant)
    engine = DensityEngine(config.engine)
    records = [OutputRecord(compute(engine, variant, m, args.direct)) for m in args.m]
    fmt = args.format or "markdown"
    sys.stdout.write(render(records, fmt))
    return 0


def cmd_table(args: argparse.Namespace, config: RunConfig) -> int:
    nmax = args.nmax or config.table.nmax
    moduli = list(args.m) if args.m is not None else list(config.table.m)
    ranks = list(range(1, nmax + 1))
    engine = DensityEngine(config.engine)

    records = []
    for m in moduli:
        for n in ranks:
            records.append(OutputRecord(engine.density(AlgebraId.gl(n), m)))
            logger.info(f"{records[-1].density}")

    fmt = config.table.format
    if fmt == "csv":
        sys.stdout.write(render_csv(records))
    elif fmt == "json":
        sys.stdout.write(render_json(records) + "\n")
    else:
        sys.stdout.write(render_table_markdown(records, ranks, moduli))
    return 0


def cmd_bounds(args: argparse.Namespace, config: RunConfig) -> int:
    variant = parse_variant(args.variant)
    engine = DensityEngine(config.engine)
    checker = BoundChecker()

    reports: list[BoundReport] = []
    records: list[OutputRecord] = []
    for m in args.m:
        result = None
        if not args.no_exact:
            try:
                result = compute(engine, variant, m)
            except BudgetExceededError as e:
                logger.warning(f"{variant.label}, m={m}: {e}; reporting bounds only")
        report = checker.check(variant, result, m=m)
        reports.append(report)
        if result is not None:
            records.append(OutputRecord(result, report))
            reports += checker.check_union(variant, result)

    fmt = args.format or "markdown"
    if fmt == "json":
        sys.stdout.write(json.dumps([report.to_dict() for report in reports], indent=2) + "\n")
    elif fmt == "csv":
        sys.stdout.write(render_csv(records))
    else:
        sys.stdout.write(render_bounds_markdown(reports))
    return 0 if all(report.satisfied for report in reports) else 1


def _print_suite(report: SuiteReport) -> None:
    status = "OK" if report.passed else f"FAIL, {len(report.failures())} failed"
    print(f"[{report.suite}] {status} ({len(report.checks)} checks)")
    for check in report.checks:
        if check.passed:
            logger.debug(f"{report.suite}: {check.name}: {check.detail}")
        else:
            print(f"  - {check.name}: {check.detail}", file=sys.stderr)
            if check.witness is not None:
                print(f"    witness: {check.witness}", file=sys.stderr)


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    names = list(args.suites) or list(SUITES)
    engine = DensityEngine(config.engine)
    reports = run_suites(names, config.verify, engine)
    if args.format == "json":
        sys.stdout.write(json.dumps([report.to_dict() for report in reports], indent=2) + "\n")
    else:
        for report in reports:
            _print_suite(report)
    return 0 if all(report.passed for report in reports) else 1


COMMANDS = {
    "density": cmd_density,
    "table": cmd_table,
    "bounds": cmd_bounds,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args)
    try:
        config = _load_config(args)
        return COMMANDS[args.command](args, config)
    except (DensityError, ValueError, FileNotFoundError) as e:
        print(f"[error] {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
