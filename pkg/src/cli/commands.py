"""
Command-line front end.

Payloads go to standard output (JSON, CSV or a text table); logs and errors
go to standard error. Exit codes: 0 success, 1 verification failure or
diverged run, 2 usage error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from catalog import get, list_methods
from conditions.report import verify_report
from config.settings import WsoConfig
from construct.tools import iterated_payload, minimal_payload
from core.exceptions import BlowUpError, WsoRKError
from experiments.convergence import gark_check, run_convergence
from experiments.problems import PROBLEM_KINDS
from tableau.io import export_tableau, parse_tableau
from utils.helpers import parse_int_list, setup_logging, split_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting."""

    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid int value: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wso-rk", description="Weak-stage-order explicit Runge-Kutta toolkit")
    parser.add_argument("--log-level", default=WsoConfig.LOG_LEVEL, help="logging level (stderr)")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    commands.add_parser("list", help="catalog metadata table")

    verify = commands.add_parser("verify", help="verify a catalog method or a tableau JSON file")
    verify.add_argument("target", help="catalog name/alias or path to a tableau document")
    verify.add_argument("--exact", action="store_true", help="rational text for exact quantities")
    verify.add_argument("--max-order", type=_positive_int, default=None, help="highest classical order examined")

    export = commands.add_parser("export", help="tableau JSON of a catalog method")
    export.add_argument("name")

    construct = commands.add_parser("construct", help="build a new method")
    kinds = construct.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    minimal = kinds.add_parser("minimal", help="minimal-stage scheme from free parameters")
    minimal.add_argument("--spec", required=True, help="JSON file with A22, A33, c, p, q")
    iterated = kinds.add_parser("iterated", help="parallel-iterated (p^2, p, p) scheme")
    iterated.add_argument("--p", type=int, required=True)
    iterated.add_argument("--abscissae", required=True, help="comma-separated rationals, p + 1 of them")

    converge = commands.add_parser("converge", help="convergence study, CSV output")
    converge.add_argument("--method", required=True)
    converge.add_argument("--problem", choices=PROBLEM_KINDS, default="advection")
    converge.add_argument("--cfl", type=float, default=WsoConfig.DEFAULT_CFL)
    converge.add_argument("--grids", default=None, help="comma-separated cell counts")
    converge.add_argument("--t-end", type=float, default=None)
    converge.add_argument("--gark", action="store_true", help="use the GARK path (advection only)")

    gark = commands.add_parser("gark-check", help="GARK vs direct stepping on the advection system")
    gark.add_argument("--method", required=True)
    gark.add_argument("--n", type=int, default=100)
    gark.add_argument("--steps", type=int, default=50)

    return parser


def _emit_json(payload: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _load_target(target: str):
    path = Path(target)
    if path.is_file():
        return parse_tableau(path.read_text(encoding="utf-8"))
    return get(target).tableau


def _verification_failed(report: Dict[str, Any]) -> bool:
    return bool(report["mismatches"]) or not report["bounds"]["holds"]


def render_table(rows: List[Dict[str, Any]]) -> str:
    """Fixed-width metadata table, one method per line."""
    header = f"{'name':<16} {'s':>2} {'p':>2} {'q':>3} {'A^(p+1)':>10} {'D':>8}  source"
    lines = [header, "-" * len(header)]
    for row in rows:
        error = "" if row["principal_error"] is None else f"{row['principal_error']:.3e}"
        D = "" if row["D"] is None else f"{row['D']:.4g}"
        lines.append(
            f"{row['name']:<16} {row['s']:>2} {row['p']:>2} {row['q']!s:>3} {error:>10} {D:>8}  {row['source']}"
        )
    return "\n".join(lines) + "\n"


def cmd_list(args) -> int:
    sys.stdout.write(render_table(list_methods()))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_report(_load_target(args.target), max_order=args.max_order, exact=args.exact)
    _emit_json(report)
    return EXIT_FAILED if _verification_failed(report) else EXIT_OK


def cmd_export(args) -> int:
    sys.stdout.write(export_tableau(get(args.name).tableau) + "\n")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "minimal":
        spec_path = Path(args.spec)
        if not spec_path.is_file():
            raise UsageError(f"construct minimal: no such file: {args.spec}")
        payload = minimal_payload(spec_path.read_text(encoding="utf-8"))
    else:
        payload = iterated_payload(args.p, split_list(args.abscissae))
    _emit_json({"spec_version": WsoConfig.SPEC_VERSION, **payload})
    return EXIT_FAILED if _verification_failed(payload["verification"]) else EXIT_OK


def cmd_converge(args) -> int:
    grids = None if args.grids is None else parse_int_list(args.grids, field="grids")
    result = run_convergence(
        args.method, args.problem, cfl=args.cfl, grids=grids, t_end=args.t_end, use_gark=args.gark
    )
    sys.stdout.write(result.to_csv())
    return EXIT_OK


def cmd_gark_check(args) -> int:
    _emit_json({"spec_version": WsoConfig.SPEC_VERSION, **gark_check(args.method, N=args.n, steps=args.steps)})
    return EXIT_OK


COMMANDS = {
    "list": cmd_list,
    "verify": cmd_verify,
    "export": cmd_export,
    "construct": cmd_construct,
    "converge": cmd_converge,
    "gark-check": cmd_gark_check,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse ``argv`` and dispatch to a subcommand.

    Returns:
        int: process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"{e}\n")
        return EXIT_USAGE

    setup_logging(level=args.log_level)
    config_status = WsoConfig.validate_configuration()
    for issue in config_status["issues"]:
        logger.warning("Configuration issue: %s", issue)

    try:
        return COMMANDS[args.command](args)
    except BlowUpError as e:
        sys.stderr.write(f"wso-rk: {e}\n")
        return EXIT_FAILED
    except (UsageError, WsoRKError) as e:
        sys.stderr.write(f"wso-rk: {e}\n")
        return EXIT_USAGE
