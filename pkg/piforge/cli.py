# piforge - augmented dimensional analysis
#
# Copyright (C) 2026 piforge contributors
#
# This file may be distributed under the terms of the GNU GPLv3 license
"piforge command line."

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from piforge.const import (
    DEFAULT_FORMAT,
    EXIT_ANALYSIS_ERROR,
    EXIT_KAPPA_INSUFFICIENT,
    EXIT_NOT_PRECOMPLETE,
    EXIT_OK,
    EXIT_PARSE_ERROR,
    FORMATS_ALL,
    INT64_MAX,
    KAPPA_AUTO,
    MODES_ALL,
    STATUS_KAPPA_INSUFFICIENT,
    STATUS_NOT_PRECOMPLETE,
    VERSION,
)
from piforge.engine import ProblemError, build_analysis
from piforge.errors import PiforgeError
from piforge.report.problemfile import ProblemSyntaxError, parse_problem, read_problem
from piforge.report.render import render_report

_LOGGER = logging.getLogger(__name__)

STATUS_EXIT_CODES = {
    STATUS_NOT_PRECOMPLETE: EXIT_NOT_PRECOMPLETE,
    STATUS_KAPPA_INSUFFICIENT: EXIT_KAPPA_INSUFFICIENT,
}


def kappa_arg(value: str) -> int | str:
    """``auto`` or a positive integer"""
    if value == KAPPA_AUTO:
        return value
    try:
        kappa = int(value)
    except ValueError as error:
        raise argparse.ArgumentTypeError("kappa must be 'auto' or a positive integer") from error
    if kappa <= 0:
        raise argparse.ArgumentTypeError("kappa must be a positive integer")
    if kappa > INT64_MAX:
        raise argparse.ArgumentTypeError(f"kappa {kappa} overflows 64 bits")
    return kappa


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for the ``analyze`` command"""
    parser = argparse.ArgumentParser(prog="piforge", description="Augmented dimensional analysis.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="analyse a problem file")
    analyze.add_argument("file")
    analyze.add_argument("--mode", choices=MODES_ALL)
    analyze.add_argument("--kappa", type=kappa_arg, metavar="N|auto")
    analyze.add_argument("--format", choices=FORMATS_ALL, default=DEFAULT_FORMAT)
    analyze.add_argument("--table", default=False, action="store_true")
    analyze.add_argument(
        "--symmetry",
        nargs="*",
        metavar="NAME",
        help="apply declared symmetries, plus optional U V pairs",
    )
    analyze.add_argument("--verbose", default=False, action="store_true")
    return parser


def run_analyze(args: argparse.Namespace) -> int:
    """Analyse one problem file and print the report"""
    if args.symmetry is not None and len(args.symmetry) % 2:
        print("piforge: --symmetry takes pairs of names", file=sys.stderr)
        return EXIT_PARSE_ERROR
    pairs = list(zip(args.symmetry[::2], args.symmetry[1::2])) if args.symmetry else []
    _LOGGER.debug("Analysing %s", args.file)

    try:
        text = read_problem(args.file)
        problem = parse_problem(text, filename=args.file, mode=args.mode, kappa=args.kappa)
    except OSError as error:
        print(f"{args.file}: {error.strerror}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except ProblemSyntaxError as error:
        print(error, file=sys.stderr)
        return EXIT_PARSE_ERROR

    try:
        report = build_analysis(
            problem, table=args.table, symmetry=args.symmetry is not None, pairs=pairs
        )
    except ProblemError as error:
        # file declarations are checked by the parser; these come from arguments
        print(f"piforge: {error}", file=sys.stderr)
        return EXIT_PARSE_ERROR
    except PiforgeError as error:
        print(f"{args.file}: {error}", file=sys.stderr)
        return EXIT_ANALYSIS_ERROR

    sys.stdout.write(render_report(report, args.format))
    return STATUS_EXIT_CODES.get(report.status, EXIT_OK)


def main(argv: Sequence[str] | None = None) -> int:
    """Command line entry point"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING, format="%(name)s - %(levelname)s - %(message)s"
    )
    if args.verbose:
        logging.getLogger("piforge").setLevel(logging.DEBUG)
    return run_analyze(args)
