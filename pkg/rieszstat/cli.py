# cli.py
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
############################################################################
"""
Command-line front end. Exit codes: 0 accepted/pass, 1 rejected/fail, 2 usage or
parse error.
"""

import argparse
import logging
import os
import sys

from typing import List, Optional

import rieszstat.core.constants as const
import rieszstat.io_utils.fileio as io
import rieszstat.settings as settings

from rieszstat.core.convergence import (
    NotFound,
    check_order_conv,
    check_st_order_conv,
    ru_check,
    witness_search,
)
from rieszstat.core.density import density
from rieszstat.core.exceptions import ImplementationBugError, RieszStatError
from rieszstat.core.measures import MEASURE_NAMES, PrefixBoundsDensity, get_measure
from rieszstat.core.suite import SuiteConfig, c0_example_report, run_all
from rieszstat.io_utils.fileio_backends import TextWriter, dump_yaml, iodata_to_plain
from rieszstat.io_utils.grammar import parse_set_expr
from rieszstat.io_utils.netspec import NetSpecDocument, witness_document

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2

FORMATS = ("text", "structured")


class UsageError(Exception):
    """Command-line arguments or net-spec claims do not fit the subcommand."""


def _schedule(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(k) for k in text.split(",") if k.strip()]
    except ValueError:
        raise UsageError("schedule must be comma-separated integers, got '{}'".format(text))


def cmd_density(args: argparse.Namespace) -> int:
    s = parse_set_expr(args.expression)
    value = density(s, horizon=args.horizon, schedule=_schedule(args.schedule))
    print(value.to_text())
    return EXIT_OK


def _measure(args: argparse.Namespace, document: NetSpecDocument):
    if args.measure is not None:
        return get_measure(args.measure)
    return document.measure or PrefixBoundsDensity()


def cmd_check(args: argparse.Namespace) -> int:
    document = NetSpecDocument.read(args.netspec)
    claims = document.claims
    net = document.net
    if args.claim == "order":
        if claims.order_limit is None or claims.dominating is None:
            raise UsageError("claim 'order' needs 'order_limit' and 'dominating'")
        verdict = check_order_conv(net, claims.order_limit, claims.dominating)
    elif args.claim == "st":
        if claims.st_limit is None or claims.witness is None:
            raise UsageError("claim 'st' needs 'st_limit' and 'witness'")
        verdict = check_st_order_conv(
            net, claims.st_limit, claims.witness, _measure(args, document)
        )
    else:
        limit = claims.order_limit if claims.order_limit is not None else claims.st_limit
        if limit is None or claims.regulator is None:
            raise UsageError("claim 'ru' needs a limit and 'regulator'")
        verdict = ru_check(net, limit, claims.regulator)
    print(verdict.to_text())
    return EXIT_OK if verdict.accepted else EXIT_REJECTED


def cmd_witness_search(args: argparse.Namespace) -> int:
    document = NetSpecDocument.read(args.netspec)
    limit = document.claims.st_limit
    if limit is None:
        limit = document.claims.order_limit
    if limit is None:
        raise UsageError("witness search needs 'st_limit' or 'order_limit'")
    templates = const.WITNESS_TEMPLATES
    if args.templates:
        templates = tuple(t.strip() for t in args.templates.split(",") if t.strip())
    found = witness_search(document.net, limit, _measure(args, document), templates)
    if isinstance(found, NotFound):
        print(found.to_text())
        return EXIT_REJECTED
    print(dump_yaml({"witness": witness_document(found)}), end="")
    return EXIT_OK


def cmd_suite(args: argparse.Namespace) -> int:
    settings.NUM_CPUS = args.num_cpus
    config = SuiteConfig(seed=args.seed, trials=args.trials)
    if args.out is not None:
        suffix = os.path.splitext(args.out)[1]
        expected = (".txt",) if args.format == "text" else (".yaml", ".yml")
        if suffix not in expected:
            raise UsageError(
                "--format {} writes {} files, got '{}'".format(args.format, expected, args.out)
            )
    try:
        report = run_all(config)
    except ImplementationBugError as error:
        print("implementation bug: {}".format(error), file=sys.stderr)
        return EXIT_REJECTED
    if args.out is not None:
        io.write(report, args.out)
    elif args.format == "text":
        print(report.to_text())
    else:
        print(dump_yaml(iodata_to_plain(report.serialize())), end="")
    return EXIT_OK if report.passed else EXIT_REJECTED


def cmd_c0_report(args: argparse.Namespace) -> int:
    measures = [get_measure(name) for name in args.measure] if args.measure else None
    report = c0_example_report(measures)
    if args.format == "text":
        print("\n".join(TextWriter.render(report)))
    else:
        print(dump_yaml(report), end="")
    return EXIT_OK if report["status"] == "pass" else EXIT_REJECTED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rieszstat",
        description="Exact checks of statistical order convergence of nets in Riesz spaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    s = commands.add_parser("density", help="asymptotic density of a set expression")
    s.add_argument("expression", help="set expression, e.g. 'ap(2,2)'")
    s.add_argument("--horizon", type=int, default=None)
    s.add_argument("--schedule", default=None, help="comma-separated evaluation points")
    s.set_defaults(main=cmd_density)

    s = commands.add_parser("check", help="check a convergence claim of a net-spec file")
    s.add_argument("netspec")
    s.add_argument("--claim", choices=const.CLAIMS, required=True)
    s.add_argument("--measure", default=None, help="one of {}".format(MEASURE_NAMES))
    s.set_defaults(main=cmd_check)

    s = commands.add_parser("witness-search", help="search a witness (p, Δ)")
    s.add_argument("netspec")
    s.add_argument("--measure", default=None, help="one of {}".format(MEASURE_NAMES))
    s.add_argument(
        "--templates",
        default=None,
        help="comma-separated subset of {}".format(const.WITNESS_TEMPLATES),
    )
    s.set_defaults(main=cmd_witness_search)

    s = commands.add_parser("suite", help="run the theorem suite")
    s.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    s.add_argument("--trials", type=int, default=settings.DEFAULT_TRIALS)
    s.add_argument("--format", choices=FORMATS, default="text")
    s.add_argument("--out", default=None, help="report file (.txt or .yaml)")
    s.add_argument("--num-cpus", type=int, default=settings.NUM_CPUS)
    s.set_defaults(main=cmd_suite)

    s = commands.add_parser("c0-report", help="the interleaved unit vector example")
    s.add_argument("--format", choices=FORMATS, default="text")
    s.add_argument(
        "--measure",
        action="append",
        default=None,
        help="measure of the roster, repeatable; one of {}".format(MEASURE_NAMES),
    )
    s.set_defaults(main=cmd_c0_report)
    return parser


def _configure_logging(verbose: bool) -> None:
    if not verbose:
        return
    logger = logging.getLogger("rieszstat")
    logger.setLevel(logging.DEBUG)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_OK if exit_.code == 0 else EXIT_USAGE
    _configure_logging(args.verbose)
    try:
        return args.main(args)
    except (UsageError, RieszStatError, ValueError, OSError) as error:
        print("error: {}".format(error), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
