#
# Copyright (C) 2025 the ilsquares developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of version 2 of the GNU General
# Public License as published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 51 Franklin Street, Fifth Floor,
# Boston, MA  02110-1301, USA.
#

"""
Command line front end, installed as ``ilsquares``.

Subcommands: construct, verify, decide, reduce, lift, search, check.
Artifacts are written to stdout (or ``--out``) as JSON with sorted keys,
diagnostics go to stderr.

Exit codes:
    0: the object exists, verifies, or the condition holds
    1: verification failed, or the question stays undecided
    2: the object does not exist (a certificate is printed when known)
    64: malformed input
"""

__all__ = ['main', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_INFEASIBLE', 'EXIT_USAGE']

import argparse
import json
import logging
import sys
from pathlib import Path

from .core import (LatinSquare, VerdictStatus, DimensionError, PreconditionError,
                   parse_parts, subsquare_specs, verify_ils)
from .outline import (OutlineRectangle, reduce_modulo, lift, format_outline,
                      validate_outline)
from .solver import brute_force_ils
from .existence import check_necessary, decide

clilogger = logging.getLogger('ilsquares.cli')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INFEASIBLE = 2
EXIT_USAGE = 64

_STATUS_EXIT = {VerdictStatus.EXISTS: EXIT_OK,
                VerdictStatus.NOT_EXISTS: EXIT_INFEASIBLE,
                VerdictStatus.UNKNOWN: EXIT_FAILED,
                }


class UsageError(ValueError):
    """Malformed command line or input file"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parts(text):
    try:
        return parse_parts(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err))


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _read_json(path, field='--in'):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise UsageError(f"{field}: cannot read {path}: {err.strerror}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"{field}: {path} is not valid JSON ({err.msg}, line {err.lineno})")


def _read_square(path):
    try:
        text = Path(path).read_text()
    except OSError as err:
        raise UsageError(f"--in: cannot read {path}: {err.strerror}")
    try:
        if text.lstrip().startswith('{'):
            return LatinSquare.from_json(json.loads(text))
        return LatinSquare.from_text(text)
    except (ValueError, TypeError) as err:
        raise UsageError(f"--in: {err}")


def _emit(args, payload, grid_text=None):
    if args.format == 'grid' and grid_text is not None:
        text = grid_text
    else:
        text = json.dumps(payload, sort_keys=True)
    if getattr(args, 'out', None):
        Path(args.out).write_text(text + "\n")
        clilogger.info(f"written to {args.out}")
    else:
        print(text)


def _cmd_construct(args):
    trace = [] if args.trace else None
    verdict = decide(args.parts, args.order, oracle_bound=args.oracle_bound,
                     budget=args.budget, trace=trace)
    if verdict.status is VerdictStatus.EXISTS:
        payload = verdict.witness.to_json(subsquare_specs(verdict.parts))
        if trace is not None:
            payload['trace'] = [node.to_json() for node in trace]
        _emit(args, payload, verdict.witness.to_text())
    else:
        outcome = ("does not exist" if verdict.status is VerdictStatus.NOT_EXISTS
                   else "is undecided")
        print(f"ILS({args.order}; {','.join(str(h) for h in verdict.parts)}) {outcome}: "
              f"{verdict.reason}", file=sys.stderr)
        _emit(args, verdict.to_json())
    return _STATUS_EXIT[verdict.status]


def _cmd_verify(args):
    square = _read_square(args.infile)
    report = verify_ils(square, args.parts)
    _emit(args, report.to_json())
    if not report:
        print(f"verification failed: {report.reason}", file=sys.stderr)
    return EXIT_OK if report else EXIT_FAILED


def _cmd_decide(args):
    verdict = decide(args.parts, args.order, oracle_bound=args.oracle_bound,
                     budget=args.budget)
    _emit(args, verdict.to_json(),
          verdict.witness.to_text() if verdict.witness is not None else None)
    return _STATUS_EXIT[verdict.status]


def _cmd_reduce(args):
    square = _read_square(args.infile)
    try:
        outline = reduce_modulo(square, args.p, args.q, args.r)
    except (PreconditionError, DimensionError) as err:
        raise UsageError(f"--p/--q/--r: {err}")
    _emit(args, outline.to_json(), format_outline(outline))
    return EXIT_OK


def _cmd_lift(args):
    data = _read_json(args.infile)
    try:
        outline = OutlineRectangle.from_json(data)
    except (ValueError, TypeError) as err:
        raise UsageError(f"--in: {err}")
    report = validate_outline(outline)
    if not report:
        print(f"invalid outline: {report.reason}", file=sys.stderr)
        _emit(args, report.to_json())
        return EXIT_FAILED
    square = lift(outline)
    _emit(args, square.to_json(), square.to_text())
    return EXIT_OK


def _cmd_search(args):
    verdict = brute_force_ils(args.parts, args.order, budget=args.budget)
    _emit(args, verdict.to_json(),
          verdict.witness.to_text() if verdict.witness is not None else None)
    return _STATUS_EXIT[verdict.status]


def _cmd_check(args):
    violation = check_necessary(args.parts, args.order)
    _emit(args, {'parts': list(args.parts), 'order': args.order,
                 'holds': violation is None,
                 'certificate': violation.to_json() if violation is not None else None})
    return EXIT_OK if violation is None else EXIT_INFEASIBLE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help="debug logging")
    common.add_argument('-q', '--quiet', action='store_true', help="warnings only")
    common.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help="logging level of the ilsquares logger")
    common.add_argument('--format', choices=['json', 'grid'], default='json',
                        help="output format, grid is for reading only")
    common.add_argument('--out', default=None, help="write the artifact to this file")

    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument('--parts', type=_parts, required=True,
                       help="comma separated subsquare orders, e.g. 3,2,1")
    sized.add_argument('--order', type=_positive, required=True, help="order n of the square")

    budgeted = argparse.ArgumentParser(add_help=False)
    budgeted.add_argument('--budget', type=_positive, default=None,
                          help="node budget, defaults to ILS_NODE_BUDGET or the config file")

    parser = _Parser(prog='ilsquares',
                     description="Latin squares with prescribed disjoint subsquares")
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    sub = commands.add_parser('construct', parents=[common, sized, budgeted],
                              help="build an ILS(n; parts) or report why it cannot exist")
    sub.add_argument('--oracle-bound', type=int, default=None)
    sub.add_argument('--trace', action='store_true', help="include the construction trace")
    sub.set_defaults(func=_cmd_construct)

    sub = commands.add_parser('verify', parents=[common],
                              help="check a square for the given disjoint subsquares")
    sub.add_argument('--in', dest='infile', required=True)
    sub.add_argument('--parts', type=_parts, required=True)
    sub.set_defaults(func=_cmd_verify)

    sub = commands.add_parser('decide', parents=[common, sized, budgeted],
                              help="existence verdict with witness or certificate")
    sub.add_argument('--oracle-bound', type=int, default=None)
    sub.set_defaults(func=_cmd_decide)

    sub = commands.add_parser('reduce', parents=[common],
                              help="outline of a square modulo row, column and symbol groups")
    sub.add_argument('--in', dest='infile', required=True)
    sub.add_argument('--p', type=_parts, required=True)
    sub.add_argument('--q', type=_parts, default=None)
    sub.add_argument('--r', type=_parts, default=None)
    sub.set_defaults(func=_cmd_reduce)

    sub = commands.add_parser('lift', parents=[common], help="latin square from an outline")
    sub.add_argument('--in', dest='infile', required=True)
    sub.set_defaults(func=_cmd_lift)

    sub = commands.add_parser('search', parents=[common, sized, budgeted],
                              help="brute-force search for an ILS(n; parts)")
    sub.set_defaults(func=_cmd_search)

    sub = commands.add_parser('check', parents=[common, sized],
                              help="scan the necessary condition")
    sub.set_defaults(func=_cmd_check)
    return parser


def _set_level(args):
    if args.log_level is not None:
        level = args.log_level
    elif args.verbose:
        level = 'DEBUG'
    elif args.quiet:
        level = 'WARNING'
    else:
        level = 'INFO'
    logging.getLogger('ilsquares').setLevel(level)


def main(argv=None):
    """
    Run the command line, returning the exit status.

    Parameters
    ----------
    argv : list of str, optional
        Arguments without the program name, defaults to sys.argv[1:]
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    _set_level(args)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"ilsquares {args.command}: {err}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as err:
        print(f"ilsquares {args.command}: --parts/--order: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
