# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import argparse
import sys

from orbitwistor.config import defaults
from orbitwistor.constants import EXIT_OK
from orbitwistor.errors import OrbitwistorError

from . import (
    ale, cartan_lift, check_level, common, continue_line, hitchin,
    scan_signature, witness_su3,
)

SUBCOMMANDS = [
    scan_signature, witness_su3, continue_line, ale, hitchin, check_level,
    cartan_lift,
]


def setup_parser():
    parser = argparse.ArgumentParser(prog='orbitwistor')
    parser.add_argument(
        '--tol', type=float, default=None,
        help='tolerance of the boolean verdicts (default {})'.format(
            defaults.tolerance))
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    for module in SUBCOMMANDS:
        name = module.__name__.split('.')[-1].replace('_', '-')
        module_parser = subparsers.add_parser(
            name, description=module.__doc__)
        module.init_parser(module_parser)
        module_parser.set_defaults(main=module.main)

    return parser


def main(argv=None):
    parser = setup_parser()
    args = parser.parse_args(argv)
    if args.tol is not None and not args.tol > 0:
        parser.error('--tol must be positive')

    tolerance = defaults.tolerance
    if args.tol is not None:
        defaults.tolerance = args.tol

    try:
        args.main(args)
    except OrbitwistorError as exc:
        common.report_error(exc)
        return common.exit_code(exc)
    finally:
        defaults.tolerance = tolerance

    return EXIT_OK


def run():
    sys.exit(main())
