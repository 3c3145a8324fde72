# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor cartan-lift section.json

Test whether an invariant section lifts to quadratic eigenvalue sections.

"""
from orbitwistor import serializers
from orbitwistor import twistor_sections as ts
from orbitwistor.constants import LIFT_GRID

from . import common


def main(args):
    s = common.read_invariant(args.section_file)
    report = ts.cartan_lift(s, args.grid)
    document = {
        "status": report.status,
        "branches": report.branches,
        "monodromy": report.monodromy,
        "fit_residual": report.fit_residual,
        "min_separation": report.min_separation,
    }
    common.write_output(
        serializers.dumps("CartanLiftReport", document), args.out,
    )


def init_parser(parser):
    parser.add_argument(
        'section_file', help='InvariantSection JSON document')
    parser.add_argument(
        '--grid', type=int, default=LIFT_GRID,
        help='points on the tracking circle')
    common.add_out(parser)
    return parser
