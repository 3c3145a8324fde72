# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor check-level level.json --grid 8

Decide whether the level section of a real triple is a regular twistor
line.

"""
from orbitwistor import serializers
from orbitwistor import twistor_sections as ts
from orbitwistor.constants import LEVEL_GRID

from . import common


def main(args):
    level = common.read_triple(args.level_file)
    report = ts.check_level_regular(level, args.grid)
    document = {
        "level": serializers.encode_triple(level),
        "p1": report.p1,
        "p1_ratio": report.p1_ratio,
        "determinant_regular": report.determinant_regular,
        "max_centralizer_gap": report.max_centralizer_gap,
        "grid_points": report.grid_points,
        "grid_regular": report.grid_regular,
        "regular": report.regular,
    }
    common.write_output(
        serializers.dumps("LevelReport", document), args.out,
    )


def init_parser(parser):
    parser.add_argument('level_file', help='RealTriple JSON document')
    parser.add_argument(
        '--grid', type=int, default=LEVEL_GRID,
        help='radial resolution of the zeta grid')
    common.add_out(parser)
    return parser
