# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor hitchin triple.json

Apply the 3d Hitchin map to a real triple.

"""
from orbitwistor import hitchin3d, serializers

from . import common


def main(args):
    t = common.read_triple(args.triple_file)
    s = hitchin3d.hitchin_map(t)
    common.write_output(
        serializers.dumps("InvariantSection", serializers.encode_invariant(s)),
        args.out,
    )


def init_parser(parser):
    parser.add_argument('triple_file', help='RealTriple JSON document')
    common.add_out(parser)
    return parser
