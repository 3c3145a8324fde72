# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor witness-su3 --samples 500 --seed 1

Search real triples on D2 in su(3) for regular lines with an indefinite
metric.

"""
from orbitwistor import serializers, su3_witness
from orbitwistor.errors import NotRegular

from . import common


def main(args):
    report = su3_witness.real_indefinite_search(args.samples, args.seed)
    if report.regular == 0:
        raise NotRegular(
            'no regular samples among {}'.format(args.samples)
        )
    common.write_output(
        serializers.dumps("SearchReport", report.as_document()), args.out,
    )


def init_parser(parser):
    parser.add_argument(
        '--samples', type=int, default=100,
        help='number of sampled triples')
    common.add_seed(parser)
    common.add_out(parser)
    return parser
