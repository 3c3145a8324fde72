# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor scan-signature --algebra sl3 section.json --samples 40 --seed 7

Census of metric signatures on the regular twistor lines over a real
invariant section.

"""
from orbitwistor import continuation, serializers
from orbitwistor.errors import DomainError, NotRegular

from . import common


def main(args):
    target = common.read_invariant(args.section_file, args.algebra)
    if not target.is_real():
        raise DomainError('the invariant section is not real')
    starts = [common.read_triple(path) for path in args.start]

    report = continuation.explore_components(
        target, args.samples, args.seed, starts=starts,
        connect=not args.no_connect,
    )
    if not report.samples:
        raise NotRegular(
            'no regular samples among {}'.format(args.samples)
        )

    common.write_output(
        serializers.dumps("ComponentReport", report.as_document()), args.out,
    )


def init_parser(parser):
    parser.add_argument(
        '--algebra', type=common.algebra, required=True,
        help='sl2, sl3, ...')
    parser.add_argument(
        'section_file', help='InvariantSection JSON document')
    parser.add_argument(
        '--samples', type=int, default=20,
        help='number of sampled lines')
    parser.add_argument(
        '--start', action='append', default=[], metavar='TRIPLE_FILE',
        help='explicit starting line, may be repeated')
    parser.add_argument(
        '--no-connect', action='store_true',
        help='skip the connectivity attempts')
    common.add_seed(parser)
    common.add_out(parser)
    return parser
