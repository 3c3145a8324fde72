# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor ale 0 1 1 --rmax 6 --grid 50

Tabulate the ALE family as CSV, or with --ricci-at R the finite
difference Ricci check at radius R as JSON.

"""
import csv
import io

from orbitwistor import kleinian_ale, serializers

from . import common

# Euler angles of the --ricci-at point, away from the chart singularities
RICCI_ANGLES = (1.1, 0.3, 0.7)


def _csv(rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(kleinian_ale.CSV_COLUMNS)
    for row in rows:
        writer.writerow(['%.17g' % value for value in row])
    return buffer.getvalue()


def main(args):
    a = kleinian_ale.ALEParams.canonical(args.a1, args.a2, args.a3)
    if args.ricci_at is not None:
        report = kleinian_ale.ricci_fd(a, (args.ricci_at,) + RICCI_ANGLES)
        document = report.as_document()
        document["params"] = [a.a1, a.a2, a.a3]
        common.write_output(
            serializers.dumps("RicciReport", document), args.out,
        )
        return

    rows = kleinian_ale.grid(a, args.rmax, args.grid)
    common.write_output(_csv(rows), args.out)


def init_parser(parser):
    parser.add_argument('a1', type=float)
    parser.add_argument('a2', type=float)
    parser.add_argument('a3', type=float)
    parser.add_argument(
        '--rmax', type=float, default=10.0, help='outer radius of the grid')
    parser.add_argument(
        '--grid', type=int, default=50, help='number of radii')
    parser.add_argument(
        '--ricci-at', type=float, default=None, metavar='R',
        help='report the Ricci check at radius R instead of the grid')
    common.add_out(parser)
    return parser
