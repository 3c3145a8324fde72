# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" usage

orbitwistor continue-line --algebra sl2 target.json [--seed-file line.json]

Continue a twistor line, by default the cone seed, to the fiber over a
target invariant section.

"""
import numpy as np

from orbitwistor import continuation, metric_engine, serializers
from orbitwistor import twistor_sections as ts
from orbitwistor.constants import (
    DEFAULT_MAX_NEWTON_ITERS, DEFAULT_MIN_P1, DEFAULT_NEWTON_TOL,
    DEFAULT_STEPS, PATHS, WEIGHTED,
)

from . import common


def main(args):
    target = common.read_invariant(args.target_file, args.algebra)
    if args.seed_file:
        seed = common.read_triple(args.seed_file)
    else:
        seed = continuation.cone_seed(args.algebra)

    cfg = continuation.ContinuationConfig(
        steps=args.steps,
        newton_tol=args.newton_tol,
        max_newton_iters=args.max_newton_iters,
        min_p1=args.min_p1,
        path=args.path,
    )
    line = continuation.continue_line(seed, target, cfg)
    A = ts.make_section(line)
    reached = ts.adjoint_quotient(A)
    report = metric_engine.metric_gram(line)

    document = {
        "triple": serializers.encode_triple(line),
        "section": serializers.encode_invariant(reached),
        "residual": float(np.abs(reached.vector() - target.vector()).max()),
        "p1_ratio": ts.p1_ratio(A),
        "signature": list(report.signature),
        "eigenvalues": report.eigenvalues,
        "config": {
            "steps": cfg.steps,
            "newton_tol": cfg.newton_tol,
            "max_newton_iters": cfg.max_newton_iters,
            "min_p1": cfg.min_p1,
            "path": cfg.path,
        },
    }
    common.write_output(
        serializers.dumps("ContinuationResult", document), args.out,
    )


def init_parser(parser):
    parser.add_argument(
        '--algebra', type=common.algebra, required=True,
        help='sl2, sl3, ...')
    parser.add_argument(
        'target_file', help='target InvariantSection JSON document')
    parser.add_argument(
        '--seed-file', default=None,
        help='starting RealTriple JSON document, the cone seed if omitted')
    parser.add_argument('--steps', type=int, default=DEFAULT_STEPS)
    parser.add_argument(
        '--newton-tol', type=float, default=DEFAULT_NEWTON_TOL)
    parser.add_argument(
        '--max-newton-iters', type=int, default=DEFAULT_MAX_NEWTON_ITERS)
    parser.add_argument(
        '--min-p1', type=float, default=DEFAULT_MIN_P1,
        help='abort when the p1 ratio drops below this')
    parser.add_argument('--path', choices=PATHS, default=WEIGHTED)
    common.add_out(parser)
    return parser
