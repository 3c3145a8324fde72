# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import argparse
import logging
import re
import sys

import simplejson as json

from orbitwistor import serializers
from orbitwistor.constants import (
    EXIT_NUMERICAL, EXIT_PARSE, EXIT_PRECONDITION, SCHEMA,
)
from orbitwistor.errors import (
    Degenerate, DimensionError, DomainError, InvalidTriple, NotOnSlice,
    NotRegular, ParseError,
)

logger = logging.getLogger('orbitwistor.cli')

PRECONDITION_ERRORS = (
    Degenerate, DimensionError, DomainError, InvalidTriple, NotOnSlice,
    NotRegular,
)


def exit_code(exc):
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, PRECONDITION_ERRORS):
        return EXIT_PRECONDITION
    return EXIT_NUMERICAL


def report_error(exc, stream=None):
    stream = sys.stderr if stream is None else stream
    detail = {"schema": SCHEMA, "error": type(exc).__name__,
              "message": str(exc)}
    for name in ("t", "p1_ratio", "residual", "condition"):
        value = getattr(exc, name, None)
        if value is not None:
            detail[name] = serializers.encode_value(value)
    stream.write(json.dumps(detail, use_decimal=True) + "\n")


def algebra(value):
    """ argparse type for ``sl2``, ``sl(3)`` and the like. """
    match = re.match(r'^sl\(?(\d+)\)?$', value.strip().lower())
    if match is None or int(match.group(1)) < 2:
        raise argparse.ArgumentTypeError(
            'unknown algebra "{}"'.format(value))
    return int(match.group(1))


def read_document(path, kind=None):
    try:
        with open(path) as f:
            text = f.read()
    except (IOError, OSError) as exc:
        raise ParseError('cannot read {}: {}'.format(path, exc))
    return serializers.loads(text, kind)


def read_triple(path):
    return serializers.decode_triple(read_document(path, "RealTriple"))


def read_invariant(path, n=None):
    s = serializers.decode_invariant(read_document(path, "InvariantSection"))
    if n is not None and s.n != n:
        raise ParseError(
            'section is for sl({}), expected sl({})'.format(s.n, n)
        )
    return s


def write_output(text, out=None):
    if out is None or out == '-':
        sys.stdout.write(text)
        if not text.endswith('\n'):
            sys.stdout.write('\n')
        return
    with open(out, 'w') as f:
        f.write(text)
        if not text.endswith('\n'):
            f.write('\n')
    logger.info('wrote %s', out)


def add_out(parser):
    parser.add_argument(
        '--out', default=None,
        help='output file, standard output when omitted')


def add_seed(parser):
    parser.add_argument(
        '--seed', type=int, required=True,
        help='master seed of the per-sample random streams')
