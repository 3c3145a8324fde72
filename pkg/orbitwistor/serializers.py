# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" JSON documents for triples, sections and reports.

Complex numbers are ``[re, im]`` pairs, matrices are row-major lists of
rows and every float is written with 17 significant digits, so identical
inputs give byte-identical output.

"""
import math
from decimal import Decimal

import numpy as np
import simplejson as json

from orbitwistor.constants import SCHEMA
from orbitwistor.errors import DimensionError, ParseError
from orbitwistor.twistor_sections import (
    BinaryForm, InvariantSection, RealTriple, TwistorSection,
)


def encode_real(x):
    x = float(x)
    if not math.isfinite(x):
        return x
    return Decimal('%.17g' % x)


def encode_complex(z):
    z = complex(z)
    return [encode_real(z.real), encode_real(z.imag)]


def encode_value(value):
    """ Recursively turn numpy values into JSON-ready structures. """
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return encode_real(value)
    if isinstance(value, (complex, np.complexfloating)):
        return encode_complex(value)
    if isinstance(value, np.ndarray):
        return [encode_value(item) for item in value]
    if isinstance(value, dict):
        return {key: encode_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(item) for item in value]
    return value


def encode_matrix(M):
    return [[encode_complex(z) for z in row] for row in np.asarray(M)]


def decode_complex(pair):
    try:
        re, im = pair
        return complex(float(re), float(im))
    except (TypeError, ValueError):
        raise ParseError('not a complex [re, im] pair: {!r}'.format(pair))


def decode_matrix(rows):
    try:
        M = np.array(
            [[decode_complex(pair) for pair in row] for row in rows],
            dtype=complex,
        )
    except TypeError:
        raise ParseError('not a matrix: {!r}'.format(rows))
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ParseError('matrix must be square, got shape {}'.format(M.shape))
    return M


def decode_real_matrix(rows):
    try:
        return np.array(rows, dtype=float)
    except (TypeError, ValueError):
        raise ParseError('not a real matrix: {!r}'.format(rows))


def encode_triple(t):
    return {
        "T1": encode_matrix(t.T1),
        "T2": encode_matrix(t.T2),
        "T3": encode_matrix(t.T3),
    }


def decode_triple(doc):
    try:
        return RealTriple(*(decode_matrix(doc[key]) for key in (
            "T1", "T2", "T3")))
    except KeyError as exc:
        raise ParseError('triple is missing {}'.format(exc))


def encode_section(A):
    return {
        "A0": encode_matrix(A.A0),
        "A1": encode_matrix(A.A1),
        "A2": encode_matrix(A.A2),
    }


def decode_section(doc):
    try:
        return TwistorSection(*(decode_matrix(doc[key]) for key in (
            "A0", "A1", "A2")))
    except KeyError as exc:
        raise ParseError('section is missing {}'.format(exc))


def encode_invariant(s):
    return {
        "n": s.n,
        "forms": [
            {
                "degree": form.degree,
                "reality_sign": form.reality_sign,
                "coeffs": [encode_complex(c) for c in form.coeffs],
            }
            for form in s.forms
        ],
    }


def decode_invariant(doc):
    try:
        forms = [
            BinaryForm([decode_complex(c) for c in form["coeffs"]])
            for form in doc["forms"]
        ]
        return InvariantSection(n=int(doc["n"]), forms=forms)
    except KeyError as exc:
        raise ParseError('invariant section is missing {}'.format(exc))
    except (DimensionError, TypeError, ValueError) as exc:
        raise ParseError('bad invariant section: {}'.format(exc))


def dumps(kind, payload):
    document = {"schema": SCHEMA, "kind": kind}
    document.update(encode_value(payload))
    try:
        return json.dumps(
            document, use_decimal=True, indent=2, ensure_ascii=False,
        )
    except TypeError as exc:
        raise ParseError(
            "document not serialized: {} - {}".format(kind, str(exc))
        )


def loads(text, kind=None):
    """ Parse a document, checking its schema and, if given, its kind. """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError('malformed JSON: {}'.format(exc))

    if not isinstance(document, dict):
        raise ParseError('a document must be a JSON object')

    schema = document.pop("schema", SCHEMA)
    if schema != SCHEMA:
        raise ParseError('unsupported schema "{}"'.format(schema))

    found = document.pop("kind", kind)
    if kind is not None and found != kind:
        raise ParseError('expected a {} document, got {}'.format(kind, found))

    return document
