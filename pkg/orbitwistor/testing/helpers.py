# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import numpy as np

from orbitwistor import lie_core, serializers
from orbitwistor import twistor_sections as ts

SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def pauli_triple():
    """ T_j = -(i/2) sigma_j, an su(2) triple with [T1, T2] = T3. """
    return ts.RealTriple(*(-0.5j * s for s in SIGMA))


def random_triple(n, rng, scale=1.0):
    return ts.RealTriple(*(
        lie_core.random_su(n, rng, scale) for _ in range(3)
    ))


def random_regular_triple(n, rng, scale=1.0, attempts=20):
    for _ in range(attempts):
        t = random_triple(n, rng, scale)
        if ts.is_regular_twistor_line(t):
            return t
    raise AssertionError('no regular triple in {} draws'.format(attempts))


def random_complex_section(n, rng):
    def draw():
        X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        return X - np.trace(X) / n * np.eye(n)
    return ts.TwistorSection(draw(), draw(), draw())


def random_matrix(n, rng):
    X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return X - np.trace(X) / n * np.eye(n)


def max_abs(X):
    return float(np.abs(np.asarray(X)).max())


def write_document(path, kind, payload):
    with open(path, 'w') as f:
        f.write(serializers.dumps(kind, payload))
    return path
