# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" Indefinite metrics over sl(3): graded complex witnesses on D2 and a
randomized search for regular real lines on D2.

"""
import logging

import attr
import numpy as np

from orbitwistor import lie_core, metric_engine, serializers, workers
from orbitwistor import twistor_sections as ts
from orbitwistor.config import defaults
from orbitwistor.errors import Degenerate, OrbitwistorError

logger = logging.getLogger('orbitwistor.witness')

# draws of complex_witness before giving up
MAX_WITNESS_DRAWS = 20


@attr.s(frozen=True, eq=False)
class Witness(object):
    index = attr.ib()
    triple = attr.ib()
    section = attr.ib()
    signature = attr.ib()
    null_criterion = attr.ib()
    p1_ratio = attr.ib()


@attr.s(frozen=True, eq=False)
class SearchReport(object):
    seed = attr.ib()
    samples = attr.ib()
    regular = attr.ib()
    indefinite = attr.ib()
    witnesses = attr.ib()
    failures = attr.ib()
    tolerances = attr.ib()

    @property
    def indefinite_rate(self):
        return self.indefinite / self.regular if self.regular else 0.0

    def as_document(self):
        return {
            "seed": self.seed,
            "samples": self.samples,
            "regular": self.regular,
            "indefinite": self.indefinite,
            "indefinite_rate": self.indefinite_rate,
            "tolerances": self.tolerances,
            "witnesses": [
                {
                    "index": w.index,
                    "signature": list(w.signature),
                    "null_criterion": w.null_criterion,
                    "p1_ratio": w.p1_ratio,
                    "triple": serializers.encode_triple(w.triple),
                    "section": serializers.encode_invariant(w.section),
                }
                for w in self.witnesses
            ],
            "failures": [
                {"index": index, "error": message}
                for index, message in self.failures
            ],
        }

    @classmethod
    def from_document(cls, doc):
        witnesses = [
            Witness(
                index=int(item["index"]),
                triple=serializers.decode_triple(item["triple"]),
                section=serializers.decode_invariant(item["section"]),
                signature=tuple(int(x) for x in item["signature"]),
                null_criterion=float(item["null_criterion"]),
                p1_ratio=float(item["p1_ratio"]),
            )
            for item in doc["witnesses"]
        ]
        return cls(
            seed=doc["seed"],
            samples=int(doc["samples"]),
            regular=int(doc["regular"]),
            indefinite=int(doc["indefinite"]),
            witnesses=witnesses,
            failures=[
                (int(item["index"]), item["error"])
                for item in doc["failures"]
            ],
            tolerances=dict(doc["tolerances"]),
        )


def _unit(i, j):
    E = np.zeros((3, 3), dtype=complex)
    E[i, j] = 1.0
    return E


def epsilon_grading():
    """ Eigenspaces of Ad(diag(1, eps, eps^2)), eps = exp(2 pi i / 3).

    Returns the bases of V_1, V_eps and V_eps^2, in that order.

    """
    v1 = [_unit(0, 0) - _unit(1, 1), _unit(1, 1) - _unit(2, 2)]
    v_eps = [_unit(0, 2), _unit(1, 0), _unit(2, 1)]
    v_eps2 = [_unit(0, 1), _unit(1, 2), _unit(2, 0)]
    return v1, v_eps, v_eps2


def grading_element():
    eps = np.exp(2j * np.pi / 3)
    return np.diag([1.0, eps, eps ** 2])


def _combination(basis, rng):
    coeffs = (
        rng.standard_normal(len(basis))
        + 1j * rng.standard_normal(len(basis))
    )
    return sum(c * B for c, B in zip(coeffs, basis))


def witness_coefficients(A):
    """ The eight matrices A0..A7 whose pairings with sl(3) span the
    image of d_A pi: A0, A1, A2 and the coefficients of A(zeta)^2.

    """
    A0, A1, A2 = A.A0, A.A1, A.A2
    return [
        A0, A1, A2,
        A0 @ A1 + A1 @ A0,
        A2 @ A1 + A1 @ A2,
        A0 @ A0,
        A2 @ A2,
        A1 @ A1 + A0 @ A2 + A2 @ A0,
    ]


def pairing_matrix(A):
    """ tr(A_i B_j) for the witness coefficients and ``sl_basis(3)``. """
    basis = lie_core.sl_basis(A.n)
    return np.array([
        [lie_core.trace_form(C, B) for B in basis]
        for C in witness_coefficients(A)
    ])


def pairing_rank(A, rtol=None):
    return lie_core.numerical_rank(pairing_matrix(A), rtol=rtol)


def complex_witness(rng, tol=None):
    """ A random section with A1 in V_1 and A0, A2 in V_1 + V_eps.

    p2 vanishes by the grading; draws landing in D1 are retried.

    """
    tol = defaults.tolerance if tol is None else tol
    v1, v_eps, _ = epsilon_grading()
    for attempt in range(MAX_WITNESS_DRAWS):
        A = ts.TwistorSection(
            A0=_combination(v1 + v_eps, rng),
            A1=_combination(v1, rng),
            A2=_combination(v1 + v_eps, rng),
        )
        if not ts.in_D1(A, tol):
            return A
        logger.info('witness draw %s landed in D1, retrying', attempt)
    raise Degenerate(
        'no witness off D1 after {} draws'.format(MAX_WITNESS_DRAWS)
    )


def d2_sample(n, rng, scale=1.0):
    """ Random real triple with <T1, [T2, T3]> = 0. """
    T2 = lie_core.random_su(n, rng)
    T3 = lie_core.random_su(n, rng)
    R = lie_core.random_su(n, rng)
    C = lie_core.bracket(T2, T3)
    norm = lie_core.trace_form(C, C)
    if abs(norm) > 0:
        R = R - (lie_core.trace_form(R, C) / norm) * C
    return ts.RealTriple(*(scale * T for T in (R, T2, T3)))


def _search_sample(item):
    index, rng = item
    t = d2_sample(3, rng)
    A = ts.make_section(t)
    ratio = ts.p1_ratio(A)
    if ts.in_D1(A):
        return index, None, None
    try:
        report = metric_engine.metric_gram(t)
    except OrbitwistorError as exc:
        logger.warning('sample %s: %s', index, exc)
        return index, None, str(exc)
    witness = Witness(
        index=index,
        triple=t,
        section=ts.adjoint_quotient(A),
        signature=report.signature,
        null_criterion=metric_engine.null_criterion(t),
        p1_ratio=ratio,
    )
    return index, witness, None


def real_indefinite_search(samples, seed):
    """ Sample regular real lines on D2 in sl(3) and keep the indefinite
    ones as witnesses.

    A regular sample whose metric cannot be computed is listed in
    ``failures`` and still counts as regular, unclassified, so it lowers
    ``indefinite_rate``.

    """
    streams = workers.sample_streams(seed, samples)
    outcomes = workers.sample_map(_search_sample, enumerate(streams))

    regular, witnesses, failures = 0, [], []
    for index, witness, error in outcomes:
        if witness is None and error is None:
            continue
        regular += 1
        if error is not None:
            failures.append((index, error))
            continue
        n_plus, _, n_minus = witness.signature
        if n_plus and n_minus:
            witnesses.append(witness)

    logger.info(
        '%s regular of %s samples, %s indefinite',
        regular, samples, len(witnesses),
    )
    return SearchReport(
        seed=seed,
        samples=samples,
        regular=regular,
        indefinite=len(witnesses),
        witnesses=witnesses,
        failures=failures,
        tolerances={
            "verdict": defaults.tolerance,
            "rank_rtol": defaults.rank_rtol,
            "signature_rtol": defaults.signature_rtol,
        },
    )
