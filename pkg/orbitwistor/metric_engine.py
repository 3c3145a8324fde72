# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" The pseudo-hyperkaehler metric at a regular twistor line.

Tangent vectors at a line T are real triples dT whose section dA(zeta)
keeps every invariant polynomial fixed to first order. For such vectors
the Kirillov-Kostant-Souriau pairing

    P(zeta) = <A(zeta), [X(zeta), Y(zeta)]>,    [X, A] = dA, [Y, A] = dB

is a quadratic in zeta, read like a section:

    P = (w2 + i w3) + 2i w1 zeta + (w2 - i w3) zeta^2

J1 is multiplication by i on dA0 and the metric is g = w1(., J1 .).
The orientation of w1 is fixed once by asking for a positive definite
metric at the sl(2) cone seed.

"""
import functools
import logging

import attr
import numpy as np
from scipy import linalg

from orbitwistor import lie_core, serializers
from orbitwistor import twistor_sections as ts
from orbitwistor.config import defaults
from orbitwistor.constants import (
    E0_CONDITION_LIMIT, PENCIL_FIT_RTOL, PENCIL_SAMPLES,
)
from orbitwistor.errors import (
    CalibrationError, DimensionMismatch, FitFailure, IllConditioned,
    NotOnSlice, NotRegular, Unsolvable,
)

logger = logging.getLogger('orbitwistor.metric')


@attr.s(frozen=True, eq=False)
class TangentFrame(object):
    base = attr.ib()
    vectors = attr.ib()
    # su_basis coordinates of the vectors, as orthonormal columns
    coordinates = attr.ib(repr=False)

    @property
    def dimension(self):
        return len(self.vectors)


@attr.s(frozen=True, eq=False)
class GramReport(object):
    base = attr.ib()
    gram = attr.ib()
    omega1 = attr.ib()
    omega2 = attr.ib()
    omega3 = attr.ib()
    J1 = attr.ib()
    eigenvalues = attr.ib()
    signature = attr.ib()
    tolerances = attr.ib()
    calibration = attr.ib()
    asymmetry = attr.ib(default=0.0)
    e0_condition = attr.ib(default=None)
    frame = attr.ib(default=None, repr=False)

    @property
    def dimension(self):
        return len(self.eigenvalues)

    @property
    def definite(self):
        n_plus, n_zero, n_minus = self.signature
        return n_zero == 0 and (n_plus == 0 or n_minus == 0)

    @property
    def indefinite(self):
        n_plus, _, n_minus = self.signature
        return n_plus > 0 and n_minus > 0

    def as_document(self):
        return {
            "base": serializers.encode_triple(self.base),
            "dimension": self.dimension,
            "signature": list(self.signature),
            "eigenvalues": self.eigenvalues,
            "gram": self.gram,
            "omega1": self.omega1,
            "omega2": self.omega2,
            "omega3": self.omega3,
            "J1": self.J1,
            "asymmetry": self.asymmetry,
            "e0_condition": self.e0_condition,
            "calibration": self.calibration,
            "tolerances": self.tolerances,
        }

    @classmethod
    def from_document(cls, doc):
        real = serializers.decode_real_matrix
        return cls(
            base=serializers.decode_triple(doc["base"]),
            gram=real(doc["gram"]),
            omega1=real(doc["omega1"]),
            omega2=real(doc["omega2"]),
            omega3=real(doc["omega3"]),
            J1=real(doc["J1"]),
            eigenvalues=np.array(doc["eigenvalues"], dtype=float),
            signature=tuple(int(x) for x in doc["signature"]),
            tolerances=dict(doc["tolerances"]),
            calibration=int(doc["calibration"]),
            asymmetry=float(doc["asymmetry"]),
            e0_condition=doc["e0_condition"],
        )


@attr.s(frozen=True)
class ScalingReport(object):
    scale = attr.ib()
    deviation = attr.ib()
    signature = attr.ib()
    scaled_signature = attr.ib()


@attr.s(frozen=True, eq=False)
class OrbitReport(object):
    gram = attr.ib()
    eigenvalues = attr.ib()


def _section(value):
    if isinstance(value, ts.RealTriple):
        return ts.make_section(value)
    return value


def sylvester_operator(M):
    """ Matrix of X -> [X, M] acting on row-major ``X.ravel()``. """
    n = len(M)
    identity = np.eye(n)
    return np.kron(identity, M.T) - np.kron(M, identity)


def _check_residual(K, x, b, tol):
    residual = np.linalg.norm(K @ x - b)
    scale = max(np.linalg.norm(b), np.linalg.norm(K, 2) * np.linalg.norm(x))
    if residual > tol * scale:
        raise Unsolvable(
            'no potential: residual {:.3g} against {:.3g}'.format(
                residual, scale)
        )


def vertical_potential(A, Adot, zeta, tol=None):
    """ Minimal norm X with [X, A(zeta)] = dA(zeta). """
    tol = defaults.tolerance if tol is None else tol
    A, Adot = _section(A), _section(Adot)
    M = ts.evaluate(A, zeta)
    b = ts.evaluate(Adot, zeta).ravel()
    K = sylvester_operator(M)
    x, _, _, _ = linalg.lstsq(K, b)
    _check_residual(K, x, b, tol)
    return x.reshape(M.shape)


def kks_value(A, Adot, Bdot, zeta, tol=None):
    """ <A(zeta), [X, Y]> written as tr(X dB(zeta)). """
    X = vertical_potential(A, Adot, zeta, tol)
    return lie_core.trace_form(X, ts.evaluate(_section(Bdot), zeta))


def _pencil_zetas(samples):
    return np.exp(2j * np.pi * np.arange(samples) / samples)


def _fit_pencils(zetas, values, scales):
    """ Fit quadratics to values of shape (samples, ...). """
    shape = values.shape[1:]
    V = np.vander(zetas, 3, increasing=True)
    flat = values.reshape(len(zetas), -1)
    coeffs, _, _, _ = linalg.lstsq(V, flat)
    misfit = np.abs(V @ coeffs - flat).max(axis=0)
    reference = scales.reshape(len(zetas), -1).max(axis=0)
    relative = np.where(reference > 0, misfit / np.maximum(reference, 1e-300),
                        0.0)
    worst = float(relative.max()) if relative.size else 0.0
    if worst > PENCIL_FIT_RTOL:
        raise FitFailure(
            'KKS pairing is not quadratic in zeta: misfit {:.3g}'.format(
                worst), residual=worst,
        )
    return coeffs.reshape((3,) + shape), worst


def kks_pencil(A, Adot, Bdot, samples=PENCIL_SAMPLES, tol=None):
    A, Adot, Bdot = _section(A), _section(Adot), _section(Bdot)
    zetas = _pencil_zetas(samples)
    values = np.empty(samples, dtype=complex)
    scales = np.empty(samples)
    for j, zeta in enumerate(zetas):
        X = vertical_potential(A, Adot, zeta, tol)
        dB = ts.evaluate(Bdot, zeta)
        values[j] = lie_core.trace_form(X, dB)
        scales[j] = np.linalg.norm(X) * np.linalg.norm(dB)
    coeffs, _ = _fit_pencils(zetas, values, scales)
    return ts.BinaryForm(coeffs)


def tangent_frame(t, tol=None):
    A = ts.make_section(t, tol)
    if ts.in_D1(A, tol):
        raise NotRegular('p1 vanishes: not a regular twistor line')

    n = t.n
    expected = 2 * (n * n - n)
    K = lie_core.kernel(ts.real_jacobian(t))
    if K.shape[1] != expected:
        raise DimensionMismatch(
            'tangent space has dimension {}, expected {}'.format(
                K.shape[1], expected),
            expected=expected, found=K.shape[1],
        )

    vectors = [ts.vector_to_triple(n, column) for column in K.T]
    return TangentFrame(base=t, vectors=vectors, coordinates=K)


def _frame_sections(vectors):
    return [ts.make_section(v) for v in vectors]


def symplectic_forms(A, sections, sign=1, samples=PENCIL_SAMPLES, tol=None):
    """ The matrices of w1, w2, w3 on the given tangent sections. """
    tol = defaults.tolerance if tol is None else tol
    zetas = _pencil_zetas(samples)
    d = len(sections)
    n = A.n
    values = np.empty((samples, d, d), dtype=complex)
    scales = np.empty((samples, d, d))

    for j, zeta in enumerate(zetas):
        K = sylvester_operator(ts.evaluate(A, zeta))
        K_pinv = linalg.pinv(K)
        dots = np.array([ts.evaluate(S, zeta) for S in sections])
        potentials = []
        for dot in dots:
            b = dot.ravel()
            x = K_pinv @ b
            _check_residual(K, x, b, tol)
            potentials.append(x.reshape(n, n))
        potentials = np.array(potentials)
        values[j] = np.einsum('aij,bji->ab', potentials, dots)
        scales[j] = np.outer(
            np.linalg.norm(potentials, axis=(1, 2)),
            np.linalg.norm(dots, axis=(1, 2)),
        )

    (C0, C1, C2), _ = _fit_pencils(zetas, values, scales)

    omega1 = sign * (C1 / 2j).real
    omega2 = ((C0 + C2) / 2).real
    omega3 = ((C0 - C2) / 2j).real
    return tuple((W - W.T) / 2 for W in (omega1, omega2, omega3))


def e0_matrix(vectors):
    """ dT -> dA0 = dT2 + i dT3, as real columns [Re; Im]. """
    columns = [(v.T2 + 1j * v.T3).ravel() for v in vectors]
    M = np.array(columns).T
    return np.vstack([M.real, M.imag])


def _j1(vectors):
    M = e0_matrix(vectors)
    s = linalg.svd(M, compute_uv=False)
    condition = float(s[0] / s[-1]) if s[-1] > 0 else np.inf
    if condition > E0_CONDITION_LIMIT:
        raise IllConditioned(
            'evaluation at zeta = 0 has condition {:.3g}'.format(condition),
            condition=condition,
        )
    half = M.shape[0] // 2
    iM = np.vstack([-M[half:], M[:half]])
    J1, _, _, _ = linalg.lstsq(M, iM)
    return J1, condition


def complex_structure_J1(frame):
    J1, _ = _j1(frame.vectors)
    return J1


def signature(eigenvalues, rtol=None):
    rtol = defaults.signature_rtol if rtol is None else rtol
    eigenvalues = np.asarray(eigenvalues)
    if eigenvalues.size == 0:
        return (0, 0, 0)
    cutoff = rtol * np.abs(eigenvalues).max()
    n_plus = int(np.sum(eigenvalues > cutoff))
    n_minus = int(np.sum(eigenvalues < -cutoff))
    return (n_plus, len(eigenvalues) - n_plus - n_minus, n_minus)


def _tolerances(tol):
    return {
        "verdict": defaults.tolerance if tol is None else tol,
        "rank_rtol": defaults.rank_rtol,
        "signature_rtol": defaults.signature_rtol,
        "pencil_fit_rtol": PENCIL_FIT_RTOL,
    }


def _gram(t, vectors, sign, tol=None):
    A = ts.make_section(t, tol)
    omega1, omega2, omega3 = symplectic_forms(
        A, _frame_sections(vectors), sign=sign, tol=tol,
    )
    J1, condition = _j1(vectors)
    raw = omega1 @ J1
    norm = np.linalg.norm(raw)
    asymmetry = float(np.linalg.norm(raw - raw.T) / norm) if norm else 0.0
    gram = (raw + raw.T) / 2
    eigenvalues = np.linalg.eigvalsh(gram)
    return GramReport(
        base=t,
        gram=gram,
        omega1=omega1,
        omega2=omega2,
        omega3=omega3,
        J1=J1,
        eigenvalues=eigenvalues,
        signature=signature(eigenvalues),
        tolerances=_tolerances(tol),
        calibration=sign,
        asymmetry=asymmetry,
        e0_condition=condition,
    )


@functools.lru_cache(maxsize=None)
def calibration():
    """ Orientation of w1 making the sl(2) cone seed positive definite. """
    seed = ts.triple_from_section(ts.cone_section(2))
    report = _gram(seed, tangent_frame(seed).vectors, sign=1)
    n_plus, n_zero, n_minus = report.signature
    if n_zero == 0 and n_minus == 0:
        sign = 1
    elif n_zero == 0 and n_plus == 0:
        sign = -1
    else:
        raise CalibrationError(
            'cone seed metric is not definite: {}'.format(report.signature)
        )
    logger.info('calibrated w1 orientation: %+d', sign)
    return sign


def metric_gram(t, tol=None):
    frame = tangent_frame(t, tol)
    report = _gram(t, frame.vectors, calibration(), tol)
    logger.debug('signature %s at |T| = %.3g', report.signature, t.norm())
    return attr.evolve(report, frame=frame)


def null_criterion(t):
    return lie_core.trace_form(t.T1, lie_core.bracket(t.T2, t.T3)).real


def moment_map(t):
    """ The tri-Hamiltonian moment map of the SU(n) action: the triple. """
    return t.matrices


def scaling_check(t, scale, tol=None):
    """ Compare g at scale * T, on scaled vectors, with scale * g at T. """
    report = metric_gram(t, tol)
    scaled = ts.scale_triple(t, scale)
    vectors = [ts.scale_triple(v, scale) for v in report.frame.vectors]
    scaled_report = _gram(scaled, vectors, report.calibration, tol)
    expected = scale * report.gram
    deviation = float(
        np.linalg.norm(scaled_report.gram - expected)
        / np.linalg.norm(expected)
    )
    return ScalingReport(
        scale=scale,
        deviation=deviation,
        signature=report.signature,
        scaled_signature=scaled_report.signature,
    )


def slice_restrict(t, slodowy, tol=None):
    """ The metric on the tangent vectors whose dA0 is tangent to the
    Slodowy slice through A0.

    """
    tol = defaults.tolerance if tol is None else tol
    A = ts.make_section(t, tol)
    offset = slodowy.offset_residual(A.A0)
    if offset > tol * max(1.0, np.linalg.norm(A.A0)):
        raise NotOnSlice('A0 is {:.3g} away from the slice'.format(offset))

    report = metric_gram(t, tol)
    n = t.n
    if slodowy.kernel_basis:
        Q = linalg.orth(np.array([
            B.ravel() for B in slodowy.kernel_basis
        ]).T)
    else:
        Q = np.zeros((n * n, 0))
    complement = np.eye(n * n) - Q @ Q.conj().T

    dA0 = np.array([
        (v.T2 + 1j * v.T3).ravel() for v in report.frame.vectors
    ]).T
    normal = complement @ dA0
    W = lie_core.kernel(
        np.vstack([normal.real, normal.imag]),
        scale=np.linalg.norm(dA0, 2),
    )

    gram = W.T @ report.gram @ W
    gram = (gram + gram.T) / 2
    eigenvalues = np.linalg.eigvalsh(gram)
    return attr.evolve(
        report,
        gram=gram,
        omega1=W.T @ report.omega1 @ W,
        omega2=W.T @ report.omega2 @ W,
        omega3=W.T @ report.omega3 @ W,
        J1=W.T @ report.J1 @ W,
        eigenvalues=eigenvalues,
        signature=signature(eigenvalues),
        frame=None,
    )


def orbit_gram(t, report=None):
    """ The metric on the fundamental vector fields of the SU(n) action,
    Y_rho = ([rho, T1], [rho, T2], [rho, T3]) for rho in ``su_basis``.

    """
    report = metric_gram(t) if report is None else report
    n = t.n
    fields = np.array([
        ts.triple_to_vector(ts.RealTriple(*(
            lie_core.bracket(rho, T) for T in t.matrices
        )))
        for rho in lie_core.su_basis(n)
    ]).T
    C = report.frame.coordinates.T @ fields
    gram = C.T @ report.gram @ C
    gram = (gram + gram.T) / 2
    return OrbitReport(gram=gram, eigenvalues=np.linalg.eigvalsh(gram))
