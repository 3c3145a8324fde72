# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" Twistor sections A(zeta) = A0 + A1 zeta + A2 zeta^2 of sl(n) x O(2).

A real triple (T1, T2, T3) of traceless anti-Hermitian matrices gives the
real section with ``A0 = T2 + i T3``, ``A1 = 2i T1`` and ``A2 = T2 - i T3``.
The adjoint quotient sends a section to the binary forms
``tr(A(zeta)^k)`` of degree ``2k`` for ``k = 2..n``.

The point ``zeta = infinity`` is only ever reached through ``chart_flip``.

"""
import logging

import attr
import numpy as np
from scipy import linalg
from scipy.optimize import linear_sum_assignment

from orbitwistor import lie_core
from orbitwistor.config import defaults
from orbitwistor.constants import (
    LEVEL_GRID, LIFT_COLLISION_RTOL, LIFT_FIT_RTOL, LIFT_GRID, LIFT_RADIUS,
)
from orbitwistor.errors import DimensionError, InvalidTriple

logger = logging.getLogger('orbitwistor.sections')

LIFT = "lift"
NO_LIFT = "no_lift"
INCONCLUSIVE = "inconclusive"


def _tol(tol):
    return defaults.tolerance if tol is None else tol


@attr.s(frozen=True, eq=False)
class RealTriple(object):
    T1 = attr.ib(converter=lie_core.as_matrix)
    T2 = attr.ib(converter=lie_core.as_matrix)
    T3 = attr.ib(converter=lie_core.as_matrix)

    @property
    def n(self):
        return len(self.T1)

    @property
    def matrices(self):
        return (self.T1, self.T2, self.T3)

    def norm(self):
        return float(np.sqrt(sum(
            np.linalg.norm(T) ** 2 for T in self.matrices
        )))

    def validate(self, tol=None):
        """ Raise ``InvalidTriple`` unless traceless and anti-Hermitian. """
        tol = _tol(tol)
        shapes = {T.shape for T in self.matrices}
        if len(shapes) != 1:
            raise InvalidTriple('triple entries differ in shape')
        scale = max(1.0, self.norm())
        for name, T in zip(('T1', 'T2', 'T3'), self.matrices):
            if np.linalg.norm(T + T.conj().T) > tol * scale:
                raise InvalidTriple('{} is not anti-Hermitian'.format(name))
            if abs(np.trace(T)) > tol * scale:
                raise InvalidTriple('{} is not traceless'.format(name))
        return self


@attr.s(frozen=True, eq=False)
class TwistorSection(object):
    A0 = attr.ib(converter=lie_core.as_matrix)
    A1 = attr.ib(converter=lie_core.as_matrix)
    A2 = attr.ib(converter=lie_core.as_matrix)

    @property
    def n(self):
        return len(self.A0)

    @property
    def coefficients(self):
        """ Coefficient stack of shape ``(3, n, n)``. """
        return np.array([self.A0, self.A1, self.A2])

    def norm(self):
        return max(np.linalg.norm(A) for A in (self.A0, self.A1, self.A2))


@attr.s(frozen=True, eq=False)
class BinaryForm(object):
    """ A binary form of even degree ``2d``, stored by its coefficients
    ``c_0 .. c_2d`` in the affine coordinate ``zeta``.

    A real form satisfies ``c_(2d-j) = (-1)^(d+j) conj(c_j)``.

    """
    coeffs = attr.ib(converter=lambda c: np.asarray(c, dtype=complex))

    @coeffs.validator
    def _check_degree(self, attribute, value):
        if value.ndim != 1 or len(value) % 2 != 1:
            raise DimensionError(
                'a binary form needs an odd number of coefficients'
            )

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def half_degree(self):
        return self.degree // 2

    @property
    def reality_sign(self):
        return (-1) ** self.half_degree

    def __call__(self, zeta):
        return np.polyval(self.coeffs[::-1], zeta)

    def reality_defect(self):
        d = self.half_degree
        mirrored = np.array([
            (-1) ** (d + j) * np.conj(c) for j, c in enumerate(self.coeffs)
        ])
        return float(np.abs(self.coeffs[::-1] - mirrored).max())

    def is_real(self, tol=None):
        scale = max(1.0, float(np.abs(self.coeffs).max()))
        return self.reality_defect() <= _tol(tol) * scale


@attr.s(frozen=True, eq=False)
class InvariantSection(object):
    n = attr.ib()
    forms = attr.ib()

    @forms.validator
    def _check_forms(self, attribute, value):
        degrees = [form.degree for form in value]
        if degrees != list(range(4, 2 * self.n + 1, 2)):
            raise DimensionError(
                'sl({}) needs forms of degrees 4..{}, got {}'.format(
                    self.n, 2 * self.n, degrees)
            )

    def vector(self):
        """ All coefficients, concatenated in degree order. """
        return np.concatenate([form.coeffs for form in self.forms])

    def norm(self):
        return float(np.abs(self.vector()).max()) if self.forms else 0.0

    def is_real(self, tol=None):
        return all(form.is_real(tol) for form in self.forms)

    @classmethod
    def zero(cls, n):
        return cls(n=n, forms=[
            BinaryForm(np.zeros(2 * k + 1)) for k in range(2, n + 1)
        ])

    @classmethod
    def from_vector(cls, n, vector):
        forms, start = [], 0
        for k in range(2, n + 1):
            forms.append(BinaryForm(vector[start:start + 2 * k + 1]))
            start += 2 * k + 1
        return cls(n=n, forms=forms)


@attr.s(frozen=True)
class LevelReport(object):
    p1 = attr.ib()
    p1_ratio = attr.ib()
    determinant_regular = attr.ib()
    max_centralizer_gap = attr.ib()
    grid_points = attr.ib()
    grid_regular = attr.ib()

    @property
    def regular(self):
        return self.determinant_regular and self.grid_regular


@attr.s(frozen=True, eq=False)
class CartanLiftReport(object):
    status = attr.ib()
    branches = attr.ib(default=None)
    monodromy = attr.ib(default=None)
    fit_residual = attr.ib(default=None)
    min_separation = attr.ib(default=None)

    @property
    def lift(self):
        return self.status == LIFT


def make_section(t, tol=None):
    t.validate(tol)
    return TwistorSection(
        A0=t.T2 + 1j * t.T3, A1=2j * t.T1, A2=t.T2 - 1j * t.T3,
    )


level_section = make_section


def is_real(A, tol=None):
    scale = max(1.0, A.norm())
    defect = max(
        np.linalg.norm(A.A2 + A.A0.conj().T),
        np.linalg.norm(A.A1 - A.A1.conj().T),
    )
    return defect <= _tol(tol) * scale


def triple_from_section(A, tol=None):
    """ Inverse of ``make_section`` on real sections. """
    if not is_real(A, tol):
        raise InvalidTriple('section is not real')
    return RealTriple(
        T1=A.A1 / 2j, T2=(A.A0 + A.A2) / 2, T3=(A.A0 - A.A2) / 2j,
    )


def chart_flip(A):
    return TwistorSection(A0=A.A2, A1=A.A1, A2=A.A0)


def evaluate(A, zeta):
    return A.A0 + zeta * A.A1 + zeta ** 2 * A.A2


def _poly_mul(P, Q):
    out = np.zeros((len(P) + len(Q) - 1,) + P.shape[1:], dtype=complex)
    for i, Pi in enumerate(P):
        for j, Qj in enumerate(Q):
            out[i + j] += Pi @ Qj
    return out


def section_powers(A, k_max):
    """ Coefficient stacks of A(zeta)^k for k = 0..k_max. """
    coeffs = A.coefficients
    powers = [np.eye(A.n, dtype=complex)[np.newaxis]]
    for _ in range(k_max):
        powers.append(_poly_mul(powers[-1], coeffs))
    return powers


def adjoint_quotient(A):
    powers = section_powers(A, A.n)
    forms = [
        BinaryForm(np.trace(powers[k], axis1=1, axis2=2))
        for k in range(2, A.n + 1)
    ]
    return InvariantSection(n=A.n, forms=forms)


def _pairings(C, basis):
    # tr(C_a B_b) for every coefficient a and basis element b
    return np.einsum('aij,bji->ab', C, np.array(basis))


def jacobian(A):
    """ Matrix of d_A pi over ``lie_core.sl_basis``.

    Row block k (k = 2..n) holds the 2k - 1 zeta-coefficients of
    ``xi -> k tr(A(zeta)^(k-1) xi)``, lowest power first.

    """
    powers = section_powers(A, A.n - 1)
    basis = lie_core.sl_basis(A.n)
    blocks = [k * _pairings(powers[k - 1], basis) for k in range(2, A.n + 1)]
    return np.vstack(blocks)


def p1(A):
    return complex(np.linalg.det(jacobian(A)))


def p1_ratio(A):
    """ |det d_A pi| relative to the Hadamard bound of its rows. """
    J = jacobian(A)
    row_norms = np.linalg.norm(J, axis=1)
    bound = np.prod(row_norms)
    if bound == 0:
        return 0.0
    return float(abs(np.linalg.det(J)) / bound)


def in_D1(A, tol=None):
    return p1_ratio(A) <= _tol(tol)


def p2(A):
    return lie_core.trace_form(A.A1, lie_core.bracket(A.A0, A.A2))


def in_D2(A, tol=None):
    scale = np.prod([np.linalg.norm(X) for X in (A.A0, A.A1, A.A2)])
    return abs(p2(A)) <= _tol(tol) * scale


def is_regular_twistor_line(t, tol=None):
    try:
        A = make_section(t, tol)
    except InvalidTriple:
        return False
    return is_real(A, tol) and not in_D1(A, tol)


def _grid(grid_size):
    radii = np.linspace(0.0, 1.0, grid_size + 1)
    angles = 2 * np.pi * np.arange(4 * grid_size) / (4 * grid_size)
    points = [0j] + [
        r * np.exp(1j * theta) for r in radii[1:] for theta in angles
    ]
    return points


def check_level_regular(l, grid_size=LEVEL_GRID, tol=None):
    """ Check that the level section of ``l`` is a regular twistor line.

    Two signals are reported: the determinant criterion ``p1 != 0`` and
    the largest excess of ``centralizer_dim(A(zeta))`` over ``n - 1`` on a
    polar grid of the closed unit disc, in both charts.

    """
    A = level_section(l, tol)
    scale = A.norm()
    n = A.n
    gap = 0
    points = _grid(grid_size)
    for chart in (A, chart_flip(A)):
        for zeta in points:
            dim = lie_core.centralizer_dim(evaluate(chart, zeta), scale=scale)
            gap = max(gap, dim - (n - 1))

    ratio = p1_ratio(A)
    report = LevelReport(
        p1=p1(A),
        p1_ratio=ratio,
        determinant_regular=bool(is_real(A, tol) and ratio > _tol(tol)),
        max_centralizer_gap=int(gap),
        grid_points=2 * len(points),
        grid_regular=gap == 0,
    )
    logger.debug('level check: %s', report)
    return report


def triple_to_vector(t):
    basis = lie_core.su_basis(t.n)
    return np.array([
        np.vdot(B, T).real for T in t.matrices for B in basis
    ])


def vector_to_triple(n, v):
    basis = np.array(lie_core.su_basis(n))
    size = len(basis)
    if len(v) != 3 * size:
        raise DimensionError(
            'expected {} coordinates, got {}'.format(3 * size, len(v))
        )
    T1, T2, T3 = (
        np.tensordot(v[i * size:(i + 1) * size], basis, axes=1)
        for i in range(3)
    )
    return RealTriple(T1=T1, T2=T2, T3=T3)


def scale_triple(t, factor):
    return RealTriple(*(factor * T for T in t.matrices))


def negate_triple(t):
    return scale_triple(t, -1.0)


def conjugate_triple(g, t):
    g_inv = np.linalg.inv(g)
    return RealTriple(*(g @ T @ g_inv for T in t.matrices))


def real_jacobian(t):
    """ Real linearization of T -> pi(A_T) in ``su_basis`` coordinates.

    Columns are the ``3(n^2 - 1)`` coordinates of (T1, T2, T3); rows
    are the real parts, then the imaginary parts, of every coefficient of
    ``d p_k(A(zeta); dA(zeta))`` for k = 2..n.

    """
    A = make_section(t)
    n = A.n
    powers = section_powers(A, n - 1)
    basis = lie_core.su_basis(n)
    size = len(basis)

    blocks = []
    for k in range(2, n + 1):
        M = _pairings(powers[k - 1], basis)
        # zero padding so that M[m] and M[m - 2] exist for m = 0..2k
        padded = np.vstack([np.zeros((2, size)), M, np.zeros((2, size))])
        low = padded[2:]        # index m -> M[m]
        mid = padded[1:-1]      # index m -> M[m - 1]
        high = padded[:-2]      # index m -> M[m - 2]
        block = np.hstack([
            2j * mid[:2 * k + 1],
            low[:2 * k + 1] + high[:2 * k + 1],
            1j * (low[:2 * k + 1] - high[:2 * k + 1]),
        ])
        blocks.append(k * block)

    J = np.vstack(blocks)
    return np.vstack([J.real, J.imag])


def residual_vector(t, target):
    """ Real residual of pi(A_T) - target, stacked as in ``real_jacobian``. """
    delta = adjoint_quotient(make_section(t)).vector() - target.vector()
    return np.concatenate([delta.real, delta.imag])


def weighted_scale(s, factor):
    """ The weighted action: form of degree 2k is multiplied by factor^k. """
    return InvariantSection(n=s.n, forms=[
        BinaryForm(factor ** form.half_degree * form.coeffs)
        for form in s.forms
    ])


def linear_scale(s, factor):
    return InvariantSection(n=s.n, forms=[
        BinaryForm(factor * form.coeffs) for form in s.forms
    ])


def random_real_form(d, rng, scale=1.0):
    coeffs = np.zeros(2 * d + 1, dtype=complex)
    for j in range(d):
        coeffs[j] = rng.standard_normal() + 1j * rng.standard_normal()
        coeffs[2 * d - j] = (-1) ** (d + j) * np.conj(coeffs[j])
    coeffs[d] = rng.standard_normal()
    return BinaryForm(scale * coeffs)


def random_real_section(n, rng, scale=1.0):
    return InvariantSection(n=n, forms=[
        random_real_form(k, rng, scale ** k) for k in range(2, n + 1)
    ])


def _elementary(p):
    # Newton's identities; p[k] is the k-th power sum, p[0] is unused
    e = [np.ones_like(p[0])]
    for k in range(1, len(p)):
        total = sum(
            (-1) ** (i - 1) * e[k - i] * p[i] for i in range(1, k + 1)
        )
        e.append(total / k)
    return e


def _branch_values(s, zetas):
    n = s.n
    zero = np.zeros(len(zetas), dtype=complex)
    # traceless, so p_1 vanishes
    e = _elementary([zero, zero] + [form(zetas) for form in s.forms])
    roots = []
    for j in range(len(zetas)):
        poly = [(-1) ** k * e[k][j] for k in range(n + 1)]
        roots.append(np.roots(poly))
    return np.array(roots)


def cartan_lift(s, grid_size=LIFT_GRID, radius=LIFT_RADIUS):
    """ Test whether ``s`` factors through quadratic eigenvalue sections.

    The eigenvalues of A(zeta) are recovered from the power sums by
    Newton's identities, tracked continuously once around the circle
    ``|zeta| = radius`` and fitted by quadratics. A nontrivial monodromy
    or a branch that is not quadratic means there is no lift. Colliding
    branches make the test inconclusive.

    """
    if s.norm() == 0:
        zero = [np.zeros(3, dtype=complex) for _ in range(s.n)]
        return CartanLiftReport(
            status=LIFT, branches=zero, monodromy=list(range(s.n)),
            fit_residual=0.0,
        )

    zetas = radius * np.exp(2j * np.pi * np.arange(grid_size + 1) / grid_size)
    raw = _branch_values(s, zetas)
    scale = max(1.0, float(np.abs(raw).max()))

    tracked = np.empty_like(raw)
    tracked[0] = raw[0]
    min_separation = np.inf
    for j in range(1, len(zetas)):
        cost = np.abs(tracked[j - 1][:, np.newaxis] - raw[j][np.newaxis, :])
        _, columns = linear_sum_assignment(cost)
        tracked[j] = raw[j][columns]
        gaps = np.abs(tracked[j][:, np.newaxis] - tracked[j][np.newaxis, :])
        gaps[np.diag_indices_from(gaps)] = np.inf
        min_separation = min(min_separation, float(gaps.min()))

    if min_separation <= LIFT_COLLISION_RTOL * scale:
        logger.info('eigenvalue branches collide on |zeta| = %s', radius)
        return CartanLiftReport(
            status=INCONCLUSIVE, min_separation=min_separation,
        )

    cost = np.abs(tracked[0][:, np.newaxis] - tracked[-1][np.newaxis, :])
    _, monodromy = linear_sum_assignment(cost)
    monodromy = [int(i) for i in monodromy]
    if monodromy != list(range(s.n)):
        return CartanLiftReport(
            status=NO_LIFT, monodromy=monodromy,
            min_separation=min_separation,
        )

    V = np.vander(zetas[:-1], 3, increasing=True)
    branches, residual = [], 0.0
    for values in tracked[:-1].T:
        coeffs, _, _, _ = linalg.lstsq(V, values)
        branches.append(coeffs)
        residual = max(
            residual, float(np.abs(V @ coeffs - values).max()) / scale,
        )

    status = LIFT if residual <= LIFT_FIT_RTOL else NO_LIFT
    return CartanLiftReport(
        status=status, branches=branches, monodromy=monodromy,
        fit_residual=residual, min_separation=min_separation,
    )


def cone_section(n):
    """ e - h zeta - f zeta^2 for the principal sl(2)-triple of sl(n).

    A(zeta) is Ad(exp(zeta f)) e, nilpotent and regular for every zeta.

    """
    triple = lie_core.principal_sl2(n)
    return TwistorSection(A0=triple.e, A1=-triple.h, A2=-triple.f)
