# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" The SU(2)-invariant ALE family over C^2 / Z_2

    g = P^(-1/2) dr^2 + (r^2 / 4) P^(-1/2) (L2 L3 s1^2 + L3 L1 s2^2
                                             + L1 L2 s3^2)

with ``L_i = 1 - 16 a_i / r^4`` and ``P = L1 L2 L3``, defined for
``r^4 > 16 a_3``. a = (0, a, a) is Eguchi-Hanson and a = 0 is flat.

The coframe is realized on Euler angles (theta, phi, psi) as

    s1 =  sin(psi) dtheta - cos(psi) sin(theta) dphi
    s2 = -cos(psi) dtheta - sin(psi) sin(theta) dphi
    s3 = -dpsi - cos(theta) dphi

so that ds_i = -s_j ^ s_k for (i, j, k) cyclic.

"""
import logging

import attr
import numpy as np
from scipy import integrate

from orbitwistor.constants import (
    ALE_FD_STEP, ALE_RICHARDSON_FACTOR, ALE_RICHARDSON_RTOL,
)
from orbitwistor.errors import DomainError, StepTooLarge

logger = logging.getLogger('orbitwistor.ale')

# curvature norms below FLAT_RTOL / r^2 are reported in absolute terms
FLAT_RTOL = 1e-6
# ricci_fd points must satisfy r > r* (1 + BOUNDARY_MARGIN)
BOUNDARY_MARGIN = 1e-3

CSV_COLUMNS = [
    "r", "g_rr", "g_11", "g_22", "g_33", "integrand", "cumulative_distance",
]


def _ordered(instance, attribute, value):
    a1, a2, a3 = instance.a1, instance.a2, instance.a3
    if not 0 <= a1 <= a2 <= a3:
        raise DomainError(
            'parameters must satisfy 0 <= a1 <= a2 <= a3, got '
            '({}, {}, {})'.format(a1, a2, a3)
        )


@attr.s(frozen=True)
class ALEParams(object):
    a1 = attr.ib(converter=float)
    a2 = attr.ib(converter=float)
    a3 = attr.ib(converter=float, validator=_ordered)

    @classmethod
    def canonical(cls, *values):
        if len(values) != 3:
            raise DomainError('three parameters needed')
        return cls(*sorted(float(v) for v in values))

    @property
    def values(self):
        return np.array([self.a1, self.a2, self.a3])

    @property
    def r_star(self):
        return (16 * self.a3) ** 0.25


@attr.s(frozen=True)
class ALEMetricSample(object):
    r = attr.ib()
    g_rr = attr.ib()
    g_11 = attr.ib()
    g_22 = attr.ib()
    g_33 = attr.ib()

    @property
    def angular(self):
        return np.array([self.g_11, self.g_22, self.g_33])


@attr.s(frozen=True)
class RicciReport(object):
    point = attr.ib()
    step = attr.ib()
    ricci_norm = attr.ib()
    riemann_norm = attr.ib()
    relative = attr.ib()
    flat = attr.ib()
    richardson_change = attr.ib()

    def as_document(self):
        return attr.asdict(self)


@attr.s(frozen=True)
class AsymptoticRow(object):
    rho = attr.ib()
    ratios = attr.ib()

    @property
    def deviation(self):
        return max(abs(ratio - 1.0) for ratio in self.ratios)


def _lambdas(a, r, excess):
    """ L_i from ``excess = r^4 - r*^4``, free of cancellation near r*. """
    offsets = 16 * (a.a3 - a.values)
    offsets = offsets.reshape((3,) + (1,) * np.ndim(r))
    return (excess + offsets) / r ** 4


def _excess(a, r):
    r_star = a.r_star
    return (r - r_star) * (r + r_star) * (r * r + r_star * r_star)


def _sample(a, r, excess):
    L1, L2, L3 = _lambdas(a, r, excess)
    scale = (L1 * L2 * L3) ** -0.5
    quarter = r * r / 4
    return ALEMetricSample(
        r=r,
        g_rr=scale,
        g_11=scale * quarter * L2 * L3,
        g_22=scale * quarter * L3 * L1,
        g_33=scale * quarter * L1 * L2,
    )


def metric_coeffs(a, r):
    if r <= a.r_star:
        raise DomainError(
            'r = {} is not beyond the boundary r* = {}'.format(r, a.r_star)
        )
    return _sample(a, r, _excess(a, r))


def integrand(a, r):
    """ sqrt(g_rr) = P^(-1/4), the radial line element. """
    return metric_coeffs(a, r).g_rr ** 0.5


def _substituted(a, u):
    # r = r* + u^4 removes the (r - r*)^(-1/4) endpoint singularity
    r_star = a.r_star
    r = r_star + u ** 4
    excess = u ** 4 * (r + r_star) * (r * r + r_star * r_star)
    L = _lambdas(a, r, excess)
    return 4 * u ** 3 * np.prod(L, axis=0) ** -0.25


def boundary_distance(a, R):
    """ Length of the radial geodesic from the boundary r* out to R. """
    if R <= a.r_star:
        raise DomainError('R must exceed r* = {}'.format(a.r_star))
    top = (R - a.r_star) ** 0.25
    value, error = integrate.quad(
        lambda u: _substituted(a, u), 0.0, top, epsabs=1e-13, epsrel=1e-12,
    )
    logger.debug('distance to %s: %s (+- %.2g)', R, value, error)
    return value


def distance_refinements(a, R, orders=(32, 64, 128)):
    """ Gauss-Legendre values of ``boundary_distance`` at growing orders. """
    if R <= a.r_star:
        raise DomainError('R must exceed r* = {}'.format(a.r_star))
    top = (R - a.r_star) ** 0.25
    values = []
    for order in orders:
        nodes, weights = np.polynomial.legendre.leggauss(order)
        u = top * (nodes + 1) / 2
        values.append(float(top / 2 * np.dot(weights, _substituted(a, u))))
    return values


def grid(a, rmax, size):
    """ Rows of ``CSV_COLUMNS`` on ``size`` radii in (r*, rmax]. """
    r_star = a.r_star
    if rmax <= r_star:
        raise DomainError('rmax must exceed r* = {}'.format(r_star))
    rows = []
    for j in range(1, size + 1):
        r = r_star + (rmax - r_star) * j / size
        sample = metric_coeffs(a, r)
        rows.append([
            r, sample.g_rr, sample.g_11, sample.g_22, sample.g_33,
            sample.g_rr ** 0.5, boundary_distance(a, r),
        ])
    return rows


def rho_asymptotics(a, rho_grid):
    """ Compare the family near r* with its model in the coordinate rho,
    ``r^4 = 16 a3 (1 + 2 rho^3 / 3)``:

        (3 a3 / 2)^(-1/2) g ~ rho^(5/2) drho^2
                              + (2/3) rho^(3/2) (s1^2 + s2^2)
                              + rho^(-3/2) s3^2

    Returns ratios exact / model for (rho rho, 11, 22, 33).

    """
    if not (a.a1 == a.a2 == 0 < a.a3):
        raise DomainError('rho asymptotics need a1 = a2 = 0 < a3')
    c = (1.5 * a.a3) ** -0.5
    r_star = a.r_star
    rows = []
    for rho in rho_grid:
        x = 2 * rho ** 3 / 3
        r = r_star * (1 + x) ** 0.25
        sample = _sample(a, r, 16 * a.a3 * x)
        dr_drho = r_star / 2 * (1 + x) ** -0.75 * rho ** 2
        exact = c * np.array([
            sample.g_rr * dr_drho ** 2,
            sample.g_11,
            sample.g_22,
            sample.g_33,
        ])
        model = np.array([
            rho ** 2.5,
            2 * rho ** 1.5 / 3,
            2 * rho ** 1.5 / 3,
            rho ** -1.5,
        ])
        rows.append(AsymptoticRow(rho=rho, ratios=tuple(exact / model)))
    return rows


def coframe(theta, phi, psi):
    """ Rows s_i as components along (dtheta, dphi, dpsi). """
    return np.array([
        [np.sin(psi), -np.cos(psi) * np.sin(theta), 0.0],
        [-np.cos(psi), -np.sin(psi) * np.sin(theta), 0.0],
        [0.0, -np.cos(theta), -1.0],
    ])


def coframe_defect(angles, step=1e-5):
    """ max |ds_i + s_j ^ s_k| at ``angles``, by central differences. """
    angles = np.asarray(angles, dtype=float)
    s = coframe(*angles)
    derivatives = []
    for mu in range(3):
        e = np.zeros(3)
        e[mu] = step
        derivatives.append(
            (coframe(*(angles + e)) - coframe(*(angles - e))) / (2 * step)
        )
    D = np.array(derivatives)      # D[mu, i, nu] = d_mu s_i,nu

    defect = 0.0
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        d_sigma = D[:, i, :] - D[:, i, :].T
        wedge = np.outer(s[j], s[k]) - np.outer(s[k], s[j])
        defect = max(defect, float(np.abs(d_sigma + wedge).max()))
    return defect


def coordinate_metric(a, x):
    """ Components of g in the coordinates (r, theta, phi, psi). """
    r, theta, phi, psi = x
    sample = metric_coeffs(a, r)
    s = coframe(theta, phi, psi)
    g = np.zeros((4, 4))
    g[0, 0] = sample.g_rr
    g[1:, 1:] = s.T @ np.diag(sample.angular) @ s
    return g


def _derivatives(a, x, h):
    x = np.asarray(x, dtype=float)
    g0 = coordinate_metric(a, x)
    shifts = np.eye(4) * h

    def at(offset):
        return coordinate_metric(a, x + offset)

    D1 = np.empty((4, 4, 4))
    D2 = np.empty((4, 4, 4, 4))
    for c in range(4):
        plus, minus = at(shifts[c]), at(-shifts[c])
        D1[c] = (plus - minus) / (2 * h)
        D2[c, c] = (plus - 2 * g0 + minus) / h ** 2
        for d in range(c + 1, 4):
            mixed = (
                at(shifts[c] + shifts[d]) - at(shifts[c] - shifts[d])
                - at(-shifts[c] + shifts[d]) + at(-shifts[c] - shifts[d])
            ) / (4 * h * h)
            D2[c, d] = D2[d, c] = mixed
    return g0, D1, D2


def riemann_fd(a, x, h):
    """ R_iklm and R_km at ``x`` from second order central differences.

    R_iklm = (g_im,kl + g_kl,im - g_il,km - g_km,il) / 2
             + g_np (G^n_kl G^p_im - G^n_km G^p_il)

    """
    g, D1, D2 = _derivatives(a, x, h)
    g_inv = np.linalg.inv(g)
    lowered = 0.5 * (
        np.einsum('kpl->pkl', D1) + np.einsum('lpk->pkl', D1) - D1
    )
    gamma = np.einsum('np,pkl->nkl', g_inv, lowered)

    R = 0.5 * (
        np.einsum('klim->iklm', D2) + np.einsum('imkl->iklm', D2)
        - np.einsum('kmil->iklm', D2) - np.einsum('ilkm->iklm', D2)
    )
    R += np.einsum('np,nkl,pim->iklm', g, gamma, gamma)
    R -= np.einsum('np,nkm,pil->iklm', g, gamma, gamma)

    ricci = np.einsum('il,iklm->km', g_inv, R)
    return g_inv, R, ricci


def _norms(g_inv, R, ricci):
    R_up = np.einsum('ai,bk,cl,dm,iklm->abcd', g_inv, g_inv, g_inv, g_inv, R)
    ricci_up = g_inv @ ricci @ g_inv
    return (
        float(np.sqrt(abs(np.sum(R * R_up)))),
        float(np.sqrt(abs(np.sum(ricci * ricci_up)))),
    )


def ricci_fd(a, point, step=None):
    """ Relative Ricci norm |Ric| / |Rm| at ``point = (r, theta, phi, psi)``.

    Curvature at steps h and h / 2 is Richardson extrapolated. When the
    Riemann tensor itself is numerically zero the absolute Ricci norm is
    reported and ``flat`` is set.

    """
    r = point[0]
    if r <= a.r_star * (1 + BOUNDARY_MARGIN):
        raise DomainError('point too close to the boundary r*')
    h = ALE_FD_STEP * r if step is None else step

    g_inv, R_coarse, ricci_coarse = riemann_fd(a, point, h)
    _, R_fine, ricci_fine = riemann_fd(
        a, point, h / ALE_RICHARDSON_FACTOR,
    )
    weight = ALE_RICHARDSON_FACTOR ** 2
    R = (weight * R_fine - R_coarse) / (weight - 1)
    ricci = (weight * ricci_fine - ricci_coarse) / (weight - 1)

    riemann_norm, ricci_norm = _norms(g_inv, R, ricci)
    fine_norm, _ = _norms(g_inv, R_fine, ricci_fine)
    flat = riemann_norm <= FLAT_RTOL / r ** 2

    change = 0.0
    if not flat:
        change = abs(riemann_norm - fine_norm) / riemann_norm
        if change > ALE_RICHARDSON_RTOL:
            raise StepTooLarge(
                'Richardson changed |Rm| by {:.3g} at step {}'.format(
                    change, h)
            )

    relative = ricci_norm if flat else ricci_norm / riemann_norm
    return RicciReport(
        point=tuple(float(v) for v in point),
        step=h,
        ricci_norm=ricci_norm,
        riemann_norm=riemann_norm,
        relative=relative,
        flat=flat,
        richardson_change=change,
    )


def ale_orbit_fit(mu):
    """ Family parameters x_i = 16 a_i / r^4 (a1 = 0) from the metric on an
    SU(2) orbit, given its three eigenvalues.

    The orbit coefficients are proportional to 1 / L_i, so with the
    eigenvalues sorted ``x_i = 1 - mu_1 / mu_i``.

    """
    mu = np.sort(np.abs(np.asarray(mu, dtype=float)))
    if len(mu) != 3 or mu[0] <= 0:
        raise DomainError('three nonzero orbit eigenvalues needed')
    return 1.0 - mu[0] / mu
