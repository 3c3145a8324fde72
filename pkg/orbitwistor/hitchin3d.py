# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" The SU(2)-equivariant, SU(n)-invariant map from triples to binary
forms, and the SU(2) action on both sides.

A form of degree ``m`` is F(x, y) = sum_j c_j x^(m-j) y^j with
``zeta = y / x``. SU(2) acts on the left by (u.F)(z) = F(u^-1 z), so for
``u = [[alpha, beta], [-conj(beta), conj(alpha)]]``

    (u.F)(1, zeta) = sum_j c_j (conj(alpha) - beta zeta)^(m-j)
                               (conj(beta) + alpha zeta)^j

"""
import attr
import numpy as np
from numpy.polynomial import polynomial

from orbitwistor import twistor_sections as ts
from orbitwistor.errors import DomainError

# |alpha|^2 + |beta|^2 must be 1 to this tolerance
UNIT_TOL = 1e-10


def _unit(instance, attribute, value):
    norm = abs(instance.alpha) ** 2 + abs(instance.beta) ** 2
    if abs(norm - 1.0) > UNIT_TOL:
        raise DomainError(
            'not in SU(2): |alpha|^2 + |beta|^2 = {}'.format(norm)
        )


@attr.s(frozen=True)
class SU2Element(object):
    alpha = attr.ib(converter=complex)
    beta = attr.ib(converter=complex, validator=_unit)

    @property
    def matrix(self):
        a, b = self.alpha, self.beta
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]])

    def inverse(self):
        return SU2Element(self.alpha.conjugate(), -self.beta)

    def __mul__(self, other):
        product = self.matrix @ other.matrix
        return SU2Element(product[0, 0], product[0, 1])

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0)

    @classmethod
    def diagonal(cls, theta):
        return cls(np.exp(1j * theta), 0.0)


def random_su2(rng):
    v = rng.standard_normal(4)
    v /= np.linalg.norm(v)
    return SU2Element(complex(v[0], v[1]), complex(v[2], v[3]))


def substitution_matrix(u, degree):
    """ S with (u.F) coefficients = S @ (F coefficients). """
    a = u.alpha.conjugate()
    b = -u.beta
    c = u.beta.conjugate()
    d = u.alpha
    S = np.zeros((degree + 1, degree + 1), dtype=complex)
    for j in range(degree + 1):
        column = polynomial.polymul(
            polynomial.polypow([a, b], degree - j),
            polynomial.polypow([c, d], j),
        )
        S[:len(column), j] = column
    return S


def su2_act_form(u, form):
    return ts.BinaryForm(substitution_matrix(u, form.degree) @ form.coeffs)


def su2_act_section(u, A):
    S = substitution_matrix(u, 2)
    B = np.einsum('mj,jab->mab', S, A.coefficients)
    return ts.TwistorSection(*B)


def su2_act_triple(u, t):
    return ts.triple_from_section(su2_act_section(u, ts.make_section(t)))


# columns: the (A0, A1, A2) coefficients of T1, T2 and T3
_TRIPLE_TO_SECTION = np.array([
    [0, 1, 1j],
    [2j, 0, 0],
    [0, 1, -1j],
])


def induced_rotation(u):
    """ The real 3 x 3 matrix by which ``u`` mixes (T1, T2, T3). """
    P = _TRIPLE_TO_SECTION
    R = np.linalg.solve(P, substitution_matrix(u, 2) @ P)
    return R.real


def hitchin_map(t):
    return ts.adjoint_quotient(ts.make_section(t))


def s_phi_pointwise(phi1, phi2, phi3):
    """ The section s_phi at one point, from the components of a Higgs
    field phi = sum phi_i dx_i in an orthonormal coframe.

    """
    return hitchin_map(ts.RealTriple(phi1, phi2, phi3))
