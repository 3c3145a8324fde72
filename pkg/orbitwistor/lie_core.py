# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

""" Floating point primitives for sl(n, C).

Elements of sl(n, C) are plain ``numpy`` complex arrays of shape
``(n, n)``. The invariant form is the trace form ``tr(XY)``, which is
``1 / 2n`` times the Killing form, and the Ad-invariant polynomials are
the power sums ``tr(X^k)`` for ``k = 2..n``.

"""
import logging

import attr
import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from orbitwistor.config import defaults
from orbitwistor.errors import DimensionError

logger = logging.getLogger('orbitwistor.lie')


def as_matrix(X):
    X = np.asarray(X, dtype=complex)
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise DimensionError('not a square matrix: shape {}'.format(X.shape))
    return X


def _pair(X, Y):
    X, Y = as_matrix(X), as_matrix(Y)
    if X.shape != Y.shape:
        raise DimensionError(
            'dimension mismatch: {} and {}'.format(X.shape, Y.shape)
        )
    return X, Y


def bracket(X, Y):
    X, Y = _pair(X, Y)
    return X @ Y - Y @ X


def trace_form(X, Y):
    X, Y = _pair(X, Y)
    # tr(XY) without forming the product
    return complex(np.sum(X * Y.T))


def numerical_rank(M, rtol=None, scale=None):
    """ Rank of ``M`` from its singular values.

    Singular values at or below ``rtol * max(s_max, scale)`` count as zero.
    ``scale`` is an absolute reference for operators that may themselves
    be numerically zero.

    """
    rtol = defaults.rank_rtol if rtol is None else rtol
    M = np.atleast_2d(M)
    if M.size == 0:
        return 0
    s = linalg.svd(M, compute_uv=False)
    reference = max(s[0] if len(s) else 0.0, scale or 0.0)
    return int(np.sum(s > rtol * reference))


def kernel(M, rtol=None, scale=None):
    """ Orthonormal basis (as columns) of the numerical kernel of ``M``. """
    rtol = defaults.rank_rtol if rtol is None else rtol
    M = np.atleast_2d(M)
    n_cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(n_cols, dtype=M.dtype)
    _, s, vh = linalg.svd(M, full_matrices=True)
    reference = max(s[0] if len(s) else 0.0, scale or 0.0)
    rank = int(np.sum(s > rtol * reference))
    return vh[rank:].conj().T


def sl_basis(n):
    """ The basis E_ij (i != j) followed by H_k = E_kk - E_k+1,k+1. """
    basis = []
    for i in range(n):
        for j in range(n):
            if i != j:
                E = np.zeros((n, n), dtype=complex)
                E[i, j] = 1.0
                basis.append(E)
    for k in range(n - 1):
        H = np.zeros((n, n), dtype=complex)
        H[k, k] = 1.0
        H[k + 1, k + 1] = -1.0
        basis.append(H)
    return basis


def su_basis(n):
    """ Real basis of su(n), orthonormal for Re tr(X^dagger Y). """
    basis = []
    root_two = np.sqrt(2.0)
    for i in range(n):
        for j in range(i + 1, n):
            X = np.zeros((n, n), dtype=complex)
            X[i, j], X[j, i] = 1.0, -1.0
            basis.append(X / root_two)
            Y = np.zeros((n, n), dtype=complex)
            Y[i, j], Y[j, i] = 1j, 1j
            basis.append(Y / root_two)
    for k in range(1, n):
        D = np.zeros((n, n), dtype=complex)
        D[:k, :k] = np.eye(k)
        D[k, k] = -k
        basis.append(1j * D / np.sqrt(k * (k + 1)))
    return basis


def ad_matrix(X):
    """ Matrix of xi -> [X, xi] from sl(n) (in ``sl_basis``) to gl(n). """
    X = as_matrix(X)
    return np.array([bracket(X, B).ravel() for B in sl_basis(len(X))]).T


def centralizer_dim(X, rtol=None, scale=None):
    """ Complex dimension of the centralizer of ``X`` in sl(n).

    This is the kernel dimension of the Sylvester operator
    xi -> X xi - xi X restricted to traceless matrices.

    """
    X = as_matrix(X)
    n = len(X)
    M = ad_matrix(X)
    return (n * n - 1) - numerical_rank(M, rtol=rtol, scale=scale)


def centralizer_basis(X, rtol=None, scale=None):
    X = as_matrix(X)
    n = len(X)
    null = kernel(ad_matrix(X), rtol=rtol, scale=scale)
    basis = sl_basis(n)
    return [
        sum(c * B for c, B in zip(column, basis)) for column in null.T
    ]


def is_regular_element(X, rtol=None, scale=None):
    X = as_matrix(X)
    return centralizer_dim(X, rtol=rtol, scale=scale) == len(X) - 1


def common_centralizer_dim(matrices, rtol=None):
    """ Dimension of the common centralizer of a family of matrices. """
    matrices = [as_matrix(A) for A in matrices]
    M = np.vstack([ad_matrix(A) for A in matrices])
    return M.shape[1] - numerical_rank(M, rtol=rtol)


def commuting_triple(matrices, rtol=None):
    """ True when every pairwise bracket vanishes relative to the inputs. """
    rtol = defaults.rank_rtol if rtol is None else rtol
    matrices = [as_matrix(A) for A in matrices]
    scale = max(np.linalg.norm(A) for A in matrices) ** 2
    for i, A in enumerate(matrices):
        for B in matrices[i + 1:]:
            if np.linalg.norm(bracket(A, B)) > rtol * scale:
                return False
    return True


def power_sums(X):
    X = as_matrix(X)
    sums = []
    power = X.copy()
    for _ in range(2, len(X) + 1):
        power = power @ X
        sums.append(complex(np.trace(power)))
    return sums


def power_sum_differential(X, xi, k):
    """ Directional derivative k tr(X^(k-1) xi) of tr(X^k). """
    X, xi = _pair(X, xi)
    if not 2 <= k <= len(X):
        raise DimensionError(
            'power sum degree {} out of range 2..{}'.format(k, len(X))
        )
    return k * trace_form(np.linalg.matrix_power(X, k - 1), xi)


@attr.s(frozen=True)
class SL2Triple(object):
    h = attr.ib()
    e = attr.ib()
    f = attr.ib()

    @property
    def n(self):
        return len(self.h)

    def defect(self):
        """ Largest violation of the three sl(2) relations. """
        return max(
            np.abs(bracket(self.h, self.e) - 2 * self.e).max(),
            np.abs(bracket(self.h, self.f) + 2 * self.f).max(),
            np.abs(bracket(self.e, self.f) - self.h).max(),
        )


@attr.s(frozen=True)
class SlodowySlice(object):
    base = attr.ib()
    kernel_basis = attr.ib()

    @property
    def dimension(self):
        return len(self.kernel_basis)

    def offset_residual(self, X):
        """ Distance of ``X - base`` from the span of ``kernel_basis``. """
        delta = as_matrix(X) - self.base
        if not self.kernel_basis:
            return float(np.linalg.norm(delta))
        K = np.array([B.ravel() for B in self.kernel_basis]).T
        Q = linalg.orth(K)
        vec = delta.ravel()
        return float(np.linalg.norm(vec - Q @ (Q.conj().T @ vec)))


def _principal_block(m):
    h = np.diag(np.arange(m - 1, -m, -2)).astype(complex)
    e = np.zeros((m, m), dtype=complex)
    for i in range(1, m):
        e[i - 1, i] = np.sqrt(i * (m - i))
    return h, e


def principal_sl2(n):
    if n < 2:
        raise DimensionError('principal sl(2) needs n >= 2, got {}'.format(n))
    h, e = _principal_block(n)
    return SL2Triple(h=h, e=e, f=e.conj().T)


def subregular_sl2(n):
    """ sl(2)-triple of the nilpotent with Jordan type (n-1, 1). """
    if n < 3:
        raise DimensionError(
            'subregular sl(2) needs n >= 3, got {}'.format(n)
        )
    block_h, block_e = _principal_block(n - 1)
    h = np.zeros((n, n), dtype=complex)
    e = np.zeros((n, n), dtype=complex)
    h[:n - 1, :n - 1] = block_h
    e[:n - 1, :n - 1] = block_e
    return SL2Triple(h=h, e=e, f=e.conj().T)


def slodowy_slice(triple):
    return SlodowySlice(
        base=triple.e, kernel_basis=centralizer_basis(triple.f),
    )


def random_su(n, rng, scale=1.0):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    X = (G - G.conj().T) / 2
    X -= np.trace(X) / n * np.eye(n)
    return scale * X


def random_special_unitary(n, rng):
    U = unitary_group.rvs(n, random_state=rng)
    if n == 1:
        return np.ones((1, 1), dtype=complex)
    return U / np.linalg.det(U) ** (1.0 / n)
