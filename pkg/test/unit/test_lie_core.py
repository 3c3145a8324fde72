# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import numpy as np
import pytest

from orbitwistor import lie_core
from orbitwistor.errors import DimensionError
from orbitwistor.testing.helpers import max_abs, random_matrix


class TestBracketAndForm:

    def test_sl2_relations(self, sl2):
        assert max_abs(lie_core.bracket(sl2.e, sl2.f) - sl2.h) == 0
        assert max_abs(lie_core.bracket(sl2.h, sl2.e) - 2 * sl2.e) == 0
        assert max_abs(lie_core.bracket(sl2.h, sl2.h)) == 0

    def test_trace_form_values(self, sl2):
        assert lie_core.trace_form(sl2.e, sl2.f) == 1
        assert lie_core.trace_form(sl2.h, sl2.h) == 2
        assert lie_core.trace_form(sl2.e, sl2.e) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            lie_core.bracket(np.eye(2), np.eye(3))

        with pytest.raises(DimensionError):
            lie_core.trace_form(np.zeros((2, 3)), np.zeros((2, 3)))

    def test_ad_invariance(self, rng):
        for _ in range(50):
            n = rng.integers(2, 5)
            g = lie_core.random_special_unitary(n, rng)
            g_inv = np.linalg.inv(g)
            X, Y = random_matrix(n, rng), random_matrix(n, rng)
            gX, gY = g @ X @ g_inv, g @ Y @ g_inv

            assert abs(
                lie_core.trace_form(gX, gY) - lie_core.trace_form(X, Y)
            ) < 1e-10
            assert np.allclose(
                lie_core.power_sums(gX), lie_core.power_sums(X),
                rtol=0, atol=1e-10 * max(1.0, np.linalg.norm(X) ** n),
            )


class TestCentralizers:

    def test_centralizer_dimensions(self, sl2):
        assert lie_core.centralizer_dim(sl2.h) == 1
        assert lie_core.centralizer_dim(np.zeros((2, 2))) == 3
        assert lie_core.centralizer_dim(np.diag([1, 1, -2])) == 4

    def test_regular_elements(self, sl2):
        assert lie_core.is_regular_element(sl2.h)
        assert lie_core.is_regular_element(lie_core.principal_sl2(3).e)
        assert not lie_core.is_regular_element(np.diag([1, 1, -2]))

    def test_regular_nilpotent_centralizer_is_spanned_by_powers(self):
        e = lie_core.principal_sl2(3).e
        basis = lie_core.centralizer_basis(e)
        assert len(basis) == 2

        powers = np.array([e.ravel(), (e @ e).ravel()]).T
        for B in basis:
            coeffs, _, _, _ = np.linalg.lstsq(powers, B.ravel(), rcond=None)
            assert max_abs(powers @ coeffs - B.ravel()) < 1e-10

    def test_eigenvalue_oracle(self, rng):
        for n in (2, 3, 4):
            g = lie_core.random_special_unitary(n, rng)
            g_inv = np.linalg.inv(g)

            distinct = np.arange(n) - (n - 1) / 2.0
            X = g @ np.diag(distinct) @ g_inv
            assert lie_core.is_regular_element(X)

            repeated = np.array([1.0] * (n - 1) + [-(n - 1.0)])
            Y = g @ np.diag(repeated) @ g_inv
            assert not lie_core.is_regular_element(Y)

    def test_conjugation_invariance(self, rng):
        X = np.diag([1.0, 1.0, -2.0]) + lie_core.principal_sl2(3).e
        for _ in range(5):
            g = lie_core.random_special_unitary(3, rng)
            conjugated = g @ X @ np.linalg.inv(g)
            assert (
                lie_core.centralizer_dim(conjugated)
                == lie_core.centralizer_dim(X)
            )

    def test_common_centralizer_of_sl2_triple_is_trivial(self, sl2):
        assert lie_core.common_centralizer_dim([sl2.h, sl2.e, sl2.f]) == 0
        assert lie_core.common_centralizer_dim([sl2.h]) == 1

    def test_commuting_triple(self, sl2):
        assert lie_core.commuting_triple(
            [np.diag([1, -1]), np.diag([2, -2]), np.zeros((2, 2))]
        )
        assert not lie_core.commuting_triple([sl2.h, sl2.e, sl2.f])


class TestPowerSums:

    def test_nilpotent(self):
        e = lie_core.principal_sl2(4).e
        assert lie_core.power_sums(e) == [0, 0, 0]

    def test_diagonal(self):
        assert lie_core.power_sums(np.diag([1, -1])) == [2]

    def test_differential_matches_central_difference(self, rng):
        X, xi = random_matrix(3, rng), random_matrix(3, rng)
        step = 1e-5
        for k in (2, 3):
            forward = np.trace(np.linalg.matrix_power(X + step * xi, k))
            backward = np.trace(np.linalg.matrix_power(X - step * xi, k))
            estimate = (forward - backward) / (2 * step)
            exact = lie_core.power_sum_differential(X, xi, k)
            assert abs(estimate - exact) < 1e-6 * max(1.0, abs(exact))

    def test_differential_is_linear(self, rng):
        X = random_matrix(3, rng)
        xi, eta = random_matrix(3, rng), random_matrix(3, rng)
        combined = lie_core.power_sum_differential(X, 2 * xi - eta, 3)
        separate = (
            2 * lie_core.power_sum_differential(X, xi, 3)
            - lie_core.power_sum_differential(X, eta, 3)
        )
        assert abs(combined - separate) < 1e-10 * max(1.0, abs(separate))

    @pytest.mark.parametrize('k', [1, 4])
    def test_degree_out_of_range(self, k):
        with pytest.raises(DimensionError):
            lie_core.power_sum_differential(np.eye(3), np.eye(3), k)


class TestSl2Triples:

    @pytest.mark.parametrize('n', [2, 3, 4, 5])
    def test_principal_relations(self, n):
        triple = lie_core.principal_sl2(n)
        assert triple.defect() < 1e-12
        assert max_abs(triple.f - triple.e.conj().T) == 0

    @pytest.mark.parametrize('n', [3, 4])
    def test_subregular_relations(self, n):
        triple = lie_core.subregular_sl2(n)
        assert triple.defect() < 1e-12
        assert np.linalg.matrix_rank(triple.e) == n - 2

    def test_slice_dimensions(self):
        principal = lie_core.slodowy_slice(lie_core.principal_sl2(2))
        assert principal.dimension == 1

        subregular = lie_core.slodowy_slice(lie_core.subregular_sl2(3))
        assert subregular.dimension == 4
        assert subregular.dimension == lie_core.centralizer_dim(
            lie_core.subregular_sl2(3).f
        )

    def test_slice_offset(self, rng):
        slodowy = lie_core.slodowy_slice(lie_core.subregular_sl2(3))
        coeffs = rng.standard_normal(slodowy.dimension)
        on = slodowy.base + sum(
            c * B for c, B in zip(coeffs, slodowy.kernel_basis)
        )
        assert slodowy.offset_residual(on) < 1e-12
        h = lie_core.subregular_sl2(3).h
        assert abs(slodowy.offset_residual(on + h) - np.sqrt(2)) < 1e-10

    def test_out_of_range(self):
        with pytest.raises(DimensionError):
            lie_core.principal_sl2(1)

        with pytest.raises(DimensionError):
            lie_core.subregular_sl2(2)


class TestBases:

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_sizes(self, n):
        assert len(lie_core.sl_basis(n)) == n * n - 1
        assert len(lie_core.su_basis(n)) == n * n - 1

    @pytest.mark.parametrize('n', [2, 3])
    def test_su_basis_is_orthonormal(self, n):
        basis = lie_core.su_basis(n)
        gram = np.array([[np.vdot(X, Y).real for Y in basis] for X in basis])
        assert np.allclose(gram, np.eye(len(basis)), atol=1e-14)
        for X in basis:
            assert max_abs(X + X.conj().T) == 0
            assert abs(np.trace(X)) < 1e-14

    def test_random_su(self, rng):
        X = lie_core.random_su(3, rng)
        assert max_abs(X + X.conj().T) < 1e-14
        assert abs(np.trace(X)) < 1e-14

    def test_random_special_unitary(self, rng):
        g = lie_core.random_special_unitary(3, rng)
        assert max_abs(g @ g.conj().T - np.eye(3)) < 1e-12
        assert abs(np.linalg.det(g) - 1) < 1e-12
