# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import numpy as np
import pytest

from orbitwistor import kleinian_ale as ale
from orbitwistor.errors import DomainError

FLAT = ale.ALEParams(0, 0, 0)
EGUCHI_HANSON = ale.ALEParams(0, 1, 1)
GENERIC = ale.ALEParams(0, 0.3, 1)


class TestParams:

    def test_canonical_sorts(self):
        a = ale.ALEParams.canonical(1, 0, 0.3)
        assert (a.a1, a.a2, a.a3) == (0.0, 0.3, 1.0)

    @pytest.mark.parametrize('values', [(1, 0, 0), (-1, 0, 1), (0, 2, 1)])
    def test_unordered(self, values):
        with pytest.raises(DomainError):
            ale.ALEParams(*values)

    def test_wrong_count(self):
        with pytest.raises(DomainError):
            ale.ALEParams.canonical(0, 1)

    def test_r_star(self):
        assert EGUCHI_HANSON.r_star == 2.0
        assert FLAT.r_star == 0.0


class TestMetricCoeffs:

    def test_flat(self):
        sample = ale.metric_coeffs(FLAT, 3.0)
        assert sample.g_rr == 1.0
        assert np.allclose(sample.angular, 9.0 / 4, rtol=1e-15)

    @pytest.mark.parametrize('r', [2.01, 2.5, 4.0, 10.0])
    def test_eguchi_hanson(self, r):
        sample = ale.metric_coeffs(EGUCHI_HANSON, r)
        L = 1 - 16 / r ** 4
        assert abs(sample.g_rr - 1 / L) < 1e-12 / L
        assert abs(sample.g_rr * sample.g_11 - r * r / 4) < 1e-12 * r * r
        assert abs(sample.g_22 - r * r / 4) < 1e-12 * r * r
        assert abs(sample.g_33 - r * r / 4) < 1e-12 * r * r

    def test_asymptotically_flat(self):
        a = ale.ALEParams(0.1, 0.2, 0.3)
        for r in (20.0, 40.0):
            sample = ale.metric_coeffs(a, r)
            assert abs((sample.g_rr - 1) * r ** 4 - 8 * 0.6) < 0.05
            assert abs(sample.g_33 / (r * r / 4) - 1) < 10 / r ** 4

    def test_integrand(self):
        sample = ale.metric_coeffs(GENERIC, 3.0)
        assert ale.integrand(GENERIC, 3.0) == sample.g_rr ** 0.5

    @pytest.mark.parametrize('r', [2.0, 1.0, 0.0])
    def test_inside_boundary(self, r):
        with pytest.raises(DomainError):
            ale.metric_coeffs(EGUCHI_HANSON, r)


class TestDistance:

    @pytest.mark.parametrize('R', [0.5, 1.0, 7.0])
    def test_flat(self, R):
        assert abs(ale.boundary_distance(FLAT, R) - R) < 1e-10 * R

    @pytest.mark.parametrize('a', [EGUCHI_HANSON, GENERIC,
                                   ale.ALEParams(0, 0, 1)])
    def test_refinements_agree(self, a):
        R = a.r_star + 3.0
        values = ale.distance_refinements(a, R)
        reference = ale.boundary_distance(a, R)
        for value in values[1:]:
            assert abs(value - reference) < 1e-8 * reference

    def test_derivative_is_the_integrand(self):
        R, delta = 3.0, 1e-4
        slope = (
            ale.boundary_distance(GENERIC, R + delta)
            - ale.boundary_distance(GENERIC, R - delta)
        ) / (2 * delta)
        assert abs(slope - ale.integrand(GENERIC, R)) < 1e-6

    def test_exceeds_coordinate_distance(self):
        R = 5.0
        distance = ale.boundary_distance(EGUCHI_HANSON, R)
        assert distance > R - EGUCHI_HANSON.r_star

    def test_inside_boundary(self):
        with pytest.raises(DomainError):
            ale.boundary_distance(EGUCHI_HANSON, 1.5)

        with pytest.raises(DomainError):
            ale.distance_refinements(EGUCHI_HANSON, 2.0)


class TestGrid:

    def test_rows(self):
        rows = ale.grid(EGUCHI_HANSON, 6.0, 4)
        assert len(rows) == 4
        assert [len(row) for row in rows] == [len(ale.CSV_COLUMNS)] * 4
        assert rows[-1][0] == 6.0
        assert all(row[0] > EGUCHI_HANSON.r_star for row in rows)

        distances = [row[-1] for row in rows]
        assert distances == sorted(distances)

    def test_rmax_inside_boundary(self):
        with pytest.raises(DomainError):
            ale.grid(EGUCHI_HANSON, 1.0, 4)


class TestRhoAsymptotics:

    def test_ratios_tend_to_one(self):
        a = ale.ALEParams(0, 0, 2.5)
        rows = ale.rho_asymptotics(a, [1e-1, 1e-2, 1e-4])
        assert [row.rho for row in rows] == [1e-1, 1e-2, 1e-4]
        assert rows[1].deviation < 1e-2
        assert rows[2].deviation < 1e-4
        assert rows[0].deviation > rows[1].deviation > rows[2].deviation

    def test_needs_two_vanishing_parameters(self):
        with pytest.raises(DomainError):
            ale.rho_asymptotics(EGUCHI_HANSON, [1e-2])


class TestCoframe:

    def test_structure_equations(self, rng):
        for _ in range(10):
            angles = rng.uniform(0.3, 2.8, size=3)
            assert ale.coframe_defect(angles) < 1e-6

    def test_coordinate_metric_is_symmetric_positive(self):
        g = ale.coordinate_metric(GENERIC, (3.0, 1.0, 0.5, 0.2))
        assert np.allclose(g, g.T, rtol=0, atol=1e-14)
        assert np.linalg.eigvalsh(g).min() > 0


class TestRicci:

    POINT = (3.0, 1.1, 0.4, 0.7)

    def test_flat(self):
        report = ale.ricci_fd(FLAT, self.POINT)
        assert report.flat
        assert report.relative < 1e-4

    @pytest.mark.parametrize('a', [
        EGUCHI_HANSON, GENERIC, ale.ALEParams(0, 0, 1),
    ])
    def test_ricci_flat(self, a):
        report = ale.ricci_fd(a, self.POINT)
        assert not report.flat
        assert report.riemann_norm > 0
        assert report.relative < 1e-4
        assert report.step == ale.ALE_FD_STEP * self.POINT[0]

    def test_riemann_symmetries(self):
        _, R, _ = ale.riemann_fd(GENERIC, self.POINT, 1e-3)
        scale = np.abs(R).max()
        assert np.abs(R + np.einsum('iklm->kilm', R)).max() < 1e-6 * scale
        assert np.abs(R - np.einsum('iklm->lmik', R)).max() < 1e-6 * scale

    def test_too_close_to_the_boundary(self):
        with pytest.raises(DomainError):
            ale.ricci_fd(EGUCHI_HANSON, (2.0001, 1.0, 0.0, 0.0))


class TestOrbitFit:

    def test_recovers_parameters(self):
        r = 3.0
        sample = ale.metric_coeffs(GENERIC, r)
        x = ale.ale_orbit_fit(sample.angular)
        expected = 16 * GENERIC.values / r ** 4
        assert np.allclose(x, expected, rtol=0, atol=1e-12)

    def test_scale_free(self):
        mu = np.array([1.0, 2.0, 4.0])
        assert np.allclose(ale.ale_orbit_fit(mu), ale.ale_orbit_fit(-3 * mu))

    @pytest.mark.parametrize('mu', [[0, 1, 2], [1, 2]])
    def test_degenerate(self, mu):
        with pytest.raises(DomainError):
            ale.ale_orbit_fit(mu)
