# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import numpy as np
import pytest
from mock import patch

from orbitwistor import lie_core, metric_engine, su3_witness
from orbitwistor import twistor_sections as ts
from orbitwistor.errors import Degenerate, IllConditioned
from orbitwistor.testing.helpers import max_abs


def graded_draw(rng):
    v1, v_eps, _ = su3_witness.epsilon_grading()

    def combination(basis):
        coeffs = (
            rng.standard_normal(len(basis))
            + 1j * rng.standard_normal(len(basis))
        )
        return sum(c * B for c, B in zip(coeffs, basis))

    return ts.TwistorSection(
        A0=combination(v1 + v_eps),
        A1=combination(v1),
        A2=combination(v1 + v_eps),
    )


class TestGrading:

    def test_dimensions(self):
        v1, v_eps, v_eps2 = su3_witness.epsilon_grading()
        assert (len(v1), len(v_eps), len(v_eps2)) == (2, 3, 3)

    def test_eigenvalues(self):
        g = su3_witness.grading_element()
        g_inv = np.linalg.inv(g)
        eps = np.exp(2j * np.pi / 3)
        for value, basis in zip((1, eps, eps ** 2),
                                su3_witness.epsilon_grading()):
            for X in basis:
                assert max_abs(g @ X @ g_inv - value * X) < 1e-14

    def test_bracket_of_eps_lands_in_eps_squared(self):
        _, v_eps, v_eps2 = su3_witness.epsilon_grading()
        target = np.array([X.ravel() for X in v_eps2]).T
        for X in v_eps:
            for Y in v_eps:
                Z = lie_core.bracket(X, Y).ravel()
                coeffs, _, _, _ = np.linalg.lstsq(target, Z, rcond=None)
                assert max_abs(target @ coeffs - Z) < 1e-14

    def test_trace_form_pairs_v1_with_itself_only(self):
        v1, v_eps, _ = su3_witness.epsilon_grading()
        for X in v1:
            for Y in v_eps:
                assert lie_core.trace_form(X, Y) == 0


class TestComplexWitness:

    def test_lies_on_d2_off_d1(self, rng):
        for _ in range(10):
            A = su3_witness.complex_witness(rng)
            assert abs(ts.p2(A)) < 1e-13
            assert ts.in_D2(A)
            assert not ts.in_D1(A)
            assert su3_witness.pairing_rank(A) == 8

    def test_graded_draws_are_almost_never_in_d1(self, rng):
        regular = sum(not ts.in_D1(graded_draw(rng)) for _ in range(100))
        assert regular >= 99

    def test_degenerate(self, rng):
        with patch.object(ts, 'in_D1', return_value=True) as mock_in_d1:
            with pytest.raises(Degenerate):
                su3_witness.complex_witness(rng)

        assert mock_in_d1.call_count == su3_witness.MAX_WITNESS_DRAWS


class TestPairing:

    def test_shape(self, rng):
        A = graded_draw(rng)
        assert su3_witness.pairing_matrix(A).shape == (8, 8)
        assert len(su3_witness.witness_coefficients(A)) == 8

    def test_rank_agrees_with_p1(self, rng):
        for _ in range(20):
            A = ts.TwistorSection(
                *(lie_core.random_su(3, rng) + 1j * lie_core.random_su(3, rng)
                  for _ in range(3))
            )
            assert (su3_witness.pairing_rank(A) == 8) == (not ts.in_D1(A))

    def test_commuting_section_is_degenerate(self):
        h = np.diag([1.0, 0.0, -1.0]).astype(complex)
        A = ts.TwistorSection(A0=h, A1=h, A2=h)
        assert su3_witness.pairing_rank(A) < 8
        assert ts.in_D1(A)

    def test_cone_section_is_regular(self):
        A = ts.cone_section(3)
        assert su3_witness.pairing_rank(A) == 8


class TestD2Sample:

    @pytest.mark.parametrize('n', [2, 3, 4])
    def test_null_criterion_vanishes(self, rng, n):
        for _ in range(10):
            t = su3_witness.d2_sample(n, rng, scale=0.5)
            t.validate()
            scale = t.T1.shape[0] * t.norm() ** 3
            assert abs(metric_engine.null_criterion(t)) < 1e-12 * scale

    def test_sl2_samples_are_never_regular(self, rng):
        # p1 is a multiple of p2 in rank one
        for _ in range(20):
            t = su3_witness.d2_sample(2, rng)
            assert not ts.is_regular_twistor_line(t)


class TestRealIndefiniteSearch:

    @pytest.fixture(scope='class')
    def report(self):
        return su3_witness.real_indefinite_search(30, seed=1)

    def test_counts(self, report):
        assert report.samples == 30
        assert 0 < report.regular <= 30
        assert len(report.failures) <= report.regular
        assert report.indefinite == len(report.witnesses)
        assert report.indefinite_rate >= 0.95

    def test_witnesses(self, report):
        for witness in report.witnesses:
            n_plus, n_zero, n_minus = witness.signature
            assert n_plus > 0 and n_minus > 0
            assert n_plus + n_zero + n_minus == 12
            assert abs(witness.null_criterion) < 1e-10
            assert witness.p1_ratio > 1e-9

            reached = ts.adjoint_quotient(ts.make_section(witness.triple))
            assert max_abs(reached.vector() - witness.section.vector()) == 0

    def test_deterministic(self, report):
        again = su3_witness.real_indefinite_search(30, seed=1)
        assert again.regular == report.regular
        assert (
            [w.index for w in again.witnesses]
            == [w.index for w in report.witnesses]
        )

    def test_document(self, report):
        doc = report.as_document()
        assert doc["tolerances"]["verdict"] > 0
        restored = su3_witness.SearchReport.from_document(doc)
        assert restored.indefinite == report.indefinite
        assert restored.indefinite_rate == report.indefinite_rate

    def test_unclassified_lines_lower_the_rate(self, report):
        with patch.object(
            metric_engine, 'metric_gram',
            side_effect=IllConditioned('E0 is singular', condition=1e12),
        ):
            broken = su3_witness.real_indefinite_search(30, seed=1)

        assert broken.regular == report.regular
        assert len(broken.failures) == broken.regular
        assert broken.witnesses == []
        assert broken.indefinite_rate == 0.0
