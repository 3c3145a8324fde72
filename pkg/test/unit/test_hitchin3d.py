# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import numpy as np
import pytest

from orbitwistor import hitchin3d, lie_core, metric_engine
from orbitwistor import twistor_sections as ts
from orbitwistor.errors import DomainError
from orbitwistor.testing.helpers import max_abs, random_triple


def unit(n, i, j):
    E = np.zeros((n, n), dtype=complex)
    E[i, j] = 1.0
    return E


class TestSU2Element:

    def test_not_unitary(self):
        with pytest.raises(DomainError):
            hitchin3d.SU2Element(1.0, 0.5)

    def test_matrix(self, rng):
        u = hitchin3d.random_su2(rng)
        M = u.matrix
        assert max_abs(M @ M.conj().T - np.eye(2)) < 1e-14
        assert abs(np.linalg.det(M) - 1) < 1e-14

    def test_group_law(self, rng):
        u, v = hitchin3d.random_su2(rng), hitchin3d.random_su2(rng)
        assert max_abs((u * v).matrix - u.matrix @ v.matrix) < 1e-15
        assert max_abs((u * u.inverse()).matrix - np.eye(2)) < 1e-14


class TestFormAction:

    def test_identity(self):
        S = hitchin3d.substitution_matrix(hitchin3d.SU2Element.identity(), 4)
        assert max_abs(S - np.eye(5)) == 0

    def test_diagonal_phases(self):
        theta = 0.3
        u = hitchin3d.SU2Element.diagonal(theta)
        S = hitchin3d.substitution_matrix(u, 4)
        phases = np.exp(1j * theta * (2 * np.arange(5) - 4))
        assert max_abs(S - np.diag(phases)) < 1e-15

    @pytest.mark.parametrize('degree', [2, 4, 6])
    def test_homomorphism(self, rng, degree):
        u, v = hitchin3d.random_su2(rng), hitchin3d.random_su2(rng)
        product = hitchin3d.substitution_matrix(u * v, degree)
        composed = (
            hitchin3d.substitution_matrix(u, degree)
            @ hitchin3d.substitution_matrix(v, degree)
        )
        assert max_abs(product - composed) < 1e-13

    def test_preserves_reality(self, rng):
        u = hitchin3d.random_su2(rng)
        for k in (2, 3):
            form = ts.random_real_form(k, rng)
            assert hitchin3d.su2_act_form(u, form).is_real()


class TestTripleAction:

    def test_minus_identity_acts_trivially(self, rng):
        t = random_triple(3, rng)
        u = hitchin3d.SU2Element(-1.0, 0.0)
        moved = hitchin3d.su2_act_triple(u, t)
        for T, M in zip(t.matrices, moved.matrices):
            assert max_abs(T - M) < 1e-15

    def test_induced_rotation(self, rng):
        for _ in range(5):
            R = hitchin3d.induced_rotation(hitchin3d.random_su2(rng))
            assert max_abs(R.T @ R - np.eye(3)) < 1e-13
            assert abs(np.linalg.det(R) - 1) < 1e-13

    def test_action_is_the_rotation(self, rng):
        t = random_triple(2, rng)
        u = hitchin3d.random_su2(rng)
        R = hitchin3d.induced_rotation(u)
        moved = hitchin3d.su2_act_triple(u, t)
        for i in range(3):
            expected = sum(R[i, j] * t.matrices[j] for j in range(3))
            assert max_abs(moved.matrices[i] - expected) < 1e-13

    def test_circle_fixes_the_first_axis(self):
        R = hitchin3d.induced_rotation(hitchin3d.SU2Element.diagonal(0.4))
        assert max_abs(R[0] - [1, 0, 0]) < 1e-15
        assert max_abs(R[:, 0] - [1, 0, 0]) < 1e-15

    def test_circle_action_preserves_the_metric(self, sl2_cone):
        # the circle fixes zeta = 0 and so the first complex structure
        u = hitchin3d.SU2Element.diagonal(0.7)
        before = metric_engine.metric_gram(sl2_cone)
        after = metric_engine.metric_gram(
            hitchin3d.su2_act_triple(u, sl2_cone)
        )
        assert after.signature == before.signature
        assert np.allclose(
            after.eigenvalues, before.eigenvalues,
            rtol=0, atol=1e-6 * np.abs(before.eigenvalues).max(),
        )


class TestHitchinMap:

    def test_zero(self):
        zero = np.zeros((3, 3), dtype=complex)
        s = hitchin3d.hitchin_map(ts.RealTriple(zero, zero, zero))
        assert s.norm() == 0

    def test_off_diagonal_pair(self):
        A = ts.TwistorSection(
            A0=unit(2, 0, 1), A1=np.zeros((2, 2)), A2=-unit(2, 1, 0),
        )
        s = hitchin3d.hitchin_map(ts.triple_from_section(A))
        assert max_abs(s.forms[0].coeffs - [0, 0, -2, 0, 0]) < 1e-15

    def test_invariant_under_su_n(self, rng):
        for _ in range(100):
            t = random_triple(3, rng)
            g = lie_core.random_special_unitary(3, rng)
            before = hitchin3d.hitchin_map(t).vector()
            after = hitchin3d.hitchin_map(ts.conjugate_triple(g, t)).vector()
            assert max_abs(after - before) < 1e-12 * max(1.0, max_abs(before))

    @pytest.mark.parametrize('n', [2, 3])
    def test_equivariant_under_su2(self, rng, n):
        for _ in range(100):
            t = random_triple(n, rng)
            u = hitchin3d.random_su2(rng)
            moved = hitchin3d.hitchin_map(hitchin3d.su2_act_triple(u, t))
            original = hitchin3d.hitchin_map(t)
            for form, image in zip(original.forms, moved.forms):
                expected = hitchin3d.su2_act_form(u, form)
                assert (
                    max_abs(image.coeffs - expected.coeffs)
                    < 1e-12 * max(1.0, max_abs(form.coeffs))
                )

    def test_s_phi_of_commuting_fields_lifts(self):
        d = np.diag([1j, -1j])
        s = hitchin3d.s_phi_pointwise(d, 0.2 * d, np.zeros((2, 2)))
        assert s.is_real()
        assert ts.cartan_lift(s).lift

    def test_s_phi_is_pointwise_hitchin_map(self, pauli_triple):
        s = hitchin3d.s_phi_pointwise(*pauli_triple.matrices)
        expected = hitchin3d.hitchin_map(pauli_triple)
        assert max_abs(s.vector() - expected.vector()) == 0
