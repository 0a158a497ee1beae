import cmath
import math

import numpy as np
import pytest

import statespace as st
from statespace.errors import CoincidentStates, DimensionMismatch, DimensionOutOfRange
from statespace.measurement import computational_basis, measurement_basis

from util import random_ket, seeded

SQ2 = 1 / math.sqrt(2)


class TestToDensity:
    def test_basis_ket(self):
        rho = st.to_density(st.basis_ket(2, 0))
        assert np.array_equal(rho.mat, np.diag([1.0, 0.0]).astype(complex))

    def test_plus_state(self):
        rho = st.to_density(st.ket([SQ2, SQ2]))
        assert np.abs(rho.mat - 0.5).max() <= 1e-15

    def test_circular_state(self):
        rho = st.to_density(st.ket([SQ2, 1j * SQ2]))
        want = np.array([[0.5, -0.5j], [0.5j, 0.5]])
        assert np.abs(rho.mat - want).max() <= 1e-15

    def test_always_pure(self, rng):
        for d in (2, 3, 6):
            rho = st.to_density(random_ket(d, rng))
            assert st.classify(rho) is st.StateClass.PURE

    def test_norm_enforced(self):
        with pytest.raises(DimensionOutOfRange):
            st.ket([1.0, 1.0])


class TestPureDistance:
    def test_same(self):
        # sqrt of the ~eps cancellation residue bounds accuracy at ~1e-8
        psi = st.ket([SQ2, SQ2])
        assert st.pure_distance(psi, psi) == pytest.approx(0.0, abs=1e-7)

    def test_orthogonal(self):
        assert st.pure_distance(st.basis_ket(2, 0), st.basis_ket(2, 1)) == 1.0

    def test_half_overlap(self):
        b = st.basis_ket(2, 0)
        psi = st.ket([0.5, math.sqrt(3) / 2])
        assert abs(st.overlap(b, psi)) == pytest.approx(0.5, abs=1e-15)
        assert st.pure_distance(b, psi) == pytest.approx(
            math.sqrt(3) / 2, abs=1e-15
        )

    def test_matches_projector_distance(self, rng):
        for d in (2, 3, 4, 5, 6):
            for _ in range(20):
                a, b = random_ket(d, rng), random_ket(d, rng)
                assert abs(
                    st.pure_distance(a, b)
                    - st.distance(st.to_density(a), st.to_density(b))
                ) <= 1e-10

    def test_probability_link(self, rng):
        for d in (2, 3, 4):
            psi = random_ket(d, rng)
            basis = computational_basis(d)
            probs = st.measure_probabilities(st.to_density(psi), basis)
            for i in range(d):
                r = st.pure_distance(st.basis_ket(d, i), psi)
                assert abs(r * r - (1.0 - probs.probs[i])) <= 1e-10

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            st.pure_distance(st.basis_ket(2, 0), st.basis_ket(3, 0))


class TestCompleteQubitBasis:
    def test_plus_state(self):
        b = st.basis_ket(2, 0)
        psi = st.ket([SQ2, SQ2])
        a, amp_b, amp_a = st.complete_qubit_basis(b, psi)
        assert np.allclose(a.amps, [0, 1], atol=1e-12)
        assert amp_b == pytest.approx(SQ2, abs=1e-12)
        assert amp_a == pytest.approx(SQ2, abs=1e-12)

    def test_already_orthogonal(self):
        a, amp_b, amp_a = st.complete_qubit_basis(st.basis_ket(2, 0), st.basis_ket(2, 1))
        assert np.allclose(a.amps, [0, 1], atol=1e-12)
        assert amp_b == 0.0
        assert amp_a == 1.0

    def test_embedded_in_qutrit(self):
        b = st.basis_ket(3, 0)
        psi = st.ket([SQ2, 0.0, SQ2])
        a, amp_b, amp_a = st.complete_qubit_basis(b, psi)
        assert np.allclose(a.amps, [0, 0, 1], atol=1e-12)

    def test_coincident(self):
        psi = st.ket([SQ2, SQ2])
        with pytest.raises(CoincidentStates):
            st.complete_qubit_basis(psi, psi)

    def test_postconditions_500_pairs(self):
        rng = seeded(41)
        done = 0
        while done < 500:
            d = int(rng.integers(2, 7))
            b, psi = random_ket(d, rng), random_ket(d, rng)
            if st.pure_distance(b, psi) <= 1e-6:
                continue
            a, amp_b, amp_a = st.complete_qubit_basis(b, psi)
            assert abs(np.vdot(a.amps, a.amps) - 1.0) <= 1e-10
            assert abs(np.vdot(b.amps, a.amps)) <= 1e-10
            rebuilt = amp_a * a.amps + amp_b * b.amps
            assert np.abs(rebuilt - psi.amps).max() <= 1e-10
            done += 1


class TestColumnCoordinates:
    def test_basis_vector(self):
        coords = st.column_coordinates(st.basis_ket(3, 1), computational_basis(3))
        mags = [m for m, _ in coords]
        assert mags == pytest.approx([0, 1, 0], abs=1e-15)

    def test_plus_in_computational(self):
        coords = st.column_coordinates(st.ket([SQ2, SQ2]), computational_basis(2))
        assert coords[0] == pytest.approx((SQ2, 0.0), abs=1e-15)
        assert coords[1] == pytest.approx((SQ2, 0.0), abs=1e-15)

    def test_circular_phase(self):
        coords = st.column_coordinates(
            st.ket([SQ2, 1j * SQ2]), computational_basis(2)
        )
        assert coords[0][0] == pytest.approx(SQ2, abs=1e-15)
        assert coords[0][1] == 0.0
        assert coords[1][0] == pytest.approx(SQ2, abs=1e-15)
        assert coords[1][1] == pytest.approx(math.pi / 2, abs=1e-12)

    def test_magnitude_distance_pairing(self, rng):
        d = 4
        psi = random_ket(d, rng)
        basis = computational_basis(d)
        for i, (mag, _) in enumerate(st.column_coordinates(psi, basis)):
            want = math.sqrt(max(0.0, 1.0 - mag * mag))
            assert st.pure_distance(st.basis_ket(d, i), psi) == pytest.approx(
                want, abs=1e-12
            )

    def test_global_phase_invariance(self, rng):
        for d in (2, 3, 5):
            psi = random_ket(d, rng)
            alpha = float(rng.uniform(0, 2 * math.pi))
            rotated = st.PureKet(dim=d, amps=psi.amps * cmath.exp(1j * alpha))
            basis = computational_basis(d)
            c1 = st.column_coordinates(psi, basis)
            c2 = st.column_coordinates(rotated, basis)
            for (m1, p1), (m2, p2) in zip(c1, c2):
                assert m1 == pytest.approx(m2, abs=1e-12)
                assert p1 == pytest.approx(p2, abs=1e-10)
            other = random_ket(d, rng)
            assert st.pure_distance(psi, other) == pytest.approx(
                st.pure_distance(rotated, other), abs=1e-12
            )
