import math

import numpy as np
import pytest

import statespace as st
from statespace.errors import DimensionMismatch, EmptyRecord, NegativeTime, NotUnitary
from statespace.measurement import _design_matrix

from util import random_state, random_unitary, seeded

WORKED = st.validate_density([[0.5, 1 / 6], [1 / 6, 0.5]])
SQ2 = 1 / math.sqrt(2)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * SQ2
Y_EIGEN = np.array([[1, 1], [1j, -1j]], dtype=complex) * SQ2


class TestMeasure:
    def test_plus_in_computational(self):
        right = st.to_density(st.ket([SQ2, SQ2]))
        probs = st.measure_probabilities(right, st.computational_basis(2))
        assert np.allclose(probs.probs, [0.5, 0.5], atol=1e-12)

    def test_worked_in_right_left(self):
        basis = st.measurement_basis(HADAMARD)
        probs = st.measure_probabilities(WORKED, basis)
        assert np.allclose(probs.probs, [2 / 3, 1 / 3], atol=1e-12)

    def test_eigenbasis_gives_eigenvalues(self, rng):
        for d in (2, 3, 5):
            rho = random_state(d, rng)
            spec = st.eig_hermitian(rho)
            basis = st.measurement_basis(spec.eigenvectors)
            probs = st.measure_probabilities(rho, basis)
            assert np.abs(np.sort(probs.probs) - np.sort(spec.eigenvalues)).max() <= 1e-10

    def test_qubit_diameter_projection_geometry(self, rng):
        # perpendicular projection onto the embedded basis diameter
        # reproduces the probabilities
        for _ in range(20):
            rho = random_state(2, rng)
            u = random_unitary(2, rng)
            basis = st.measurement_basis(u)
            probs = st.measure_probabilities(rho, basis)

            p = st.to_statepoint(rho).coords
            v0 = st.to_statepoint(
                st.validate_density(np.outer(u[:, 0], u[:, 0].conj()))
            ).coords
            v1 = st.to_statepoint(
                st.validate_density(np.outer(u[:, 1], u[:, 1].conj()))
            ).coords
            axis = v0 - v1  # unit diameter
            foot_param = float((p - v1) @ axis)  # distance from v1 along axis
            assert abs(foot_param - probs.probs[0]) <= 1e-9

    def test_basis_not_unitary(self):
        with pytest.raises(NotUnitary):
            st.measurement_basis([[1, 1], [0, 1]])

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            st.measure_probabilities(WORKED, st.computational_basis(3))


class TestDecohere:
    def test_t_zero_identity(self):
        out = st.decohere(WORKED, st.computational_basis(2), 0.0)
        assert out is WORKED

    def test_infinite_time_projects(self):
        out = st.decohere(WORKED, st.computational_basis(2), 1e3)
        assert np.abs(out.mat - np.eye(2) / 2).max() <= 1e-12

    def test_ln2_halves_offdiagonal(self):
        out = st.decohere(WORKED, st.computational_basis(2), math.log(2))
        assert out.mat[0, 1].real == pytest.approx(1 / 12, abs=1e-12)

    def test_negative_time(self):
        with pytest.raises(NegativeTime):
            st.decohere(WORKED, st.computational_basis(2), -0.1)

    def test_gamma_scaling(self):
        fast = st.decohere(WORKED, st.computational_basis(2), 1.0, gamma=2.0)
        slow = st.decohere(WORKED, st.computational_basis(2), 2.0, gamma=1.0)
        assert np.abs(fast.mat - slow.mat).max() <= 1e-15

    def test_stays_in_leaf_and_contracts(self, rng):
        for d in (2, 3, 4):
            rho = random_state(d, rng)
            u = random_unitary(d, rng)
            basis = st.measurement_basis(u)
            to_basis = u.conj().T
            prev_radius = None
            rep0 = st.change_basis(rho, to_basis)
            for t in (0.1, 0.5, 1.0, 2.0):
                out = st.decohere(rho, basis, t)
                rep = st.change_basis(out, to_basis)
                assert st.same_leaf(rep, rep0)
                radius = st.leaf_radius(rep)
                if prev_radius is not None:
                    assert radius < prev_radius
                prev_radius = radius

    def test_trajectory_collinear(self, rng):
        rho = random_state(3, rng)
        basis = st.computational_basis(3)
        proj = st.project_to_simplex(rho)
        for t in (0.2, 0.7, 1.5):
            mid = st.decohere(rho, basis, t)
            _, residual = st.cut_ratio(rho, proj, mid)
            assert abs(residual) <= 1e-9

    def test_validity_preserved(self):
        rng = seeded(51)
        for _ in range(100):
            d = int(rng.integers(2, 7))
            rho = random_state(d, rng)
            basis = st.measurement_basis(random_unitary(d, rng))
            t = float(rng.exponential(2.0))
            out = st.decohere(rho, basis, t)
            assert st.eig_hermitian(out).eigenvalues.min() >= -1e-10


class TestTomography:
    def test_exact_pauli_data_recovers_worked(self):
        # linear-inversion oracle: p(Z) = diag, p(X) = 1/2 +- Re rho01,
        # p(Y) = 1/2 -+ Im rho01
        z = st.computational_basis(2)
        x = st.measurement_basis(HADAMARD)
        y = st.measurement_basis(Y_EIGEN)
        record = st.TomographyRecord(
            bases=(z, x, y),
            diag_data=(
                st.probability_vector([0.5, 0.5]),
                st.probability_vector([2 / 3, 1 / 3]),
                st.probability_vector([0.5, 0.5]),
            ),
        )
        rho, residual = st.reconstruct(record)
        assert np.abs(rho.mat - WORKED.mat).max() <= 1e-9
        assert residual <= 1e-9

    def test_single_basis_min_norm(self):
        record = st.TomographyRecord(
            bases=(st.computational_basis(2),),
            diag_data=(st.probability_vector([0.5, 0.5]),),
        )
        rho, residual = st.reconstruct(record)
        assert np.abs(rho.mat - np.eye(2) / 2).max() <= 1e-12
        assert residual <= 1e-12

    def test_pure_state_recovery(self, rng):
        psi = st.to_density(st.ket(np.array([0.6, 0.8j])))
        record = st.simulate_record(psi)
        rho, _ = st.reconstruct(record)
        assert st.purity(rho) >= 1 - 1e-6

    def test_roundtrip_random(self, rng):
        for d in (2, 3):
            for _ in range(10):
                rho = random_state(d, rng)
                rebuilt, residual = st.reconstruct(st.simulate_record(rho))
                assert np.abs(rebuilt.mat - rho.mat).max() <= 1e-8
                assert residual <= 1e-8

    def test_default_bases_informationally_complete(self):
        for d in (2, 3, 4):
            bases = st.default_bases(d)
            a = _design_matrix(bases, d)
            assert np.linalg.matrix_rank(a, tol=1e-8) == d * d - 1

    def test_default_bases_deterministic(self):
        a = st.default_bases(3)
        b = st.default_bases(3)
        for x, y in zip(a, b):
            assert np.array_equal(x.mat, y.mat)

    def test_empty_record(self):
        with pytest.raises(EmptyRecord):
            st.reconstruct(st.TomographyRecord(bases=(), diag_data=()))

    def test_mixed_dims_rejected(self):
        with pytest.raises(DimensionMismatch):
            st.TomographyRecord(
                bases=(st.computational_basis(2),),
                diag_data=(st.probability_vector([1 / 3, 1 / 3, 1 / 3]),),
            )

    def test_linear_inversion_oracle_agrees(self, rng):
        # independent qubit oracle: rho00 from Z, Re/Im of rho01 from X/Y
        rho = random_state(2, rng)
        z = st.computational_basis(2)
        x = st.measurement_basis(HADAMARD)
        y = st.measurement_basis(Y_EIGEN)
        pz = st.measure_probabilities(rho, z).probs
        px = st.measure_probabilities(rho, x).probs
        py = st.measure_probabilities(rho, y).probs
        oracle = np.array(
            [
                [pz[0], (px[0] - 0.5) - 1j * (py[0] - 0.5)],
                [(px[0] - 0.5) + 1j * (py[0] - 0.5), pz[1]],
            ]
        )
        assert np.abs(oracle - rho.mat).max() <= 1e-10
        record = st.TomographyRecord(
            bases=(z, x, y),
            diag_data=(
                st.probability_vector(pz),
                st.probability_vector(px),
                st.probability_vector(py),
            ),
        )
        rebuilt, _ = st.reconstruct(record)
        assert np.abs(rebuilt.mat - oracle).max() <= 1e-9
