import math

import numpy as np
import pytest

import statespace as st
from statespace.errors import BadWeights, CoincidentEndpoints, DimensionMismatch

from util import random_state, seeded

UP = st.validate_density([[1, 0], [0, 0]])
DOWN = st.validate_density([[0, 0], [0, 1]])
RIGHT = st.validate_density([[0.5, 0.5], [0.5, 0.5]])
WORKED = np.array([[0.5, 1 / 6], [1 / 6, 0.5]])


class TestMix:
    def test_70_30(self):
        mixed = st.mix(st.WeightedEnsemble([(0.7, UP), (0.3, DOWN)]))
        assert np.abs(mixed.mat - np.diag([0.7, 0.3])).max() <= 1e-15
        point = st.to_statepoint(mixed)
        # cuts the diameter 70/30, landing 0.2 from center toward up
        assert np.allclose(point.coords, [0, 0, 0.2], atol=1e-15)

    def test_thirds_reproduces_worked_matrix(self):
        mixed = st.mix(
            st.WeightedEnsemble([(1 / 3, UP), (1 / 3, DOWN), (1 / 3, RIGHT)])
        )
        assert np.abs(mixed.mat - WORKED).max() <= 1e-12

    def test_equal_projector_mixture_is_center(self):
        for d in (2, 3, 5):
            comps = []
            for i in range(d):
                m = np.zeros((d, d))
                m[i, i] = 1.0
                comps.append((1.0 / d, st.validate_density(m)))
            mixed = st.mix(st.WeightedEnsemble(comps))
            assert np.abs(mixed.mat - np.eye(d) / d).max() <= 1e-12

    def test_barycentric_linearity(self, rng):
        for d in (2, 3, 5):
            comps = [(w, random_state(d, rng)) for w in rng.dirichlet(np.ones(4))]
            ens = st.WeightedEnsemble(comps)
            mixed = st.mix(ens)
            weighted = sum(
                w * st.to_statepoint(s).coords for w, s in zip(ens.weights, ens.states)
            )
            assert np.abs(st.to_statepoint(mixed).coords - weighted).max() <= 1e-10

    def test_convexity_random_ensembles(self, rng):
        for d in (2, 3, 4, 6):
            for _ in range(5):
                n = int(rng.integers(2, 11))
                comps = [
                    (w, random_state(d, rng)) for w in rng.dirichlet(np.ones(n))
                ]
                mixed = st.mix(st.WeightedEnsemble(comps))
                assert st.eig_hermitian(mixed).eigenvalues.min() >= -1e-10
                assert abs(mixed.mat.trace().real - 1) <= 1e-10

    def test_recursive_consistency(self, rng):
        d, n = 3, 5
        weights = rng.dirichlet(np.ones(n))
        states = [random_state(d, rng) for _ in range(n)]
        direct = st.mix(st.WeightedEnsemble(list(zip(weights, states))))

        acc, acc_w = states[0], weights[0]
        for w, s in zip(weights[1:], states[1:]):
            total = acc_w + w
            acc = st.mix(st.WeightedEnsemble([(acc_w / total, acc), (w / total, s)]))
            acc_w = total
        assert np.abs(direct.mat - acc.mat).max() <= 1e-10

    def test_weights_normalized_in_window(self):
        ens = st.WeightedEnsemble([(0.7 + 2e-7, UP), (0.3, DOWN)])
        assert abs(ens.weights.sum() - 1.0) <= 1e-15

    def test_bad_weights(self):
        with pytest.raises(BadWeights):
            st.WeightedEnsemble([(0.8, UP), (0.3, DOWN)])
        with pytest.raises(BadWeights):
            st.WeightedEnsemble([(-0.1, UP), (1.1, DOWN)])
        with pytest.raises(BadWeights):
            st.WeightedEnsemble([])

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatch):
            st.WeightedEnsemble(
                [(0.5, UP), (0.5, st.validate_density(np.eye(3) / 3))]
            )


class TestCutRatio:
    def test_at_endpoint(self):
        t, res = st.cut_ratio(UP, DOWN, UP)
        assert t == 0.0
        assert abs(res) <= 1e-12

    def test_70_30_mixture(self):
        m = st.mix(st.WeightedEnsemble([(0.7, UP), (0.3, DOWN)]))
        t, res = st.cut_ratio(UP, DOWN, m)
        assert t == pytest.approx(0.3, abs=1e-9)
        assert abs(res) <= 1e-9

    def test_off_segment(self):
        t, res = st.cut_ratio(UP, DOWN, RIGHT)
        assert res > 1e-3  # strictly off the segment

    def test_coincident_endpoints(self):
        with pytest.raises(CoincidentEndpoints):
            st.cut_ratio(UP, UP, DOWN)

    def test_random_mixtures(self, rng):
        for d in (2, 3, 5):
            for _ in range(20):
                a, b = random_state(d, rng), random_state(d, rng)
                if st.distance(a, b) <= 1e-6:
                    continue
                p = float(rng.uniform(0.05, 0.95))
                m = st.mix(st.WeightedEnsemble([(p, a), (1 - p, b)]))
                t, res = st.cut_ratio(a, b, m)
                assert t == pytest.approx(1 - p, abs=1e-9)
                assert abs(res) <= 1e-9
