"""Barycentric mixing of states.

A probabilistic mixture sum_i w_i rho_i lands at the probability-weighted
average of the component statepoints, exactly like a center of mass with
weights in place of masses; two-component mixtures cut the connecting segment
in the ratio of the weights, nearer the heavier state.
"""

import numpy as np

from .config import resolve
from .densmat import DensityMatrix
from .embedding import distance
from .errors import BadWeights, CoincidentEndpoints, DimensionMismatch


class WeightedEnsemble:
    """Nonnegative weights summing to 1 with equal-dimension states.

    Weight sums within 1e-6 of 1 are renormalized; anything further off is
    rejected (silent renormalization of grossly wrong input hides bugs).
    """

    def __init__(self, components, config=None):
        cfg = resolve(config)
        components = list(components)
        if not components:
            raise BadWeights("ensemble has no components")
        weights = np.array([w for w, _ in components], dtype=np.float64)
        states = [s for _, s in components]
        if weights.min() < 0.0:
            raise BadWeights(f"negative weight {weights.min():.3e}")
        total = float(weights.sum())
        if abs(total - 1.0) > cfg.weight_sum_tol:
            raise BadWeights(f"weights sum to {total:.8f}, not 1")
        dim = states[0].dim
        for s in states:
            if s.dim != dim:
                raise DimensionMismatch(
                    f"ensemble mixes dimensions {dim} and {s.dim}"
                )
        self.weights = weights / total
        self.weights.flags.writeable = False
        self.states = tuple(states)
        self.dim = dim

    def __len__(self):
        return len(self.states)


def mix(ensemble):
    """The mixture sum_i w_i rho_i as a valid state."""
    acc = np.zeros((ensemble.dim, ensemble.dim), dtype=np.complex128)
    for w, s in zip(ensemble.weights, ensemble.states):
        acc += w * s.mat
    return DensityMatrix(dim=ensemble.dim, mat=acc)


def cut_ratio(a, b, m, config=None):
    """Where m sits on the segment from a to b.

    Returns (t, residual): t = distance(a, m) / distance(a, b), and the
    collinearity defect distance(a, m) + distance(m, b) - distance(a, b)
    (zero up to tolerance iff m lies on the segment).  For the mixture
    m = w_a a + w_b b, t equals w_b.
    """
    cfg = resolve(config)
    r_ab = distance(a, b)
    if r_ab <= cfg.coincident_tol:
        raise CoincidentEndpoints(
            f"endpoints coincide (distance {r_ab:.3e}); ratio undefined"
        )
    r_am = distance(a, m)
    r_mb = distance(m, b)
    return r_am / r_ab, r_am + r_mb - r_ab
