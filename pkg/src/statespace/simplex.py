"""Regular unit simplex geometry for diagonalized states.

Probabilities (p_1 ... p_d) locate a state inside a regular unit
(d-1)-simplex.  The first d-1 probabilities are Cartesian coordinates of an
irregular corner simplex; the linear map M below turns that corner simplex
into the regular one, stretching the all-ones diagonal direction by
sqrt(d/2) and leaving the difference directions at 1/sqrt(2):

    M = 1/(sqrt(2)(d-1)) * [ sqrt(d)+d-2 on the diagonal,
                             sqrt(d)-1   elsewhere ]        (square, d-1)

Basis state i < d sits at column i of M; basis state d sits at the origin.
Squared distances transform with M^T M (1 on the diagonal, 1/2 off),
which collapses to r^2 = (1/2) sum_i (p_i - q_i)^2 over all d entries.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import resolve
from .errors import DimensionMismatch, DimensionOutOfRange


@dataclass(frozen=True)
class ProbabilityVector:
    """d nonnegative reals summing to 1 (tiny negative drift tolerated)."""

    dim: int
    probs: np.ndarray = field(repr=True)

    def __post_init__(self):
        p = np.ascontiguousarray(self.probs, dtype=np.float64)
        if p.ndim != 1 or p.shape[0] != self.dim:
            raise DimensionMismatch(f"expected {self.dim} probabilities, got {p.shape}")
        if not np.all(np.isfinite(p)):
            raise DimensionMismatch("probabilities contain NaN or Inf")
        if p.min() < -1e-10 or p.max() > 1.0 + 1e-10:
            raise DimensionOutOfRange(
                f"probabilities outside [0, 1]: min {p.min():.3e}, max {p.max():.3e}"
            )
        if abs(p.sum() - 1.0) > 1e-10:
            raise DimensionOutOfRange(f"probabilities sum to {p.sum():.12f}, not 1")
        p.flags.writeable = False
        object.__setattr__(self, "probs", p)

    def clamped(self):
        """Probabilities with negative drift set to 0 (for geometry)."""
        return np.clip(self.probs, 0.0, None)


def probability_vector(probs):
    p = np.asarray(probs, dtype=np.float64)
    return ProbabilityVector(dim=p.shape[0], probs=p)


@dataclass(frozen=True)
class SimplexChart:
    """Transformation, metric and vertex layout for one dimension."""

    dim: int
    transform: np.ndarray = field(repr=False)   # M, (d-1) x (d-1)
    metric: np.ndarray = field(repr=False)      # M^T M
    vertices: np.ndarray = field(repr=False)    # d rows in R^(d-1); row d-1 = 0


@lru_cache(maxsize=32)
def _cached_chart(d):
    n = d - 1
    m = np.full((n, n), (math.sqrt(d) - 1.0) / (math.sqrt(2.0) * n))
    np.fill_diagonal(m, (math.sqrt(d) + d - 2.0) / (math.sqrt(2.0) * n))
    vertices = np.zeros((d, n))
    vertices[:n, :] = m.T  # vertex i is column i of M
    metric = m.T @ m
    for arr in (m, metric, vertices):
        arr.flags.writeable = False
    return SimplexChart(dim=d, transform=m, metric=metric, vertices=vertices)


def build_chart(d, config=None):
    """Chart for dimension d >= 2 (cached)."""
    cfg = resolve(config)
    if d < 2 or d > cfg.dim_cap:
        raise DimensionOutOfRange(f"dimension {d} outside [2, {cfg.dim_cap}]")
    return _cached_chart(d)


def simplex_point(p, chart):
    """Map probabilities to the point M (p_1 ... p_{d-1}) in the regular
    simplex; equals the vertex average weighted by all d probabilities."""
    if p.dim != chart.dim:
        raise DimensionMismatch(f"dimensions differ: {p.dim} vs {chart.dim}")
    return chart.transform @ p.probs[:-1]


def simplex_distance(pa, pb):
    """sqrt((1/2) sum (pa_i - pb_i)^2) over all d entries."""
    if pa.dim != pb.dim:
        raise DimensionMismatch(f"dimensions differ: {pa.dim} vs {pb.dim}")
    diff = pa.probs - pb.probs
    return math.sqrt(0.5 * float(diff @ diff))


def center_distance(p):
    """Distance from the probabilities' statepoint to the simplex center,
    sqrt((1/2) sum (p_i - 1/d)^2); largest (the pure bound) at a vertex."""
    diff = p.probs - 1.0 / p.dim
    return math.sqrt(0.5 * float(diff @ diff))


def parallel_cut_lengths(p):
    """Edge segments cut by hyperplanes through the statepoint parallel to
    each facet: the segment farthest from vertex i has length p_i."""
    return p.clamped()
