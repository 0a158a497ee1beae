"""Decoherence-leaf coordinates of a state in its representation basis.

Zeroing the off-diagonals of a state projects its statepoint perpendicularly
onto the basis simplex.  The off-diagonal entries, in polar form, locate the
state inside the leaf of everything sharing that projection; their squared
magnitudes sum to the squared leaf radius, and leaf radius and in-simplex
radius combine by Pythagoras to the full center distance.

The basis is always the representation basis of the input; re-express the
state with change_basis first to work in another one.  Off-diagonal order is
row-major over the upper triangle: (0,1), (0,2), ..., (1,2), ...; a zero
magnitude reports phase 0.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .config import resolve
from .densmat import DensityMatrix
from .errors import DimensionMismatch
from .simplex import ProbabilityVector


@dataclass(frozen=True)
class LeafCoordinates:
    dim: int
    diag: ProbabilityVector
    offdiag: tuple = field(repr=False)  # ((magnitude, phase), ...) row-major

    @property
    def magnitudes(self):
        return np.array([m for m, _ in self.offdiag])

    @property
    def phases(self):
        return np.array([p for _, p in self.offdiag])

    def radius(self):
        m = self.magnitudes
        return math.sqrt(float(m @ m))


def project_to_simplex(rho):
    """Keep the diagonal, zero the off-diagonals (a valid state)."""
    return DensityMatrix(dim=rho.dim, mat=np.diag(rho.mat.diagonal().real))


def leaf_coordinates(rho):
    """Diagonal probabilities plus polar off-diagonals locating the state
    within its decoherence leaf."""
    d = rho.dim
    pairs = []
    for j in range(d):
        for k in range(j + 1, d):
            z = complex(rho.mat[j, k])
            mag = abs(z)
            pairs.append((mag, cmath.phase(z) if mag > 0.0 else 0.0))
    return LeafCoordinates(
        dim=d,
        diag=ProbabilityVector(dim=d, probs=rho.diag()),
        offdiag=tuple(pairs),
    )


def leaf_radius(rho):
    """Distance from the state to its simplex projection,
    sqrt(sum of squared upper off-diagonal magnitudes)."""
    upper = rho.mat[np.triu_indices(rho.dim, k=1)]
    return float(np.linalg.norm(upper))


def same_leaf(a, b, config=None):
    """True when the two states share their diagonal (the same projection)
    in the common representation basis."""
    cfg = resolve(config)
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    return bool(np.abs(a.diag() - b.diag()).max() <= cfg.same_leaf_tol)
