"""The ladder of maximally mixed states and its closed-form geometry.

Statevectors are drawn from the infinite-entropy origin.  The maximally
mixed state of dimension d sits 1/sqrt(2d) from that origin and
sqrt(1/2 - 1/(2d)) from every pure state in its mixture; successive
maximally mixed statevectors close right triangles with legs meeting at
the origin-side angles below.  All quantities here are closed forms; the
embedding module reproduces each one numerically on explicit matrices.
"""

import math
from dataclasses import dataclass

import numpy as np

from .densmat import DensityMatrix
from .errors import BadOrdering, DimensionOutOfRange


@dataclass(frozen=True)
class HierarchyMetrics:
    """Closed-form lengths (statespace units) and angles (radians) at one d.

    r_md     distance origin -> maximally mixed state of dimension d
    r_d      distance maximally mixed -> any pure state of the mixture
    r_succ   distance between successive maximally mixed states (d, d+1)
    theta_d  angle at the maximally mixed point between two orthogonal
             pure states of the mixture
    theta_md angle between the maximally mixed statevector and a pure
             statevector of the mixture
    theta_succ angle between successive maximally mixed statevectors
    """

    d: int
    r_md: float
    r_d: float
    r_succ: float
    theta_d: float
    theta_md: float
    theta_succ: float


def maximally_mixed(d):
    """I/d; for d = 1 the 1x1 unit matrix (a pure state)."""
    if d < 1:
        raise DimensionOutOfRange(f"dimension {d} must be >= 1")
    return DensityMatrix(dim=d, mat=np.eye(d, dtype=np.complex128) / d)


def hierarchy_metrics(d):
    if d < 2:
        raise DimensionOutOfRange(f"dimension {d} must be >= 2")
    return HierarchyMetrics(
        d=d,
        r_md=1.0 / math.sqrt(2.0 * d),
        r_d=math.sqrt(0.5 - 0.5 / d),
        r_succ=1.0 / math.sqrt(2.0 * d * (d + 1)),
        theta_d=math.acos(1.0 / (1.0 - d)),
        theta_md=math.acos(1.0 / math.sqrt(d)),
        theta_succ=math.acos(math.sqrt(d / (d + 1.0))),
    )


def cross_level_distance(d, d_prime):
    """Distance between maximally mixed states of dimensions d >= d' >= 1
    (the lower-dimensional one embedded in the larger space):
    sqrt(1/(2d') - 1/(2d))."""
    if d_prime < 1 or d < d_prime:
        raise BadOrdering(f"need d >= d' >= 1, got d={d}, d'={d_prime}")
    return math.sqrt(0.5 / d_prime - 0.5 / d)


def embed_in_dimension(rho, big_d):
    """Zero-pad a state into a higher dimension (its statepoint keeps all
    mutual distances; the added basis states carry probability 0)."""
    if big_d < rho.dim:
        raise BadOrdering(f"target dimension {big_d} below state dimension {rho.dim}")
    mat = np.zeros((big_d, big_d), dtype=np.complex128)
    mat[: rho.dim, : rho.dim] = rho.mat
    return DensityMatrix(dim=big_d, mat=mat)
