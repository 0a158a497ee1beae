"""Euclidean embedding of d-dimensional states into R^(d^2-1).

The chart is built from the traceless Hermitian generator family normalized
to Tr(g_j g_k) = 2 delta_jk, with coordinates c_k = Tr(rho g_k)/2, so the
maximally mixed state I/d sits at the origin, squared coordinate length is
Tr(rho^2)/2 - 1/(2d), and the Euclidean distance between two coordinate
vectors equals sqrt(Tr(a^2)/2 + Tr(b^2)/2 - Tr(ab)).

Generator ordering (frozen; serialized statepoints depend on it):

1. real-pair generators E_jk + E_kj for j < k, row-major (0,1), (0,2), ...;
2. imaginary-pair generators -i E_jk + i E_kj in the same (j, k) order;
3. diagonal ladder sqrt(2/(l(l+1))) * diag(1, ..., 1, -l, 0, ..., 0) for
   l = 1 .. d-1.

For d = 2 this is exactly (sigma_x, sigma_y, sigma_z).
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import resolve
from .densmat import DensityMatrix, jacobi_eigh, purity, trace_product, validate_density
from .errors import (
    DimensionMismatch,
    DimensionOutOfRange,
    NotPositiveSemiDefinite,
    ZeroStatevector,
)


@dataclass(frozen=True)
class GeneratorBasis:
    """The d^2-1 traceless Hermitian generators for one dimension."""

    dim: int
    generators: tuple


@dataclass(frozen=True)
class StatePoint:
    """Coordinates of a state relative to the maximally mixed origin."""

    dim: int
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        c = np.ascontiguousarray(self.coords, dtype=np.float64)
        if c.ndim != 1 or c.shape[0] != self.dim * self.dim - 1:
            raise DimensionMismatch(
                f"expected {self.dim ** 2 - 1} coordinates, got {c.shape}"
            )
        if not np.all(np.isfinite(c)):
            raise DimensionMismatch("coordinates contain NaN or Inf")
        bound = 0.5 - 0.5 / self.dim
        if float(c @ c) > bound + 1e-9:
            raise DimensionOutOfRange(
                f"coordinate length {float(np.linalg.norm(c)):.6f} exceeds the "
                f"pure-state bound {math.sqrt(bound):.6f} for d={self.dim}"
            )
        c.flags.writeable = False
        object.__setattr__(self, "coords", c)

    def norm(self):
        return float(np.linalg.norm(self.coords))


def _pair_indices(d):
    return [(j, k) for j in range(d) for k in range(j + 1, d)]


@lru_cache(maxsize=16)
def _cached_basis(d):
    gens = []
    for j, k in _pair_indices(d):
        g = np.zeros((d, d), dtype=np.complex128)
        g[j, k] = 1.0
        g[k, j] = 1.0
        gens.append(g)
    for j, k in _pair_indices(d):
        g = np.zeros((d, d), dtype=np.complex128)
        g[j, k] = -1.0j
        g[k, j] = 1.0j
        gens.append(g)
    for l in range(1, d):
        g = np.zeros((d, d), dtype=np.complex128)
        scale = math.sqrt(2.0 / (l * (l + 1)))
        for i in range(l):
            g[i, i] = scale
        g[l, l] = -l * scale
        gens.append(g)
    for g in gens:
        g.flags.writeable = False
    return GeneratorBasis(dim=d, generators=tuple(gens))


def generator_basis(d, config=None):
    """The frozen generator family for dimension d (cached per d)."""
    cfg = resolve(config)
    if d < 2 or d > cfg.dim_cap:
        raise DimensionOutOfRange(f"dimension {d} outside [2, {cfg.dim_cap}]")
    return _cached_basis(d)


def coords_from_matrix(mat):
    """Chart coordinates of a Hermitian matrix, without materializing
    generators: Re and -Im of the upper off-diagonals, then the diagonal
    ladder combinations."""
    d = mat.shape[0]
    upper = mat[np.triu_indices(d, k=1)]
    diag = mat.diagonal().real
    ladder = np.empty(d - 1)
    csum = 0.0
    for l in range(1, d):
        csum += diag[l - 1]
        ladder[l - 1] = math.sqrt(2.0 / (l * (l + 1))) * (csum - l * diag[l]) / 2.0
    return np.concatenate([upper.real, -upper.imag + 0.0, ladder])


def matrix_from_coords(coords, d):
    """Inverse chart: I/d plus the generator combination given by coords."""
    n_pairs = d * (d - 1) // 2
    mat = np.zeros((d, d), dtype=np.complex128)
    iu = np.triu_indices(d, k=1)
    upper = coords[:n_pairs] - 1.0j * coords[n_pairs : 2 * n_pairs]
    mat[iu] = upper
    mat += mat.conj().T
    diag = np.full(d, 1.0 / d)
    for l in range(1, d):
        scale = math.sqrt(2.0 / (l * (l + 1))) * coords[2 * n_pairs + l - 1]
        diag[:l] += scale
        diag[l] -= l * scale
    mat[np.diag_indices(d)] = diag
    return mat


def to_statepoint(rho):
    """Embed a state: c_k = Tr(rho g_k)/2."""
    return StatePoint(dim=rho.dim, coords=coords_from_matrix(rho.mat))


def from_statepoint(point, dim=None, config=None):
    """Rebuild the state at a coordinate point.

    Accepts a StatePoint, or raw coordinates plus ``dim`` (raw coordinates may
    lie anywhere; points outside the statespace raise NotPositiveSemiDefinite).
    """
    cfg = resolve(config)
    if isinstance(point, StatePoint):
        d, coords = point.dim, point.coords
    else:
        coords = np.ascontiguousarray(point, dtype=np.float64)
        if dim is None:
            raise DimensionMismatch("dim is required with raw coordinates")
        d = int(dim)
        if coords.shape != (d * d - 1,):
            raise DimensionMismatch(
                f"expected {d * d - 1} coordinates, got {coords.shape}"
            )
    mat = matrix_from_coords(coords, d)
    vals, _ = jacobi_eigh(mat, tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps)
    lam_min = float(vals.min())
    if lam_min < -cfg.validation_tol:
        raise NotPositiveSemiDefinite(
            f"point lies outside the statespace: eigenvalue {lam_min:.3e}",
            residual=lam_min,
        )
    return validate_density(mat, config)


def distance(a, b):
    """Statespace distance sqrt(Tr(a^2)/2 + Tr(b^2)/2 - Tr(ab)), in [0, 1]."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    r2 = 0.5 * purity(a) + 0.5 * purity(b) - trace_product(a, b)
    return math.sqrt(max(0.0, r2))


def origin_radius(rho):
    """Length of the statevector from the infinite-entropy origin,
    sqrt(Tr(rho^2)/2); ranges from 1/sqrt(2d) to 1/sqrt(2)."""
    return math.sqrt(0.5 * purity(rho))


def is_maximally_mixed(rho, config=None):
    cfg = resolve(config)
    diff = rho.mat - np.eye(rho.dim) / rho.dim
    return math.sqrt(0.5 * float(np.vdot(diff, diff).real)) <= cfg.zero_statevector_tol


def angle(a, b, config=None):
    """Angle (radians) between the statevectors of two states drawn from the
    infinite-entropy origin: arccos(Tr(ab) / (2 r_a r_b)).

    Undefined when a or b is the maximally mixed state of its dimension
    (the construction degenerates); raises ZeroStatevector.
    """
    cfg = resolve(config)
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    if is_maximally_mixed(a, cfg) or is_maximally_mixed(b, cfg):
        raise ZeroStatevector(
            "angle is undefined at the maximally mixed state of this dimension"
        )
    arg = trace_product(a, b) / (2.0 * origin_radius(a) * origin_radius(b))
    return math.acos(min(1.0, max(-1.0, arg)))
