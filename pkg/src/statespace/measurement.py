"""Projective measurement, leaf-confined decoherence, and tomography.

Measuring in a basis reads the diagonal of the state expressed in that
basis; geometrically these probabilities are the segments the state's
perpendicular projection cuts on the basis simplex.  Decoherence here is
modeled as uniform exponential damping of the off-diagonals in the chosen
basis -- the simplest evolution confined to the straight line between the
state and its simplex projection inside one decoherence leaf.  (The source
geometry constrains only the leaf, not the dynamics; other damping models
would do as well.)

Tomography: diagonal data from several bases constrain the statepoint
linearly in chart coordinates; reconstruct solves the resulting
least-squares system (minimum-norm when underdetermined) and projects the
answer back to the PSD cone.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import resolve
from .densmat import DensityMatrix, check_unitary, jacobi_eigh, validate_density
from .embedding import coords_from_matrix, matrix_from_coords
from .errors import DimensionMismatch, EmptyRecord, NegativeTime
from .randomstates import haar_unitary
from .simplex import ProbabilityVector


@dataclass(frozen=True)
class MeasurementBasis:
    """d orthonormal complex columns; column i is the outcome-i state."""

    dim: int
    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        m = np.ascontiguousarray(self.mat, dtype=np.complex128)
        m.flags.writeable = False
        object.__setattr__(self, "mat", m)

    def column(self, i):
        return self.mat[:, i]


def measurement_basis(vectors, config=None):
    """Validate column vectors as a unitary and wrap them."""
    u = check_unitary(vectors, config=config)
    return MeasurementBasis(dim=u.shape[0], mat=u)


def computational_basis(d):
    return MeasurementBasis(dim=d, mat=np.eye(d, dtype=np.complex128))


def measure_probabilities(rho, basis):
    """Outcome probabilities <B_i|rho|B_i> as a ProbabilityVector."""
    if rho.dim != basis.dim:
        raise DimensionMismatch(f"dimensions differ: {rho.dim} vs {basis.dim}")
    in_basis = basis.mat.conj().T @ rho.mat @ basis.mat
    diag = in_basis.diagonal()
    if np.abs(diag.imag).max() > 1e-12:
        raise DimensionMismatch(
            f"probabilities came out complex ({np.abs(diag.imag).max():.3e})"
        )
    return ProbabilityVector(dim=rho.dim, probs=np.clip(diag.real, -1e-10, 1.0))


def decohere(rho, basis, t, gamma=1.0):
    """Damp the off-diagonals in the given basis by e^(-gamma t).

    t = 0 returns the state unchanged; t -> infinity reaches the simplex
    projection in that basis.  The whole trajectory stays inside one
    decoherence leaf, moving on the straight segment toward its center.
    """
    if t < 0.0:
        raise NegativeTime(f"time {t} must be >= 0")
    if rho.dim != basis.dim:
        raise DimensionMismatch(f"dimensions differ: {rho.dim} vs {basis.dim}")
    if t == 0.0:
        return rho
    damp = math.exp(-gamma * t)
    in_basis = basis.mat.conj().T @ rho.mat @ basis.mat
    damped = damp * in_basis + (1.0 - damp) * np.diag(in_basis.diagonal())
    out = basis.mat @ damped @ basis.mat.conj().T
    return DensityMatrix(dim=rho.dim, mat=(out + out.conj().T) / 2.0)


@dataclass(frozen=True)
class TomographyRecord:
    """Observed diagonal frequencies for each measured basis."""

    bases: tuple
    diag_data: tuple

    def __post_init__(self):
        if len(self.bases) != len(self.diag_data):
            raise DimensionMismatch(
                f"{len(self.bases)} bases but {len(self.diag_data)} data rows"
            )
        for b, p in zip(self.bases, self.diag_data):
            if b.dim != p.dim:
                raise DimensionMismatch(
                    f"basis dimension {b.dim} != data dimension {p.dim}"
                )

    @property
    def dim(self):
        return self.bases[0].dim if self.bases else 0


_PAULI_X_EIGEN = np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2.0)
_PAULI_Y_EIGEN = np.array([[1, 1], [1j, -1j]], dtype=np.complex128) / math.sqrt(2.0)

# Seed for the deterministic unitary stream behind the d >= 3 default bases.
_BASIS_STREAM_SEED = 20240917


def _design_matrix(bases, d):
    """Rows map chart coordinates to one outcome probability minus 1/d:
    row((b, i), k) = <B_i| g_k |B_i> = 2 * coords(|B_i><B_i|)_k."""
    rows = []
    for b in bases:
        for i in range(d):
            v = b.column(i)
            proj = np.outer(v, v.conj())
            rows.append(2.0 * coords_from_matrix(proj))
    return np.array(rows)


@lru_cache(maxsize=16)
def _cached_default_bases(d):
    if d == 2:
        return (
            computational_basis(2),
            MeasurementBasis(dim=2, mat=_PAULI_X_EIGEN),
            MeasurementBasis(dim=2, mat=_PAULI_Y_EIGEN),
        )
    rng = np.random.default_rng(_BASIS_STREAM_SEED + d)
    bases = [computational_basis(d)]
    bases += [
        MeasurementBasis(dim=d, mat=haar_unitary(d, rng)) for _ in range(d)
    ]
    # informationally complete <=> the coordinate design matrix has full rank
    while np.linalg.matrix_rank(_design_matrix(tuple(bases), d), tol=1e-8) < d * d - 1:
        bases.append(MeasurementBasis(dim=d, mat=haar_unitary(d, rng)))
    return tuple(bases)


def default_bases(d):
    """An informationally complete measurement set: the three qubit Pauli
    eigenbases for d = 2, otherwise the computational basis plus d seeded
    deterministic unitaries (extended further if ever rank-deficient)."""
    return _cached_default_bases(d)


def simulate_record(rho, bases=None):
    """Forward-simulate exact diagonal data for the given (or default) bases."""
    if bases is None:
        bases = default_bases(rho.dim)
    return TomographyRecord(
        bases=tuple(bases),
        diag_data=tuple(measure_probabilities(rho, b) for b in bases),
    )


def reconstruct(record, config=None):
    """Least-squares state reconstruction from diagonal basis data.

    Solves for chart coordinates minimizing the summed squared difference
    between predicted and observed probabilities over all bases (the
    minimum-norm solution when the bases are not informationally complete),
    then projects onto the PSD cone by eigenvalue clamping and trace
    renormalization.  Returns (state, residual) where residual is the data
    misfit plus the statespace distance moved by the projection.
    """
    cfg = resolve(config)
    if not record.bases:
        raise EmptyRecord("no measured bases in the record")
    d = record.dim
    a = _design_matrix(record.bases, d)
    y = np.concatenate([p.probs - 1.0 / d for p in record.diag_data])
    coords, *_ = np.linalg.lstsq(a, y, rcond=None)
    raw = matrix_from_coords(coords, d)
    misfit = float(np.linalg.norm(a @ coords - y))

    vals, vecs = jacobi_eigh(raw, tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps)
    clamped = np.clip(vals, 0.0, None)
    total = float(clamped.sum())
    if total <= 0.0:
        clamped = np.full(d, 1.0 / d)
        total = 1.0
    psd = (vecs * (clamped / total)) @ vecs.conj().T
    psd = (psd + psd.conj().T) / 2.0
    shift = psd - raw
    projection_dist = math.sqrt(0.5 * float(np.vdot(shift, shift).real))
    return validate_density(psd, config), misfit + projection_dist
