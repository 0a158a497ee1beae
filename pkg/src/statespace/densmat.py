"""Complex Hermitian density matrices: validation, trace algebra, spectra.

A density matrix is Hermitian, positive semi-definite and has unit trace.
:func:`validate_density` is the only public constructor; everything downstream
may then assume the invariants hold.  The eigensolver is a cyclic Jacobi
iteration specialized to Hermitian matrices -- dimensions here are small
(capped at 64 by default) and Jacobi is simple, deterministic and accurate.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .config import resolve
from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    DimensionOutOfRange,
    FormatError,
    NotHermitian,
    NotPositiveSemiDefinite,
    NotUnitary,
    TraceNotOne,
)


def _freeze(arr):
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class DensityMatrix:
    """A validated d x d state matrix.  Immutable; share freely."""

    dim: int
    mat: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "mat", _freeze(self.mat.astype(np.complex128)))

    def diag(self):
        return self.mat.diagonal().real.copy()


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalues with orthonormal eigenvector columns."""

    eigenvalues: np.ndarray = field(repr=True)
    eigenvectors: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "eigenvalues", _freeze(self.eigenvalues))
        object.__setattr__(self, "eigenvectors", _freeze(self.eigenvectors))

    @property
    def dim(self):
        return self.eigenvalues.shape[0]


class StateClass(Enum):
    PURE = "Pure"
    SURFACE_MIXED = "SurfaceMixed"
    INTERIOR = "Interior"


def validate_density(entries, config=None):
    """Check Hermiticity, unit trace and positive semi-definiteness.

    Parameters
    ----------
    entries : (d, d) array_like of complex
    config : Config, optional

    Returns
    -------
    DensityMatrix
        Wrapping the Hermitized copy ``(A + A^dagger)/2`` of the input.

    Raises
    ------
    NotHermitian, TraceNotOne, NotPositiveSemiDefinite
        Each names the violated invariant and the worst residual.
    """
    cfg = resolve(config)
    a = np.ascontiguousarray(entries, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionOutOfRange(f"expected a square matrix, got shape {a.shape}")
    d = a.shape[0]
    if d < 2 or d > cfg.dim_cap:
        raise DimensionOutOfRange(f"dimension {d} outside [2, {cfg.dim_cap}]")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise FormatError("matrix contains NaN or Inf entries")

    herm_res = float(np.abs(a - a.conj().T).max())
    if herm_res > cfg.validation_tol:
        raise NotHermitian(
            f"not Hermitian: worst |a_ij - conj(a_ji)| = {herm_res:.3e}",
            residual=herm_res,
        )
    h = (a + a.conj().T) / 2.0

    trace_res = abs(float(h.diagonal().real.sum()) - 1.0)
    if trace_res > cfg.validation_tol:
        raise TraceNotOne(
            f"trace differs from 1 by {trace_res:.3e}", residual=trace_res
        )

    evals, _ = jacobi_eigh(h, tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps)
    lam_min = float(evals.min())
    if lam_min < -cfg.validation_tol:
        raise NotPositiveSemiDefinite(
            f"negative eigenvalue {lam_min:.3e}", residual=lam_min
        )
    return DensityMatrix(dim=d, mat=h)


def trace_product(a, b):
    """Tr(a.b) for two states of equal dimension (a real number)."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    t = complex(np.vdot(a.mat, b.mat))  # Tr(a^dagger b) == Tr(ab) for Hermitian a
    if abs(t.imag) > 1e-12:
        raise NotHermitian(f"trace product has imaginary part {t.imag:.3e}")
    return t.real


def frobenius_norm_sq(a, b):
    """Entrywise squared norm of the difference, sum |a_ij - b_ij|^2."""
    if a.dim != b.dim:
        raise DimensionMismatch(f"dimensions differ: {a.dim} vs {b.dim}")
    diff = a.mat - b.mat
    return float(np.vdot(diff, diff).real)


def purity(rho):
    """Tr(rho^2), between 1/d (maximally mixed) and 1 (pure)."""
    return float(np.vdot(rho.mat, rho.mat).real)


def jacobi_eigh(h, tol=1e-12, max_sweeps=100):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvector columns), unsorted.  Raises
    ConvergenceFailure if the off-diagonal Frobenius norm is still above
    ``tol`` after ``max_sweeps`` full sweeps.
    """
    a = np.array(h, dtype=np.complex128)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return a.diagonal().real.copy(), v

    mask = ~np.eye(n, dtype=bool)
    sweeps = 0
    while True:
        off = float(np.linalg.norm(a[mask]))
        if off <= tol:
            break
        if sweeps >= max_sweeps:
            raise ConvergenceFailure(
                f"Jacobi sweep cap {max_sweeps} reached with off-diagonal norm {off:.3e}"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                beta = a[p, q]
                mag = abs(beta)
                if mag <= tol / (n * n):
                    continue
                phase = beta / mag
                tau = (a[p, p].real - a[q, q].real) / (2.0 * mag)
                sign = 1.0 if tau >= 0.0 else -1.0
                t = sign / (abs(tau) + math.hypot(tau, 1.0))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c * phase

                # a <- U^dagger a U with the (p, q) plane rotation
                col_p = a[:, p] * c + a[:, q] * np.conj(s)
                col_q = -a[:, p] * s + a[:, q] * c
                a[:, p], a[:, q] = col_p, col_q
                row_p = c * a[p, :] + s * a[q, :]
                row_q = -np.conj(s) * a[p, :] + c * a[q, :]
                a[p, :], a[q, :] = row_p, row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vcol_p = v[:, p] * c + v[:, q] * np.conj(s)
                vcol_q = -v[:, p] * s + v[:, q] * c
                v[:, p], v[:, q] = vcol_p, vcol_q
    return a.diagonal().real.copy(), v


def _phase_fix(col, tol=1e-9):
    """Rotate a column's global phase so its first nonzero entry is real > 0."""
    for x in col:
        if abs(x) > tol:
            return col * (np.conj(x) / abs(x))
    return col


def _canonical_order(vals, vecs, tie_tol=1e-9):
    """Descending eigenvalues; degenerate blocks ordered lexicographically
    on components rounded at 1e-9, then re-orthonormalized and phase-fixed."""
    order = np.argsort(-vals, kind="stable")
    vals = vals[order]
    vecs = vecs[:, order]

    d = vals.shape[0]
    start = 0
    while start < d:
        stop = start + 1
        while stop < d and vals[start] - vals[stop] <= tie_tol:
            stop += 1
        if stop - start > 1:
            block = [_phase_fix(vecs[:, k]) for k in range(start, stop)]
            keys = [
                tuple(np.round(col.view(np.float64) / 1e-9).astype(np.int64))
                for col in block
            ]
            for i, k in enumerate(sorted(range(len(block)), key=lambda i: keys[i])):
                vecs[:, start + i] = block[k]
            # Gram-Schmidt inside the block keeps orthonormality after reordering
            for i in range(start, stop):
                for j in range(start, i):
                    vecs[:, i] -= np.vdot(vecs[:, j], vecs[:, i]) * vecs[:, j]
                vecs[:, i] /= np.linalg.norm(vecs[:, i])
        start = stop

    for k in range(d):
        vecs[:, k] = _phase_fix(vecs[:, k])
    return vals, vecs


def eig_hermitian(rho, config=None):
    """Spectrum of a state: descending eigenvalues, canonical eigenvectors.

    Deterministic: ties are broken by lexicographic ordering of the rounded
    eigenvector components, and every eigenvector's first nonzero component
    is made real and positive.
    """
    cfg = resolve(config)
    vals, vecs = jacobi_eigh(
        rho.mat, tol=cfg.jacobi_tol, max_sweeps=cfg.jacobi_max_sweeps
    )
    vals, vecs = _canonical_order(vals, vecs)
    return Spectrum(eigenvalues=vals, eigenvectors=vecs)


def entropy_and_w(rho, config=None):
    """Mixing entropy S = -sum p_i ln p_i (nats) and number of states W = e^S.

    Eigenvalues in [-validation_tol, 0) are clamped to 0; 0 ln 0 is 0.
    """
    cfg = resolve(config)
    p = eig_hermitian(rho, config).eigenvalues
    p = np.clip(p, 0.0, None)
    nz = p[p > 0.0]
    s = float(-(nz * np.log(nz)).sum())
    if s < 0.0 and s > -cfg.validation_tol:
        s = 0.0
    return s, math.exp(s)


def classify(rho, config=None):
    """Pure (purity 1), SurfaceMixed (singular but not pure), or Interior."""
    cfg = resolve(config)
    if abs(purity(rho) - 1.0) <= cfg.classify_tol:
        return StateClass.PURE
    lam_min = float(eig_hermitian(rho, config).eigenvalues.min())
    if lam_min <= cfg.classify_tol:
        return StateClass.SURFACE_MIXED
    return StateClass.INTERIOR


def check_unitary(u, dim=None, config=None):
    """Return u as a complex ndarray after checking u u^dagger = I."""
    cfg = resolve(config)
    u = np.asarray(u, dtype=np.complex128)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise NotUnitary(f"expected a square matrix, got shape {u.shape}")
    if dim is not None and u.shape[0] != dim:
        raise DimensionMismatch(f"unitary is {u.shape[0]}x{u.shape[0]}, state is {dim}-dimensional")
    res = float(np.abs(u @ u.conj().T - np.eye(u.shape[0])).max())
    if res > cfg.validation_tol:
        raise NotUnitary(f"u u^dagger differs from identity by {res:.3e}", residual=res)
    return u


def change_basis(rho, u, config=None):
    """Re-express the state as u rho u^dagger (u unitary within 1e-10)."""
    u = check_unitary(u, dim=rho.dim, config=config)
    out = u @ rho.mat @ u.conj().T
    return DensityMatrix(dim=rho.dim, mat=(out + out.conj().T) / 2.0)
