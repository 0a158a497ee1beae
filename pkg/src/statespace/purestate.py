"""Pure states: kets, boundary distances, embedded qubit bases.

Two pure statepoints are a distance sqrt(1 - |<b|psi>|^2) apart, which is
also the square root of the probability of NOT finding psi in state b when
measuring in any basis that contains b.  From any two distinct pure states
one can complete an orthonormal qubit pair embedded in the full space, with
the original state a superposition of the pair.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .config import resolve
from .densmat import DensityMatrix
from .errors import CoincidentStates, DimensionMismatch, DimensionOutOfRange


@dataclass(frozen=True)
class PureKet:
    """Unit-norm complex amplitude vector."""

    dim: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.ascontiguousarray(self.amps, dtype=np.complex128)
        if a.ndim != 1 or a.shape[0] != self.dim:
            raise DimensionMismatch(f"expected {self.dim} amplitudes, got {a.shape}")
        if not np.all(np.isfinite(a.view(np.float64))):
            raise DimensionOutOfRange("amplitudes contain NaN or Inf")
        norm = float(np.linalg.norm(a))
        if abs(norm - 1.0) > 1e-10:
            raise DimensionOutOfRange(f"ket norm is {norm:.12f}, not 1")
        a.flags.writeable = False
        object.__setattr__(self, "amps", a)


def ket(amps):
    a = np.asarray(amps, dtype=np.complex128)
    return PureKet(dim=a.shape[0], amps=a)


def basis_ket(d, i):
    a = np.zeros(d, dtype=np.complex128)
    a[i] = 1.0
    return PureKet(dim=d, amps=a)


def to_density(psi):
    """The projector |psi><psi| (always a pure state)."""
    return DensityMatrix(dim=psi.dim, mat=np.outer(psi.amps, psi.amps.conj()))


def overlap(b, psi):
    """<b|psi>."""
    if b.dim != psi.dim:
        raise DimensionMismatch(f"dimensions differ: {b.dim} vs {psi.dim}")
    return complex(np.vdot(b.amps, psi.amps))


def pure_distance(b, psi):
    """Statespace distance between the two projectors,
    sqrt(1 - |<b|psi>|^2)."""
    return math.sqrt(max(0.0, 1.0 - abs(overlap(b, psi)) ** 2))


def complete_qubit_basis(b, psi, config=None):
    """Complete b to an orthonormal qubit pair containing psi.

    Returns (a, amp_b, amp_a) with a the ket
    (1/r)|psi> - (<b|psi>/r)|b>, r = pure_distance(b, psi), so that
    <a|a> = 1, <b|a> = 0 and r|a> + <b|psi>|b> = |psi>.
    """
    cfg = resolve(config)
    amp_b = overlap(b, psi)
    # Gram-Schmidt residual: equal to psi - <b|psi> b with norm
    # sqrt(1 - |<b|psi>|^2), but cancellation-free near coincidence.
    perp = psi.amps - amp_b * b.amps
    r = float(np.linalg.norm(perp))
    if r <= cfg.coincident_tol:
        raise CoincidentStates(
            "states coincide up to phase; no orthogonal completion"
        )
    return PureKet(dim=psi.dim, amps=perp / r), amp_b, r


def column_coordinates(psi, basis):
    """Polar amplitudes <B_i|psi> in the given measurement basis.

    The global phase is fixed so the first nonzero entry has phase 0.  Each
    magnitude m_i pairs with the distance sqrt(1 - m_i^2) from the basis
    statepoint to the state's.
    """
    if psi.dim != basis.dim:
        raise DimensionMismatch(f"dimensions differ: {psi.dim} vs {basis.dim}")
    amps = basis.mat.conj().T @ psi.amps
    for x in amps:
        if abs(x) > 1e-12:
            amps = amps * (np.conj(x) / abs(x))
            break
    out = []
    for z in amps:
        mag = abs(z)
        out.append((mag, cmath.phase(z) if mag > 1e-12 else 0.0))
    return out
