"""Numerical tolerances and limits, overridable per call.

All tolerances are absolute.  ``STATESPACE_TOL`` in the environment overrides
the default validation tolerance for processes that cannot pass a Config
(e.g. the CLI).
"""

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Config:
    validation_tol: float = 1e-10      # Hermiticity / trace / PSD admission
    classify_tol: float = 1e-9         # purity == 1, smallest eigenvalue == 0
    jacobi_tol: float = 1e-12          # off-diagonal Frobenius norm target
    jacobi_max_sweeps: int = 100
    dim_cap: int = 64                  # largest validated quantum dimension
    zero_statevector_tol: float = 1e-9  # "is maximally mixed" detection
    coincident_tol: float = 1e-9       # coincident endpoints / states
    same_leaf_tol: float = 1e-9
    weight_sum_tol: float = 1e-6       # ensemble weights renormalization window

    def with_overrides(self, **kw):
        return replace(self, **kw)


def _default():
    tol = os.environ.get("STATESPACE_TOL")
    if tol is None:
        return Config()
    return Config(validation_tol=float(tol))


DEFAULT = _default()


def resolve(config):
    """Return the given config or the process-wide default."""
    return DEFAULT if config is None else config
