"""Seeded random states, kets and unitaries for tests and demos."""

import numpy as np


def haar_unitary(d, rng):
    """Haar-distributed unitary via QR of a complex Ginibre matrix with the
    standard phase correction."""
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(g)
    phases = r.diagonal() / np.abs(r.diagonal())
    return q * phases


def random_ket_amps(d, rng):
    a = rng.normal(size=d) + 1j * rng.normal(size=d)
    return a / np.linalg.norm(a)


def random_density_mat(d, rng, rank=None):
    """Trace-one PSD matrix from a Ginibre factor of the given rank."""
    k = d if rank is None else rank
    g = rng.normal(size=(d, k)) + 1j * rng.normal(size=(d, k))
    m = g @ g.conj().T
    return m / m.diagonal().real.sum()


def random_probabilities(d, rng):
    p = rng.dirichlet(np.ones(d))
    return p / p.sum()
