"""Shared helpers for the test suite."""

import numpy as np

from statespace.densmat import validate_density
from statespace.randomstates import (
    haar_unitary,
    random_density_mat,
    random_ket_amps,
)


def random_state(d, rng, rank=None):
    return validate_density(random_density_mat(d, rng, rank))


def random_unitary(d, rng):
    return haar_unitary(d, rng)


def random_ket(d, rng):
    from statespace.purestate import PureKet

    return PureKet(dim=d, amps=random_ket_amps(d, rng))


def seeded(seed=20250809):
    return np.random.default_rng(seed)
