"""Shared fixtures: species, seeded RNG, random density matrices."""

from __future__ import annotations

import numpy as np
import pytest

from latticedec import DensityMatrix, species_rb87


@pytest.fixture(scope="session")
def rb87():
    return species_rb87()


@pytest.fixture
def rng():
    return np.random.default_rng(20260814)


@pytest.fixture
def random_rho(rng):
    """Factory for random full-rank density matrices."""

    def make(n_atoms: int) -> DensityMatrix:
        dim = 1 << n_atoms
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        m = a @ a.conj().T + 1e-3 * np.eye(dim)
        m /= np.trace(m).real
        # Exact hermitization guards against roundoff in the a@a.H product.
        m = 0.5 * (m + m.conj().T)
        return DensityMatrix(n_atoms, m)

    return make
