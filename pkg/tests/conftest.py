import numpy as np
import pytest

from opucsum import make_explicit


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_sequence(rng, n, max_abs=0.8):
    """Uniform complex entries in a disk of radius max_abs."""
    radii = max_abs * np.sqrt(rng.random(n))
    angles = 2.0 * np.pi * rng.random(n)
    return make_explicit(list(radii * np.exp(1j * angles)))


@pytest.fixture
def seq_factory(rng):
    def make(n=None, max_abs=0.8):
        if n is None:
            n = int(rng.integers(1, 7))
        return random_sequence(rng, n, max_abs)

    return make
