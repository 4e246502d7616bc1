"""Haar-uniform pure-state sampling from seeded generators."""

import numpy as np


def haar_random_states(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Draw `count` Haar-uniform pure states as unit rows of a (count, dim) array.

    Each row is a vector of independent standard complex Gaussians,
    normalized; unitary invariance of the Gaussian makes the result
    uniform on the projective space. Deterministic for a fixed generator
    state.
    """
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    # one contiguous row of draws per state, so batching does not change
    # which stream values any given state consumes
    block = rng.standard_normal((count, 2 * dim))
    z = block[:, :dim] + 1j * block[:, dim:]
    z /= np.linalg.norm(z, axis=1, keepdims=True)
    return z


def haar_random_state(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Single Haar-uniform pure state of dimension `dim`."""
    return haar_random_states(dim, 1, rng)[0]
