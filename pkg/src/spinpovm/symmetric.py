"""Symmetric-subspace embedding for N identical copies of a qudit.

N copies of a pure state live in the maximally symmetric subspace of the
N-qudit space, whose dimension is C(N+D-1, D-1). Working directly in an
occupation-number basis of that subspace keeps D=3, N=5 at dimension 21
instead of 3^5 = 243. The coordinate of |psi>^(x N) at occupation
(n_1..n_D) is sqrt(N!/(n_1!..n_D!)) * prod_j a_j^n_j, so overlaps obey
<phi^N|psi^N> = <phi|psi>^N by the multinomial theorem.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .povm import as_state


def sym_dim(dim: int, copies: int) -> int:
    """Dimension of the symmetric subspace: (N+D-1)!/(N!(D-1)!)."""
    if dim < 2:
        raise ValueError(f"dim must be >= 2, got {dim}")
    if copies < 1:
        raise ValueError(f"copies must be >= 1, got {copies}")
    return math.comb(copies + dim - 1, dim - 1)


def _occupations(dim: int, total: int):
    if dim == 1:
        return ((total,),)
    out = []
    for first in range(total, -1, -1):
        for rest in _occupations(dim - 1, total - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def multi_indices(dim: int, copies: int) -> tuple:
    """All occupation tuples summing to `copies`, in decreasing lexicographic order."""
    sym_dim(dim, copies)  # argument validation
    return _occupations(dim, copies)


@lru_cache(maxsize=None)
def _embedding_arrays(dim: int, copies: int):
    """(occupations matrix, multinomial sqrt coefficients) for the basis."""
    occ = np.array(multi_indices(dim, copies), dtype=int)
    fact_n = math.factorial(copies)
    coeff = np.array([
        math.sqrt(fact_n / math.prod(math.factorial(int(n)) for n in row))
        for row in occ
    ])
    occ.setflags(write=False)
    coeff.setflags(write=False)
    return occ, coeff


@dataclass(frozen=True)
class SymmetricVector:
    """Coordinates of an N-copy state in the occupation-number basis."""

    coords: np.ndarray
    copies: int
    dim: int

    def __post_init__(self):
        coords = np.array(self.coords, dtype=complex)
        if coords.ndim != 1:
            raise ValueError("coords must be a vector")
        if not np.all(np.isfinite(coords)):
            raise ValueError("coords contain non-finite entries")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)


def symmetric_power_matrix(states: np.ndarray, copies: int) -> np.ndarray:
    """Embed unit rows of `states` (k, D) as rows of a (k, sym_dim) matrix."""
    states = np.asarray(states, dtype=complex)
    if states.ndim == 1:
        states = states[None, :]
    occ, coeff = _embedding_arrays(states.shape[1], copies)
    # (k, basis, D) intermediate stays small: largest case is 720 x 21 x 3
    powers = states[:, None, :] ** occ[None, :, :]
    return coeff[None, :] * np.prod(powers, axis=2)


def symmetric_power(state, copies: int) -> SymmetricVector:
    """Symmetric tensor power |psi>^(x copies) of a normalized pure state."""
    arr = as_state(state)
    coords = symmetric_power_matrix(arr, copies)[0]
    return SymmetricVector(coords=coords, copies=copies, dim=arr.size)


def _frobenius_identity_residual(weights: np.ndarray, vectors: np.ndarray) -> float:
    """Frobenius norm of sum_r w_r v_r v_r^dag - I for unit rows v_r."""
    acc = vectors.T @ (weights[:, None] * vectors.conj())
    acc -= np.eye(vectors.shape[1])
    return float(np.linalg.norm(acc))


def identity_residual(terms) -> float:
    """Frobenius distance of sum_r c_r v_r v_r^dag from the identity.

    `terms` is a sequence of (weight, SymmetricVector) sharing one
    (copies, dim); mixtures are rejected.
    """
    terms = list(terms)
    if not terms:
        raise ValueError("no terms given")
    copies = terms[0][1].copies
    dim = terms[0][1].dim
    for _, vec in terms:
        if (vec.copies, vec.dim) != (copies, dim):
            raise ValueError(
                f"mixed terms: expected (copies, dim) = ({copies}, {dim}), "
                f"got ({vec.copies}, {vec.dim})"
            )
    weights = np.array([float(w) for w, _ in terms])
    if not np.all(np.isfinite(weights)) or np.any(weights < 0):
        raise ValueError("weights must be finite and non-negative")
    vectors = np.array([vec.coords for _, vec in terms])
    return _frobenius_identity_residual(weights, vectors)
