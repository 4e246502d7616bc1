"""Shared POVM container and the tolerance policy used across the package."""

from dataclasses import dataclass

import numpy as np

# Constructive identities (norms, Hermiticity) hold to near machine precision.
# Aggregate identities summed over hundreds of floating terms get headroom.
CONSTRUCTIVE_TOL = 1e-12
AGGREGATE_TOL = 1e-9


def as_state(vec) -> np.ndarray:
    """Validate a complex amplitude vector: finite entries, unit norm.

    Returns the vector as a fresh complex array. Raises ValueError for
    anything that is not a normalized pure state.
    """
    arr = np.array(vec, dtype=complex)
    if arr.ndim != 1 or arr.size < 2:
        raise ValueError(f"state must be a vector of dimension >= 2, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("state contains non-finite amplitudes")
    sq_norm = float(np.sum(np.abs(arr) ** 2))
    if abs(sq_norm - 1.0) > CONSTRUCTIVE_TOL:
        raise ValueError(f"state is not normalized: |psi|^2 = {sq_norm!r}")
    return arr


def normalized(vec) -> np.ndarray:
    """Normalize an amplitude vector, rejecting zero or non-finite input."""
    arr = np.array(vec, dtype=complex)
    if arr.ndim != 1:
        raise ValueError(f"state must be a vector, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("state contains non-finite amplitudes")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return arr / norm


@dataclass(frozen=True)
class Povm:
    """Weighted rank-one POVM acting on the symmetric subspace of `copies` qudits.

    Element r is the operator weights[r] * |s_r><s_r|^(x copies) with
    |s_r> = states[r]. Resolution of the identity requires the weights to
    sum to the symmetric-subspace dimension; see `verify.verify_completeness`.
    """

    weights: np.ndarray  # (k,) non-negative
    states: np.ndarray   # (k, dim) unit rows
    copies: int
    provenance: str = ""

    def __post_init__(self):
        try:
            weights = np.array(self.weights, dtype=float)
            states = np.array(self.states, dtype=complex)
        except (TypeError, ValueError) as err:
            raise ValueError(f"malformed POVM data: {err}") from None
        if weights.ndim != 1 or states.ndim != 2:
            raise ValueError("weights must be a vector and states a (k, dim) matrix")
        if weights.shape[0] != states.shape[0]:
            raise ValueError(
                f"{weights.shape[0]} weights for {states.shape[0]} states"
            )
        if weights.shape[0] == 0:
            raise ValueError("POVM must have at least one element")
        if states.shape[1] < 2:
            raise ValueError("states must have dimension >= 2")
        if int(self.copies) < 1:
            raise ValueError(f"copies must be >= 1, got {self.copies}")
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise ValueError("weights must be finite and non-negative")
        if not np.all(np.isfinite(states)):
            raise ValueError("states contain non-finite amplitudes")
        sq_norms = np.sum(np.abs(states) ** 2, axis=1)
        worst = float(np.max(np.abs(sq_norms - 1.0)))
        if worst > CONSTRUCTIVE_TOL:
            raise ValueError(f"states are not normalized (worst |psi|^2 error {worst:.3e})")
        weights.setflags(write=False)
        states.setflags(write=False)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "copies", int(self.copies))

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    @property
    def size(self) -> int:
        return self.states.shape[0]

    @property
    def spin(self) -> float:
        """Spin value J with dim = 2J + 1."""
        return (self.dim - 1) / 2

    @property
    def weight_sum(self) -> float:
        return float(np.sum(self.weights))

    def scaled(self, factor: float, provenance: str = "") -> "Povm":
        """Same states with every weight multiplied by `factor`."""
        return Povm(self.weights * factor, self.states, self.copies,
                    provenance or self.provenance)
