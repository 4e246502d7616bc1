"""Resolution-of-identity checks for rank-one POVMs on the symmetric subspace.

Two independent routes are always available: the operator check builds
sum_r c_r v_r v_r^dag from the embedded symmetric vectors and measures its
Frobenius distance from the identity, while the scalar check probes
sum_r c_r |<psi|psi_r>|^(2N) = 1 at Haar-random states without ever
touching the embedding. Agreement of the two guards against bugs in
either path.
"""

import numpy as np

from .povm import AGGREGATE_TOL, Povm
from .reports import Check, VerificationReport
from .sampling import haar_random_states
from .symmetric import _frobenius_identity_residual, sym_dim, symmetric_power_matrix

_CHUNK = 4096


def scalar_identity_values(povm: Povm, psis: np.ndarray) -> np.ndarray:
    """sum_r c_r |<psi|psi_r>|^(2N) for each probe state (row of psis)."""
    overlaps_sq = np.abs(psis.conj() @ povm.states.T) ** 2
    return (overlaps_sq ** povm.copies) @ povm.weights


def verify_completeness(povm: Povm, tolerance: float = AGGREGATE_TOL) -> VerificationReport:
    """Operator check: Frobenius residual against the identity, plus the weight sum.

    The trace of the identity fixes sum_r c_r = C(N+D-1, D-1), so the
    weight sum is reported as its own residual.
    """
    vectors = symmetric_power_matrix(povm.states, povm.copies)
    frobenius = _frobenius_identity_residual(povm.weights, vectors)
    expected_sum = sym_dim(povm.dim, povm.copies)
    checks = (
        Check("completeness-frobenius", frobenius, tolerance),
        Check("weight-sum", abs(povm.weight_sum - expected_sum), tolerance),
    )
    return VerificationReport(_povm_id(povm), checks)


def verify_scalar_identity(povm: Povm, trials: int, rng: np.random.Generator,
                           tolerance: float = AGGREGATE_TOL) -> VerificationReport:
    """Scalar check: worst deviation of the weighted overlap sum from 1.

    Probes `trials` Haar-random states of the POVM's dimension;
    deterministic for a fixed generator state.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    worst = 0.0
    remaining = trials
    while remaining > 0:
        batch = min(remaining, _CHUNK)
        psis = haar_random_states(povm.dim, batch, rng)
        values = scalar_identity_values(povm, psis)
        worst = max(worst, float(np.max(np.abs(values - 1.0))))
        remaining -= batch
    return VerificationReport(
        _povm_id(povm), (Check("scalar-identity", worst, tolerance),))


def _povm_id(povm: Povm) -> str:
    return povm.provenance or f"povm-D{povm.dim}-N{povm.copies}"
