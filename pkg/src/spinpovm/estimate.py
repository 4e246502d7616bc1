"""Estimation-fidelity statistics: Monte Carlo simulation and the exact average.

The protocol: measure the N copies with the POVM, then guess that the
input was the state attached to the observed outcome. For a Haar-uniform
input the average fidelity of any POVM resolving the identity equals
(N+1)/(N+D), the optimal value.
"""

import math

import numpy as np

from .povm import AGGREGATE_TOL, Povm
from .reports import EstimationReport
from .sampling import haar_random_states
from .verify import scalar_identity_values, verify_completeness, _povm_id

_CHUNK = 4096


def optimal_fidelity(copies: int, dim: int) -> float:
    """Upper bound (N+1)/(N+D) on the average estimation fidelity."""
    if copies < 1 or dim < 2:
        raise ValueError(f"need copies >= 1 and dim >= 2, got ({copies}, {dim})")
    return (copies + 1) / (copies + dim)


def haar_moment(dim: int, power: int) -> float:
    """Haar average of |<phi|psi>|^(2M) for fixed phi: M!(D-1)!/(M+D-1)!."""
    if dim < 2 or power < 0:
        raise ValueError(f"need dim >= 2 and power >= 0, got ({dim}, {power})")
    return math.factorial(power) * math.factorial(dim - 1) / math.factorial(power + dim - 1)


def exact_average_fidelity(povm: Povm) -> float:
    """Exact Haar-average fidelity of the guess-the-outcome-state protocol.

    Equals sum_r c_r * (N+1)!(D-1)!/(N+D)!, which reduces to the optimal
    (N+1)/(N+D) exactly when the weights sum to the symmetric-subspace
    dimension. Computed from the weight sum, so a broken POVM shows a
    visibly sub-optimal value; completeness is the caller's precondition.
    """
    return povm.weight_sum * haar_moment(povm.dim, povm.copies + 1)


def simulate(povm: Povm, trials: int, rng: np.random.Generator,
             keep_samples: bool = False) -> EstimationReport:
    """Monte Carlo run of the estimation protocol over Haar-random inputs.

    Per trial: draw |psi>, form outcome probabilities
    p_r = c_r |<psi_r|psi>|^(2N) (these sum to 1 for a verified POVM),
    sample an outcome by inverse CDF over the prefix sums, and record the
    fidelity |<psi_r|psi>|^2 of the guess. The POVM is verified first and
    rejected if it fails completeness. With `keep_samples` the per-trial
    fidelities are attached to the report.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    completeness = verify_completeness(povm)
    if not completeness.passed:
        raise ValueError(
            "POVM fails completeness (worst residual "
            f"{completeness.worst:.3e}); outcome probabilities would not normalize")

    k = povm.size
    fidelities = np.empty(trials)
    done = 0
    while done < trials:
        batch = min(trials - done, _CHUNK)
        psis = haar_random_states(povm.dim, batch, rng)
        overlaps_sq = np.abs(psis.conj() @ povm.states.T) ** 2
        probs = povm.weights * overlaps_sq ** povm.copies
        totals = probs.sum(axis=1)
        if float(np.max(np.abs(totals - 1.0))) > AGGREGATE_TOL:
            raise RuntimeError("outcome probabilities failed to normalize")
        u = rng.random(batch)
        cdf = np.cumsum(probs, axis=1)
        # clamp guards cumulative rounding at the top of the prefix sums
        picks = np.minimum(np.sum(cdf < u[:, None], axis=1), k - 1)
        fidelities[done:done + batch] = overlaps_sq[np.arange(batch), picks]
        done += batch

    mean = float(np.mean(fidelities))
    std_error = float(np.std(fidelities, ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    return EstimationReport(
        povm_id=_povm_id(povm),
        trials=trials,
        mean_fidelity=mean,
        std_error=std_error,
        exact_fidelity=exact_average_fidelity(povm),
        optimal_bound=optimal_fidelity(povm.copies, povm.dim),
        samples=fidelities if keep_samples else None,
    )


def probability_normalization(povm: Povm, psis: np.ndarray) -> float:
    """Worst |sum_r p_r - 1| over probe states; diagnostic for simulate's inputs."""
    return float(np.max(np.abs(scalar_identity_values(povm, psis) - 1.0)))
