"""Spin-1 (D = 3) POVMs built from polytope shells.

A spin-1 pure state can be written, up to phase, as

    (sin(theta) (x1 + i x2), sin(theta) (x3 + i x4), cos(theta)),

with (x1..x4) on the unit sphere in R^4 and theta in [0, pi/2]. A "shell"
combines one theta with every vertex of a 24-cell or 600-cell; those
vertex sets make the k-shell sum sum_r c_r |<psi|psi_r>|^(2N) collapse to
a polynomial in t = cos^2(theta), independent of the remaining angular
variables. Choosing the weights c_r so the polynomial is identically 1
turns the shells into a POVM that is optimal for estimating an unknown
state from N copies.
"""

import math
from dataclasses import dataclass

import numpy as np

from .polytopes import CELL24, CELL600, vertices
from .povm import AGGREGATE_TOL, CONSTRUCTIVE_TOL, Povm

_POLE = np.array([0.0, 0.0, 1.0], dtype=complex)

# Reference angular variables for polynomial extraction; any triple works
# once the angular dependence cancels, and the cancellation is verified
# separately against random triples.
_REF_ANGLES = (0.37, 1.13, 2.41)
_INDEPENDENCE_SEED = 691803
_INDEPENDENCE_TRIPLES = 20


class AngularCancellationError(ValueError):
    """The shell sum retains angular dependence: unsupported (polytope, copies)."""

    def __init__(self, polytope: str, copies: int, deviation: float):
        self.polytope = polytope
        self.copies = copies
        self.deviation = deviation
        super().__init__(
            f"shell sum over the {polytope} is not a function of theta alone for "
            f"{copies} copies (angular deviation {deviation:.3e})"
        )


class WeightSolveError(ValueError):
    """No admissible weights make the shell polynomial identically one."""

    def __init__(self, message: str, residual: float, weights: np.ndarray):
        self.residual = residual
        self.weights = weights
        super().__init__(message)


def state_from_angles(theta: float, phi: float, chi1: float, chi2: float) -> np.ndarray:
    """Spin-1 state (e^(i chi1) sin t cos p, e^(i chi2) sin t sin p, cos t)."""
    st = math.sin(theta)
    return np.array([
        np.exp(1j * chi1) * st * math.cos(phi),
        np.exp(1j * chi2) * st * math.sin(phi),
        math.cos(theta),
    ])


def state_from_point(theta: float, v) -> np.ndarray:
    """Spin-1 state from an angle and a unit point on the sphere in R^4.

    Returns (sin(theta)(x1 + i x2), sin(theta)(x3 + i x4), cos(theta)),
    which is automatically normalized.
    """
    v = np.asarray(v, dtype=float)
    if v.shape != (4,):
        raise ValueError(f"expected a point in R^4, got shape {v.shape}")
    if abs(float(v @ v) - 1.0) > CONSTRUCTIVE_TOL:
        raise ValueError("point is not on the unit sphere")
    if not 0.0 <= theta <= math.pi / 2 + 1e-12:
        raise ValueError(f"theta must lie in [0, pi/2], got {theta}")
    st = math.sin(theta)
    return np.array([
        st * (v[0] + 1j * v[1]),
        st * (v[2] + 1j * v[3]),
        math.cos(theta),
    ])


def shell_states(polytope: str, theta: float) -> np.ndarray:
    """All states of one shell, as rows.

    At theta = 0 every vertex yields the same state (0, 0, 1), so the
    shell degenerates to that single state; it is counted once.
    """
    if theta == 0.0:
        return _POLE[None, :].copy()
    return np.array([state_from_point(theta, v) for v in vertices(polytope)])


@dataclass(frozen=True)
class ShellPolynomial:
    """Shell sum sum_i |<psi|psi_i>|^(2N) as a polynomial in t = cos^2(theta)."""

    polytope: str
    theta: float
    copies: int
    coeffs: np.ndarray  # coeffs[m] multiplies t^m

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=float)
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self.coeffs)


def shell_sum(polytope: str, theta_r: float, copies: int,
              theta: float, phi: float, chi1: float, chi2: float) -> float:
    """Direct evaluation of sum_i |<psi(theta,phi,chi)|psi_i>|^(2N) over a shell."""
    psi = state_from_angles(theta, phi, chi1, chi2)
    overlaps = shell_states(polytope, theta_r) @ psi.conj()
    return float(np.sum(np.abs(overlaps) ** (2 * copies)))


def _cheb_nodes(count: int) -> np.ndarray:
    j = np.arange(count)
    return 0.5 * (1.0 + np.cos(np.pi * (2 * j + 1) / (2 * count)))


def shell_polynomial(polytope: str, theta_r: float, copies: int) -> ShellPolynomial:
    """Extract the shell sum's polynomial coefficients in t = cos^2(theta).

    Evaluates the sum at copies+1 Chebyshev-spaced t values and solves the
    Vandermonde system. Before solving, the independence from the angular
    variables is checked at each node against 20 random angle triples;
    failure raises AngularCancellationError (the 24-cell supports at most
    3 copies, the 600-cell up to 5).
    """
    if copies < 1:
        raise ValueError(f"copies must be >= 1, got {copies}")
    nodes = _cheb_nodes(copies + 1)
    thetas = np.arccos(np.sqrt(nodes))
    states = shell_states(polytope, theta_r)

    def value(theta, angles):
        psi = state_from_angles(theta, *angles)
        return float(np.sum(np.abs(states @ psi.conj()) ** (2 * copies)))

    values = np.array([value(th, _REF_ANGLES) for th in thetas])

    rng = np.random.default_rng(_INDEPENDENCE_SEED)
    worst = 0.0
    for j, th in enumerate(thetas):
        for _ in range(_INDEPENDENCE_TRIPLES):
            angles = (rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi),
                      rng.uniform(0, 2 * math.pi))
            worst = max(worst, abs(value(th, angles) - values[j]))
    if worst > AGGREGATE_TOL:
        raise AngularCancellationError(polytope, copies, worst)

    vander = np.polynomial.polynomial.polyvander(nodes, copies)
    coeffs = np.linalg.solve(vander, values)
    return ShellPolynomial(polytope=polytope, theta=theta_r, copies=copies, coeffs=coeffs)


def solve_weights(polytope: str, angles, copies: int) -> np.ndarray:
    """Weights making the combined shell polynomial identically one.

    Solves sum_r c_r * poly_r(t) = 1 as a linear system on the monomial
    coefficients (constant term 1, all higher terms 0) by least squares.
    Succeeds only if the residual stays below 1e-9 and no weight is
    genuinely negative; tiny negative values (>= -1e-12) are clamped to 0.
    """
    angles = [float(a) for a in angles]
    if not angles:
        raise ValueError("need at least one angle")
    if len(set(angles)) != len(angles):
        raise ValueError(f"angles must be distinct, got {angles}")
    polys = [shell_polynomial(polytope, a, copies) for a in angles]
    coeff_matrix = np.column_stack([p.coeffs for p in polys])  # (copies+1, k)
    target = np.zeros(copies + 1)
    target[0] = 1.0
    weights, *_ = np.linalg.lstsq(coeff_matrix, target, rcond=None)
    residual = float(np.max(np.abs(coeff_matrix @ weights - target)))
    if residual > AGGREGATE_TOL:
        raise WeightSolveError(
            f"no weights cancel the polynomial for angles {angles} on the "
            f"{polytope} with {copies} copies (residual {residual:.3e})",
            residual, weights)
    low = float(np.min(weights))
    if low < -CONSTRUCTIVE_TOL:
        offender = int(np.argmin(weights))
        raise WeightSolveError(
            f"angle set {angles} requires a negative weight "
            f"c_{offender + 1} = {low:.6e} (residual {residual:.3e})",
            residual, weights)
    return np.clip(weights, 0.0, None)


def povm_from_shells(polytope: str, shells, copies: int, provenance: str = "") -> Povm:
    """Assemble a POVM from (theta, weight) shells over one polytope.

    Zero-weight shells contribute nothing and are dropped from the
    element list. Every state of a surviving shell carries that shell's
    weight; antipodal vertices at theta = pi/2 give duplicate rays, which
    are retained as separate elements.
    """
    all_states = []
    all_weights = []
    for theta, weight in shells:
        weight = float(weight)
        if weight < 0:
            raise ValueError(f"shell weight must be non-negative, got {weight}")
        if weight == 0.0:
            continue
        block = shell_states(polytope, float(theta))
        all_states.append(block)
        all_weights.append(np.full(block.shape[0], weight))
    if not all_states:
        raise ValueError("all shells have zero weight")
    return Povm(np.concatenate(all_weights), np.vstack(all_states), copies, provenance)


_SQRT2 = math.sqrt(2.0)

# Bundled optimal spin-1 shell sets: polytope, angles theta_r, weights c_r.
TABLE1 = {
    2: (CELL24,
        (math.pi / 4, math.pi / 2),
        (1 / 6, 1 / 12)),
    3: (CELL24,
        (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2),
        (2 / 27, 1 / 18, 2 / 9, 7 / 108)),
    4: (CELL600,
        (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2),
        (1 / 45, 1 / 60, 1 / 15, 7 / 360)),
    5: (CELL600,
        (math.pi / 6, math.pi / 4, math.pi / 3, math.pi / 2,
         math.pi / 8, 3 * math.pi / 8),
        (2 / 225, 17 / 300, 2 / 75, 29 / 1800,
         (2 - _SQRT2) / 60, (2 + _SQRT2) / 60)),
}


def table1_shells(copies: int):
    """(polytope, [(theta, weight), ...]) for a bundled spin-1 POVM."""
    if copies not in TABLE1:
        raise ValueError(
            f"no bundled spin-1 POVM for {copies} copies; available: {sorted(TABLE1)}")
    polytope, angles, weights = TABLE1[copies]
    return polytope, list(zip(angles, weights))


def build_table1_povm(copies: int) -> Povm:
    """Bundled optimal spin-1 POVM for 2 to 5 copies (48/96/480/720 elements)."""
    polytope, shells = table1_shells(copies)
    return povm_from_shells(polytope, shells, copies, provenance=f"table1-N{copies}")
