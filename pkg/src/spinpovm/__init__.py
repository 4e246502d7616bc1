"""Optimal multi-copy POVMs for spin-1 and spin-3/2 pure-state estimation.

Constructs weighted rank-one POVMs on the symmetric subspace of N qudit
copies: spin-1 sets from 24-cell/600-cell shells (2 to 5 copies) and
spin-3/2 sets from the 40 Penrose-dodecahedron rays or a 60-ray catalog
(2 or 3 copies). Verifies the identities each set must satisfy to machine
precision and demonstrates, by exact computation and by simulation, that
every bundled POVM attains the optimal average fidelity (N+1)/(N+D).
"""

from .estimate import exact_average_fidelity, haar_moment, optimal_fidelity, simulate
from .polytopes import (
    CELL24,
    CELL600,
    GOLDEN,
    cell24_vertices,
    cell600_vertices,
    vertices,
)
from .povm import AGGREGATE_TOL, CONSTRUCTIVE_TOL, Povm, as_state, normalized
from .reports import Check, EstimationReport, VerificationReport
from .sampling import haar_random_state, haar_random_states
from .spin1 import (
    TABLE1,
    AngularCancellationError,
    ShellPolynomial,
    WeightSolveError,
    build_table1_povm,
    povm_from_shells,
    shell_polynomial,
    shell_states,
    shell_sum,
    solve_weights,
    state_from_angles,
    state_from_point,
    table1_shells,
)
from .spin32 import (
    CATALOG_WEIGHTS,
    PENROSE40,
    PHASE,
    SET60,
    BlochDotSpectrum,
    RayCatalog,
    bloch_dot,
    bloch_vector,
    catalog,
    overlap_spectrum,
    penrose_states,
    reduce_n3_to_n2,
    set60_states,
    spin32_povm,
    traceless_hermitian_basis,
    verify_hierarchy_n2,
    verify_hierarchy_n3,
)
from .symmetric import (
    SymmetricVector,
    identity_residual,
    multi_indices,
    sym_dim,
    symmetric_power,
    symmetric_power_matrix,
)
from .verify import verify_completeness, verify_scalar_identity

__version__ = "0.1.0"

__all__ = [
    "AGGREGATE_TOL",
    "AngularCancellationError",
    "BlochDotSpectrum",
    "CATALOG_WEIGHTS",
    "CELL24",
    "CELL600",
    "CONSTRUCTIVE_TOL",
    "Check",
    "EstimationReport",
    "GOLDEN",
    "PENROSE40",
    "PHASE",
    "Povm",
    "RayCatalog",
    "SET60",
    "ShellPolynomial",
    "SymmetricVector",
    "TABLE1",
    "VerificationReport",
    "WeightSolveError",
    "as_state",
    "bloch_dot",
    "bloch_vector",
    "build_table1_povm",
    "catalog",
    "cell24_vertices",
    "cell600_vertices",
    "exact_average_fidelity",
    "haar_moment",
    "haar_random_state",
    "haar_random_states",
    "identity_residual",
    "multi_indices",
    "normalized",
    "optimal_fidelity",
    "overlap_spectrum",
    "penrose_states",
    "povm_from_shells",
    "reduce_n3_to_n2",
    "set60_states",
    "shell_polynomial",
    "shell_states",
    "shell_sum",
    "simulate",
    "solve_weights",
    "spin32_povm",
    "state_from_angles",
    "state_from_point",
    "sym_dim",
    "symmetric_power",
    "symmetric_power_matrix",
    "table1_shells",
    "traceless_hermitian_basis",
    "verify_completeness",
    "verify_hierarchy_n2",
    "verify_hierarchy_n3",
    "verify_scalar_identity",
    "vertices",
]
