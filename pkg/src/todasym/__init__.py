"""Exact verification engine and simulator for the open Toda chain hierarchy."""

from .ratpoly import Polynomial, Rational, Vars
from .fields import VectorField
from .lattice import (
    PhasePoint,
    flaschka,
    flow_residuals,
    gradient,
    hamiltonian,
    hamiltonian_value,
    jacobi_matrix,
    lax_b_matrix,
    symbolic_lax,
    toda_rhs,
)
from .poisson import (
    PoissonTensor,
    ThreeTensor,
    hamiltonian_field,
    lie_derivative,
    poisson_bracket,
    schouten_self,
)
from .hierarchy import chi, chi_ladder, equivalent_mod_chi, master_field, poisson_tensor
from .symmetry import (
    SymmetryCandidate,
    DeterminingResidual,
    bracket_relation_suite,
    build_Y,
    candidate_scaling,
    candidate_shift,
    candidate_time_translation,
    candidate_time_translation_evolutionary,
    determining_residuals,
    evolutionary_defect,
    total_derivative,
    verify_theorem,
)
from .dynamics import (
    DriftReport,
    Trajectory,
    drift_report,
    integrate,
    order_of_accuracy_ratio,
    spectrum,
    symmetry_map_test,
)
from .verify import VerifyConfig, mutation_smoke, run_verify

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "Rational",
    "Vars",
    "VectorField",
    "PhasePoint",
    "flaschka",
    "flow_residuals",
    "gradient",
    "hamiltonian",
    "hamiltonian_value",
    "jacobi_matrix",
    "lax_b_matrix",
    "symbolic_lax",
    "toda_rhs",
    "PoissonTensor",
    "ThreeTensor",
    "hamiltonian_field",
    "lie_derivative",
    "poisson_bracket",
    "schouten_self",
    "chi",
    "chi_ladder",
    "equivalent_mod_chi",
    "master_field",
    "poisson_tensor",
    "SymmetryCandidate",
    "DeterminingResidual",
    "bracket_relation_suite",
    "build_Y",
    "candidate_scaling",
    "candidate_shift",
    "candidate_time_translation",
    "candidate_time_translation_evolutionary",
    "determining_residuals",
    "evolutionary_defect",
    "total_derivative",
    "verify_theorem",
    "DriftReport",
    "Trajectory",
    "drift_report",
    "integrate",
    "order_of_accuracy_ratio",
    "spectrum",
    "symmetry_map_test",
    "VerifyConfig",
    "mutation_smoke",
    "run_verify",
    "__version__",
]
