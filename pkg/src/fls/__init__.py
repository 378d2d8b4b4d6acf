"""Fuzzy linear systems with a crisp matrix and a fuzzy right-hand side."""

from .fuzzy_core import (
    DomainError,
    ParametricFuzzyNumber,
    TriangularFuzzyNumber,
    add,
    alpha_cut,
    crisp_part,
    membership,
    parametric_alpha_cut,
    parametric_membership,
    scale,
    subtract,
    uncertainty,
)
from .linalg import DPFactorization, SingularMatrixError, dp_decompose, invert, mat_vec
from .solver import (
    CutParallelepiped,
    FuzzyLinearSystem,
    ParallelepipedSolution,
    PossibilityResult,
    ResourceLimitError,
    extract_fuzzy_vector,
    solve,
    solve_parametric,
    vertices,
)

__version__ = "0.1.0"
