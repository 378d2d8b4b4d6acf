"""Parallelepiped solution of fuzzy linear systems ``A X = B``.

The matrix ``A`` is crisp and square, and ``B`` is a vector of fuzzy
numbers. The solution is the fuzzy set of real vectors
``x_cr + A^-1 Pi``, where ``Pi`` is the box of right-hand-side
uncertainties. A vector ``x`` solves the system with possibility equal to
the possibility of ``A x`` in the right-hand-side box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fuzzy_core import (
    TOL,
    DomainError,
    ParametricFuzzyNumber,
    TriangularFuzzyNumber,
    _check_alpha,
    add,
    parametric_alpha_cut,
    parametric_membership,
    scale,
)
from .linalg import as_matrix, dp_decompose, invert, mat_vec

MAX_VERTEX_DIM = 20


class ResourceLimitError(RuntimeError):
    pass


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FuzzyLinearSystem:
    matrix: np.ndarray
    rhs: tuple
    b_cr_override: tuple[float, ...] | None = None

    def __post_init__(self):
        A = as_matrix(self.matrix)
        A.setflags(write=False)
        object.__setattr__(self, "matrix", A)
        rhs = tuple(self.rhs)
        object.__setattr__(self, "rhs", rhs)
        if len(rhs) != A.shape[0]:
            raise ValueError(
                f"dimension mismatch: {A.shape[0]}x{A.shape[0]} matrix with {len(rhs)} rhs entries"
            )
        kinds = {type(f) for f in rhs}
        if not kinds <= {TriangularFuzzyNumber, ParametricFuzzyNumber} or len(kinds) != 1:
            raise ValueError("rhs must be all triangular or all parametric fuzzy numbers")
        if self.b_cr_override is not None:
            if not self.is_parametric:
                raise ValueError("b_cr_override applies to parametric systems only")
            b = tuple(float(v) for v in self.b_cr_override)
            if len(b) != len(rhs):
                raise ValueError("b_cr_override must have one entry per equation")
            for i, (bi, f) in enumerate(zip(b, rhs)):
                lo, hi = f.core
                if not lo - TOL <= bi <= hi + TOL:
                    raise ValueError(f"b_cr_override[{i}]={bi} lies outside the core [{lo}, {hi}]")
            object.__setattr__(self, "b_cr_override", b)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def is_parametric(self) -> bool:
        return isinstance(self.rhs[0], ParametricFuzzyNumber)

    def to_parametric(self) -> FuzzyLinearSystem:
        if self.is_parametric:
            return self
        return FuzzyLinearSystem(self.matrix, [ParametricFuzzyNumber.from_triangular(f) for f in self.rhs])


@dataclass(frozen=True)
class CutParallelepiped:
    """The set ``{x_cr + frame @ c : lower <= c <= upper}``.

    Column ``i`` of ``frame`` is ``A^-1 e_i``. For parametric systems the
    intervals need not contain 0.
    """

    x_cr: np.ndarray
    frame: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    alpha: float

    @property
    def n(self) -> int:
        return len(self.x_cr)

    @property
    def columns(self) -> tuple[np.ndarray, ...]:
        return tuple(self.frame[:, i] for i in range(self.n))

    def edge_vectors(self) -> np.ndarray:
        """Edge directions as columns: ``frame[:, i] * (upper[i] - lower[i])``."""
        return self.frame * (self.upper - self.lower)

    def vertices(self) -> np.ndarray:
        return vertices(self)

    def volume(self) -> float:
        return float(abs(np.linalg.det(self.frame)) * np.prod(self.upper - self.lower))

    def is_axis_aligned(self, tol: float = TOL) -> bool:
        """True when every non-degenerate edge is parallel to a coordinate axis."""
        for edge in self.edge_vectors().T:
            norm = np.abs(edge).max()
            if norm == 0.0:
                continue
            if np.count_nonzero(np.abs(edge) > tol * norm) != 1:
                return False
        return True


@dataclass(frozen=True)
class ParallelepipedSolution:
    matrix: np.ndarray
    inverse: np.ndarray
    b_cr: np.ndarray
    x_cr: np.ndarray
    lower: np.ndarray
    upper: np.ndarray

    @property
    def n(self) -> int:
        return len(self.x_cr)

    @property
    def columns(self) -> tuple[np.ndarray, ...]:
        return tuple(self.inverse[:, i] for i in range(self.n))


@dataclass(frozen=True)
class PossibilityResult:
    """Outcome of a membership query.

    ``possibility`` is None when the vector is not a solution.
    ``coefficients`` holds the per-equation decomposition coefficients
    (triangular path) or per-equation possibilities (parametric path).
    """

    possibility: float | None
    coefficients: tuple[float, ...] = field(default=(), compare=False)

    @property
    def is_solution(self) -> bool:
        return self.possibility is not None

    def __str__(self):
        if self.possibility is None:
            return "not-a-solution"
        return f"solution possibility={self.possibility:.12g}"


def solve(sys: FuzzyLinearSystem) -> ParallelepipedSolution:
    if sys.is_parametric:
        raise ValueError("solve needs a triangular right-hand side; use solve_parametric")
    A_inv = invert(sys.matrix)
    b_cr = np.array([f.c for f in sys.rhs])
    lower = np.array([f.a - f.c for f in sys.rhs])
    upper = np.array([f.b - f.c for f in sys.rhs])
    return ParallelepipedSolution(
        matrix=sys.matrix,
        inverse=_frozen(A_inv),
        b_cr=_frozen(b_cr),
        x_cr=_frozen(A_inv @ b_cr),
        lower=_frozen(lower),
        upper=_frozen(upper),
    )


def _check_point(n: int, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (n,):
        raise ValueError(f"dimension mismatch: expected a vector of length {n}, got shape {x.shape}")
    return x


def decompose(sol: ParallelepipedSolution, x, tol: float = TOL) -> np.ndarray:
    """Nonnegative coefficients of ``A x - b_cr`` over the support vectors.

    A nonzero residual against a zero-width side yields ``inf``.
    """
    x = _check_point(sol.n, x)
    z = mat_vec(sol.matrix, x) - sol.b_cr
    gamma = np.zeros(sol.n)
    for i, zi in enumerate(z):
        if abs(zi) <= tol:
            continue
        bound = sol.upper[i] if zi > 0 else sol.lower[i]
        gamma[i] = np.inf if bound == 0.0 else zi / bound
    return gamma


def membership(sol: ParallelepipedSolution, x, tol: float = TOL) -> PossibilityResult:
    gamma = decompose(sol, x, tol)
    worst = float(gamma.max())
    coefficients = tuple(float(g) for g in gamma)
    if worst > 1.0 + tol:
        return PossibilityResult(None, coefficients)
    return PossibilityResult(min(1.0, max(0.0, 1.0 - worst)), coefficients)


def alpha_cut(sol: ParallelepipedSolution, alpha: float) -> CutParallelepiped:
    alpha = _check_alpha(alpha)
    shrink = 1.0 - alpha
    return CutParallelepiped(
        x_cr=sol.x_cr,
        frame=sol.inverse,
        lower=_frozen(shrink * sol.lower),
        upper=_frozen(shrink * sol.upper),
        alpha=alpha,
    )


def vertices(cut: CutParallelepiped) -> np.ndarray:
    """All ``2**n`` corners, one per row.

    Row ``k`` takes ``upper[i]`` where bit ``i`` of ``k`` is set and
    ``lower[i]`` otherwise.
    """
    n = cut.n
    if n > MAX_VERTEX_DIM:
        raise ResourceLimitError(f"refusing to enumerate 2**{n} vertices (limit n <= {MAX_VERTEX_DIM})")
    bits = (np.arange(2**n)[:, None] >> np.arange(n)) & 1
    coeffs = np.where(bits == 1, cut.upper, cut.lower)
    return cut.x_cr + coeffs @ cut.frame.T


def parametric_b_cr(sys: FuzzyLinearSystem) -> np.ndarray:
    if sys.b_cr_override is not None:
        return np.array(sys.b_cr_override)
    return np.array([(f.left[-1] + f.right[-1]) / 2 for f in sys.rhs])


def solve_parametric(
    sys: FuzzyLinearSystem, alpha: float, b_cr: Sequence[float] | None = None
) -> CutParallelepiped:
    """Alpha-cut of the solution of a system with parametric right-hand side.

    ``b_cr`` defaults to the override stored on the system, else the core
    midpoints. Cuts at different levels are not rescalings of each other.
    """
    alpha = _check_alpha(alpha)
    if not sys.is_parametric:
        sys = sys.to_parametric()
    A_inv = invert(sys.matrix)
    b = parametric_b_cr(sys) if b_cr is None else np.asarray(b_cr, dtype=float)
    cuts = np.array([parametric_alpha_cut(f, alpha) for f in sys.rhs])
    return CutParallelepiped(
        x_cr=_frozen(A_inv @ b),
        frame=_frozen(A_inv),
        lower=_frozen(cuts[:, 0] - b),
        upper=_frozen(cuts[:, 1] - b),
        alpha=alpha,
    )


def membership_parametric(sys: FuzzyLinearSystem, x, tol: float = TOL) -> PossibilityResult:
    if not sys.is_parametric:
        sys = sys.to_parametric()
    invert(sys.matrix)  # singular systems are rejected, as on the solve path
    x = _check_point(sys.n, x)
    k = mat_vec(sys.matrix, x)
    levels = []
    inside = True
    for f, ki in zip(sys.rhs, k):
        lo, hi = f.support
        if ki < lo - tol or ki > hi + tol:
            inside = False
        levels.append(parametric_membership(f, min(max(ki, lo), hi)))
    if not inside:
        return PossibilityResult(None, tuple(levels))
    return PossibilityResult(min(levels), tuple(levels))


def system_cut(sys: FuzzyLinearSystem, alpha: float) -> CutParallelepiped:
    """Alpha-cut for either kind of right-hand side."""
    if sys.is_parametric:
        return solve_parametric(sys, alpha)
    return alpha_cut(solve(sys), alpha)


def system_membership(sys: FuzzyLinearSystem, x, tol: float = TOL) -> PossibilityResult:
    if sys.is_parametric:
        return membership_parametric(sys, x, tol)
    return membership(solve(sys), x, tol)


def fuzzy_mat_vec(A, xs: Sequence[TriangularFuzzyNumber]) -> list[TriangularFuzzyNumber]:
    """Crisp matrix times a vector of triangular numbers, by fuzzy arithmetic."""
    A = np.asarray(A, dtype=float)
    if A.shape[1] != len(xs):
        raise ValueError("dimension mismatch")
    out = []
    for row in A:
        acc = TriangularFuzzyNumber(0.0, 0.0, 0.0)
        for aij, xj in zip(row, xs):
            acc = add(acc, scale(aij, xj))
        out.append(acc)
    return out


def extract_fuzzy_vector(sys: FuzzyLinearSystem) -> list[TriangularFuzzyNumber] | None:
    """Solution as a vector of triangular numbers, when one exists.

    It exists exactly when ``A`` is diagonal times permutation; the system
    then decouples into ``diag[i] * x[perm[i]] = f_i``.
    """
    if sys.is_parametric:
        raise ValueError("extraction is defined for triangular right-hand sides only")
    invert(sys.matrix)
    dp = dp_decompose(sys.matrix)
    if dp is None:
        return None
    out: list[TriangularFuzzyNumber | None] = [None] * sys.n
    for i, (d, j) in enumerate(zip(dp.diag, dp.perm)):
        out[j] = scale(1.0 / d, sys.rhs[i])
    return out


def canonical_order(points) -> np.ndarray:
    """Points sorted lexicographically, for set-wise comparison."""
    points = np.asarray(points, dtype=float)
    return points[np.lexsort(points.T[::-1])]


__all__ = [
    "CutParallelepiped",
    "DomainError",
    "FuzzyLinearSystem",
    "ParallelepipedSolution",
    "PossibilityResult",
    "ResourceLimitError",
    "alpha_cut",
    "canonical_order",
    "decompose",
    "extract_fuzzy_vector",
    "fuzzy_mat_vec",
    "membership",
    "membership_parametric",
    "solve",
    "solve_parametric",
    "system_cut",
    "system_membership",
    "vertices",
]
