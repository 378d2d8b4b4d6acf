"""Brute-force references for testing the solver.

No possibility or cut here is computed through :mod:`fls.solver` or the
hand-written inverse. Points
are mapped with ``numpy.linalg.solve`` and possibilities come straight
from the definition ``min_i mu_i((A x)_i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .fuzzy_core import (
    TOL,
    DomainError,
    TriangularFuzzyNumber,
    fuzzy_alpha_cut,
    fuzzy_membership,
    fuzzy_support,
)


@dataclass(frozen=True)
class SampledCut:
    points: np.ndarray
    alpha: float


def direct_possibility(sys, x, tol: float = TOL) -> float | None:
    """Possibility that ``x`` solves ``sys``, or None if it does not.

    Points within ``tol`` outside a support are treated as lying on its
    boundary.
    """
    A = np.asarray(sys.matrix, dtype=float)
    x = np.asarray(x, dtype=float)
    if x.shape != (A.shape[0],):
        raise ValueError(f"dimension mismatch: expected length {A.shape[0]}, got shape {x.shape}")
    w = A @ x
    levels = []
    for f, wi in zip(sys.rhs, w):
        lo, hi = fuzzy_support(f)
        if wi < lo - tol or wi > hi + tol:
            return None
        levels.append(fuzzy_membership(f, min(max(wi, lo), hi)))
    return min(levels)


def sample_prism(sys, alpha: float, grid: int = 5) -> SampledCut:
    """Uniform ``grid**n`` sample of the alpha-cut, pulled back through ``A``."""
    if grid < 2:
        raise DomainError("grid must be at least 2")
    A = np.asarray(sys.matrix, dtype=float)
    axes = [np.linspace(*fuzzy_alpha_cut(f, alpha), grid) for f in sys.rhs]
    rhs = np.array(list(itertools.product(*axes)))
    points = np.linalg.solve(A, rhs.T).T
    return SampledCut(points, float(alpha))


def hausdorff_sampled(a, b) -> float:
    pa = np.atleast_2d(np.asarray(getattr(a, "points", a), dtype=float))
    pb = np.atleast_2d(np.asarray(getattr(b, "points", b), dtype=float))
    if pa.size == 0 or pb.size == 0:
        raise DomainError("Hausdorff distance of an empty set")
    if pa.shape[1] != pb.shape[1]:
        raise ValueError("point sets differ in dimension")
    d = np.linalg.norm(pa[:, None, :] - pb[None, :, :], axis=-1)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def random_matrix(rng: np.random.Generator, n: int, min_det: float = 0.1) -> np.ndarray:
    """Uniform entries in [-5, 5], resampled until ``|det| >= min_det``."""
    while True:
        A = rng.uniform(-5.0, 5.0, size=(n, n))
        if abs(np.linalg.det(A)) >= min_det:
            return A


def random_gp_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random generalized permutation matrix with entries bounded away from 0."""
    perm = rng.permutation(n)
    diag = rng.uniform(0.5, 5.0, size=n) * rng.choice([-1.0, 1.0], size=n)
    A = np.zeros((n, n))
    A[np.arange(n), perm] = diag
    return A


def random_rhs(rng: np.random.Generator, n: int, min_width: float = 0.1) -> list[TriangularFuzzyNumber]:
    m = rng.uniform(-5.0, 5.0, size=n)
    left = rng.uniform(min_width, 3.0, size=n)
    right = rng.uniform(min_width, 3.0, size=n)
    return [TriangularFuzzyNumber(mi - li, mi, mi + ri) for mi, li, ri in zip(m, left, right)]


def random_system(rng: np.random.Generator, n: int, matrix=None):
    from .solver import FuzzyLinearSystem

    A = random_matrix(rng, n) if matrix is None else matrix
    return FuzzyLinearSystem(A, random_rhs(rng, n))
