"""Dense square matrices: inversion and the generalized-permutation test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PIVOT_RTOL = 1e-12
ZERO_RTOL = 1e-12


class SingularMatrixError(ArithmeticError):
    def __init__(self, pivot_index: int, message: str | None = None):
        self.pivot_index = pivot_index
        super().__init__(message or f"matrix is singular (pivot {pivot_index})")


def as_matrix(A) -> np.ndarray:
    A = np.array(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return A


def invert(A) -> np.ndarray:
    """Gauss-Jordan inversion with partial pivoting.

    A pivot with ``|p| <= 1e-12 * max|A|`` is treated as zero and raises
    :class:`SingularMatrixError` carrying the column index of the pivot.
    """
    A = as_matrix(A)
    n = A.shape[0]
    scale = np.abs(A).max()
    if scale == 0.0:
        raise SingularMatrixError(0)
    tol = PIVOT_RTOL * scale

    aug = np.hstack([A, np.eye(n)])
    for k in range(n):
        p = k + int(np.argmax(np.abs(aug[k:, k])))
        if abs(aug[p, k]) <= tol:
            raise SingularMatrixError(k)
        if p != k:
            aug[[k, p]] = aug[[p, k]]
        aug[k] /= aug[k, k]
        for i in range(n):
            if i != k and aug[i, k] != 0.0:
                aug[i] -= aug[i, k] * aug[k]
    return aug[:, n:].copy()


def mat_vec(A, x) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    x = np.asarray(x, dtype=float)
    if x.ndim != 1 or A.shape[1] != x.shape[0]:
        raise ValueError(f"dimension mismatch: matrix {A.shape} vs vector {x.shape}")
    return A @ x


@dataclass(frozen=True)
class DPFactorization:
    """``A = D P`` with ``D = diag(diag)`` and ``P[i, perm[i]] = 1``.

    ``perm`` is 0-based.
    """

    diag: tuple[float, ...]
    perm: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.diag)

    def permutation_matrix(self) -> np.ndarray:
        P = np.zeros((self.n, self.n))
        P[np.arange(self.n), self.perm] = 1.0
        return P

    def diagonal_matrix(self) -> np.ndarray:
        return np.diag(self.diag)

    def matrix(self) -> np.ndarray:
        M = np.zeros((self.n, self.n))
        M[np.arange(self.n), self.perm] = self.diag
        return M

    def apply(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.asarray(self.diag) * x[list(self.perm)]


def dp_decompose(A) -> DPFactorization | None:
    """Factor ``A`` as diagonal times permutation, or return None.

    Entries with ``|a| <= 1e-12 * max|A|`` count as zero. The factorization
    exists exactly when every row and column has a single nonzero.
    """
    A = as_matrix(A)
    n = A.shape[0]
    scale = np.abs(A).max()
    if scale == 0.0:
        return None
    nonzero = np.abs(A) > ZERO_RTOL * scale
    if not (np.all(nonzero.sum(axis=1) == 1) and np.all(nonzero.sum(axis=0) == 1)):
        return None
    perm = tuple(int(np.flatnonzero(nonzero[i])[0]) for i in range(n))
    diag = tuple(float(A[i, perm[i]]) for i in range(n))
    return DPFactorization(diag, perm)
