"""Triangular and parametric fuzzy numbers.

A triangular number ``(a, c, b)`` rises linearly from 0 at ``a`` to 1 at ``c``
and falls back to 0 at ``b``. A parametric number is given by sampled
boundary functions ``f_L(alpha)`` and ``f_R(alpha)`` and is evaluated by
linear interpolation between samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

TOL = 1e-9


class DomainError(ValueError):
    """Argument outside the domain of an operation (e.g. alpha not in [0, 1])."""


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    a: float
    c: float
    b: float

    def __post_init__(self):
        for name in ("a", "c", "b"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise DomainError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if not self.a <= self.c <= self.b:
            raise DomainError(f"need a <= c <= b, got ({self.a}, {self.c}, {self.b})")

    @classmethod
    def crisp(cls, value: float) -> TriangularFuzzyNumber:
        return cls(value, value, value)

    def astuple(self) -> tuple[float, float, float]:
        return (self.a, self.c, self.b)

    def __iter__(self):
        return iter(self.astuple())

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return subtract(self, other)

    def __rmul__(self, k):
        return scale(k, self)

    def __repr__(self):
        return f"TriangularFuzzyNumber({self.a!r}, {self.c!r}, {self.b!r})"


def membership(u: TriangularFuzzyNumber, x: float) -> float:
    """Membership degree of ``x`` in ``u``.

    A degenerate side (``a == c`` or ``c == b``) is vertical: the degree
    jumps from 0 to 1 at the shared point.
    """
    x = float(x)
    if x < u.a or x > u.b:
        return 0.0
    if x < u.c:
        return (x - u.a) / (u.c - u.a)
    if x > u.c:
        return (u.b - x) / (u.b - u.c)
    return 1.0


def alpha_cut(u: TriangularFuzzyNumber, alpha: float) -> tuple[float, float]:
    alpha = _check_alpha(alpha)
    if alpha == 1.0:
        return (u.c, u.c)
    return (u.a + alpha * (u.c - u.a), u.b + alpha * (u.c - u.b))


def add(u: TriangularFuzzyNumber, v: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    return TriangularFuzzyNumber(u.a + v.a, u.c + v.c, u.b + v.b)


def scale(k: float, u: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    """Multiply by a real; a negative factor swaps the endpoints."""
    k = float(k)
    if k >= 0:
        return TriangularFuzzyNumber(k * u.a, k * u.c, k * u.b)
    return TriangularFuzzyNumber(k * u.b, k * u.c, k * u.a)


def subtract(u: TriangularFuzzyNumber, v: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    # u + (-1)v; note u - u is not crisp zero.
    return add(u, scale(-1.0, v))


def crisp_part(u: TriangularFuzzyNumber) -> float:
    return u.c


def uncertainty(u: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    return TriangularFuzzyNumber(u.a - u.c, 0.0, u.b - u.c)


@dataclass(frozen=True)
class ParametricFuzzyNumber:
    """Fuzzy number given by samples of its alpha-cut boundaries.

    ``alphas`` must start at 0, end at 1 and increase strictly. ``left`` is
    non-decreasing and ``right`` non-increasing along ``alphas``, and the
    core ``[left[-1], right[-1]]`` is non-empty.
    """

    alphas: tuple[float, ...]
    left: tuple[float, ...]
    right: tuple[float, ...]

    def __post_init__(self):
        alphas = tuple(float(v) for v in self.alphas)
        left = tuple(float(v) for v in self.left)
        right = tuple(float(v) for v in self.right)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

        if len(alphas) < 2:
            raise DomainError("need at least two alpha samples")
        if len(left) != len(alphas) or len(right) != len(alphas):
            raise DomainError("left and right must have one value per alpha")
        if not all(np.isfinite(alphas + left + right)):
            raise DomainError("samples must be finite")
        if alphas[0] != 0.0 or alphas[-1] != 1.0:
            raise DomainError("alphas must start at 0 and end at 1")
        if any(a1 >= a2 for a1, a2 in zip(alphas, alphas[1:])):
            raise DomainError("alphas must be strictly increasing")
        if any(l1 > l2 for l1, l2 in zip(left, left[1:])):
            raise DomainError("left boundary must be non-decreasing in alpha")
        if any(r1 < r2 for r1, r2 in zip(right, right[1:])):
            raise DomainError("right boundary must be non-increasing in alpha")
        if left[-1] > right[-1]:
            raise DomainError("core is empty: left(1) > right(1)")

    @classmethod
    def from_triangular(cls, u: TriangularFuzzyNumber) -> ParametricFuzzyNumber:
        return cls((0.0, 1.0), (u.a, u.c), (u.b, u.c))

    @property
    def core(self) -> tuple[float, float]:
        return (self.left[-1], self.right[-1])

    @property
    def support(self) -> tuple[float, float]:
        return (self.left[0], self.right[0])


def parametric_alpha_cut(u: ParametricFuzzyNumber, alpha: float) -> tuple[float, float]:
    alpha = _check_alpha(alpha)
    lo = float(np.interp(alpha, u.alphas, u.left))
    hi = float(np.interp(alpha, u.alphas, u.right))
    return (lo, hi)


def _sup_inverse(alphas, values, x):
    # values monotone non-decreasing; largest alpha with f(alpha) == x.
    for k in range(len(alphas) - 2, -1, -1):
        v0, v1 = values[k], values[k + 1]
        if v0 <= x <= v1:
            if v1 == v0:
                return alphas[k + 1]
            t = (x - v0) / (v1 - v0)
            return alphas[k] + t * (alphas[k + 1] - alphas[k])
    raise DomainError(f"{x!r} is outside the sampled range")


def parametric_membership(u: ParametricFuzzyNumber, x: float) -> float:
    """Membership of ``x``: 1 on the core, inverse boundary value on the flanks.

    Flat stretches of a boundary resolve to the largest alpha attaining
    ``x``.
    """
    x = float(x)
    lo0, hi0 = u.support
    lo1, hi1 = u.core
    if x < lo0 or x > hi0:
        return 0.0
    if lo1 <= x <= hi1:
        return 1.0
    if x < lo1:
        return _sup_inverse(u.alphas, u.left, x)
    # right boundary is non-increasing; flip sign to reuse the ascending search
    return _sup_inverse(u.alphas, [-v for v in u.right], -x)


def fuzzy_membership(u, x: float) -> float:
    """Membership for either representation."""
    if isinstance(u, ParametricFuzzyNumber):
        return parametric_membership(u, x)
    return membership(u, x)


def fuzzy_alpha_cut(u, alpha: float) -> tuple[float, float]:
    if isinstance(u, ParametricFuzzyNumber):
        return parametric_alpha_cut(u, alpha)
    return alpha_cut(u, alpha)


def fuzzy_support(u) -> tuple[float, float]:
    if isinstance(u, ParametricFuzzyNumber):
        return u.support
    return (u.a, u.b)


def as_triangular(values: Sequence[float]) -> TriangularFuzzyNumber:
    a, c, b = values
    return TriangularFuzzyNumber(a, c, b)
