"""Jacobi polynomials with integer parameters, and mode normalization.

Two evaluation routes are provided.  For parameters a, b > -1 the classical
three-term recurrence applies.  For integer parameters at or below -1 the
recurrence coefficients degenerate, so the polynomial is evaluated through
its finite binomial sum

    P_n^{(a,b)}(x) = sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s),

which is a polynomial identity in (a, b) and therefore valid for every
integer parameter pair once C(M, k) is read as the generalized binomial.
Derivatives use the parameter-shift identity

    d/dx P_n^{(a,b)} = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)},

applied recursively for higher orders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .indices import ModeIndex

__all__ = [
    "JacobiParams",
    "jacobi",
    "jacobi_recurrence",
    "jacobi_sum",
    "jacobi_derivative",
    "normalization_constant",
    "comb_general",
]

# Abscissa tolerance: values this far outside [-1, 1] are treated as a
# domain error rather than silently extrapolated.
_X_EPS = 1e-9

# Factorials as exact integers, precomputed far past the supported level
# cap (L <= 30 needs arguments up to 30).
_FACTORIALS = [math.factorial(k) for k in range(65)]


def _factorial(k: int) -> int:
    if k < 0 or k >= len(_FACTORIALS):
        raise DomainError(f"factorial argument out of table range [0, 64]: {k}")
    return _FACTORIALS[k]


def comb_general(M: int, k: int) -> int:
    """Generalized binomial coefficient C(M, k) for integer M of either sign.

    For M >= 0 this is the ordinary binomial (zero when k > M); for M < 0
    it is the polynomial continuation (-1)^k C(k - M - 1, k).
    """
    if k < 0:
        return 0
    if M >= 0:
        return math.comb(M, k)
    return (-1) ** k * math.comb(k - M - 1, k)


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + _X_EPS):
        raise DomainError("Jacobi abscissa outside [-1, 1]")
    return x


@dataclass(frozen=True)
class JacobiParams:
    """Degree and integer parameter pair of one Jacobi polynomial."""

    n: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"polynomial degree must be non-negative, got {self.n}")

    @property
    def needs_sum_route(self) -> bool:
        """True when a parameter is <= -1 and the recurrence degenerates."""
        return self.a <= -1 or self.b <= -1


def jacobi_recurrence(n: int, a: int, b: int, x):
    """Three-term recurrence evaluation; requires a, b > -1."""
    if n < 0:
        raise DomainError(f"polynomial degree must be non-negative, got {n}")
    if a <= -1 or b <= -1:
        raise DomainError("recurrence route requires a, b > -1")
    x = _check_x(x)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev
    p = (a + 1) + (a + b + 2) * (x - 1) / 2.0
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + a + b) * (2 * k + a + b - 2)
        c2a = (2 * k + a + b - 1) * (a * a - b * b)
        c2b = (2 * k + a + b - 1) * (2 * k + a + b) * (2 * k + a + b - 2)
        c3 = 2.0 * (k + a - 1) * (k + b - 1) * (2 * k + a + b)
        p, p_prev = ((c2a + c2b * x) * p - c3 * p_prev) / c1, p
    return p


def jacobi_sum(n: int, a: int, b: int, x):
    """Finite binomial-sum evaluation, valid for any integer parameters."""
    if n < 0:
        raise DomainError(f"polynomial degree must be non-negative, got {n}")
    x = _check_x(x)
    u = (x - 1) / 2.0
    v = (x + 1) / 2.0
    out = np.zeros_like(x)
    for s in range(n + 1):
        coef = comb_general(n + a, n - s) * comb_general(n + b, s)
        if coef:
            out = out + float(coef) * u**s * v ** (n - s)
    return out


def jacobi(n: int, a: int, b: int, x):
    """Evaluate P_n^{(a,b)}(x) for integer parameters of either sign."""
    params = JacobiParams(n, a, b)
    if params.needs_sum_route:
        return jacobi_sum(n, a, b, x)
    return jacobi_recurrence(n, a, b, x)


def jacobi_derivative(n: int, a: int, b: int, x, k: int = 1):
    """k-th derivative of P_n^{(a,b)} at x, via the parameter-shift identity."""
    if not 0 <= k <= 3:
        raise DomainError(f"derivative order must lie in [0, 3], got {k}")
    if k == 0:
        return jacobi(n, a, b, x)
    if n - k < 0:
        return np.zeros_like(_check_x(x))
    factor = 1.0
    for j in range(k):
        factor *= (n + a + b + 1 + j) / 2.0
    return factor * jacobi(n - k, a + k, b + k, x)


def normalization_constant(i: ModeIndex) -> float:
    """Normalization constant making the scalar mode unit-norm on the sphere.

    Equal to 2^(-m_plus) / pi * sqrt((L+1)/2) *
    sqrt((L/2+m_plus)! (L/2-m_plus)! / ((L/2+m_minus)! (L/2-m_minus)!)),
    with the factorial ratio taken in exact integer arithmetic before the
    single rounding to float.
    """
    au = (i.L + i.two_mp) // 2
    ad = (i.L - i.two_mp) // 2
    bu = (i.L + i.two_mm) // 2
    bd = (i.L - i.two_mm) // 2
    ratio = Fraction(_factorial(au) * _factorial(ad), _factorial(bu) * _factorial(bd))
    return (
        2.0 ** (-i.two_mp / 2.0)
        / math.pi
        * math.sqrt((i.L + 1) / 2.0)
        * math.sqrt(float(ratio))
    )
