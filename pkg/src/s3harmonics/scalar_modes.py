"""Scalar Laplace eigenmodes on the 3-sphere in Hopf coordinates.

The mode labelled (L, m_plus, m_minus) separates as

    T = kappa * exp(i*(S*phi + D*theta)) * R(alpha)

with the integer windings S = m_plus - m_minus (phi) and D = m_plus +
m_minus (theta), and a radial factor

    R(alpha) = sum_t (-1)^t C(Md, n-t) C(Mu, t)
               sin(alpha)^(2t+S) cos(alpha)^(2(n-t)+D),

n = L/2 - m_plus, Md = L/2 - m_minus, Mu = L/2 + m_minus.  Every term of
the sum has nonnegative exponents for every valid index, so this single
expression covers all sign combinations of the windings; it is the
polynomial identity obtained by fusing the normalized Jacobi factor
P_n^{(S,D)}(cos 2 alpha) with its weight prefactor.  For S, D >= 0 the
unfused product is kept available as an independent cross-check route.

The prefactor kappa makes the mode unit-norm for the Hermitian product on
the sphere.  Eigenvalues: Laplace -L(L+2); the Killing derivatives along
d/dphi + d/dtheta and d/dphi - d/dtheta act as multiplication by
mu = 2i m_plus and nu = -2i m_minus respectively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .geometry import HopfPoint
from .indices import CoexactBasisIndex, ModeIndex, as_mode_index
from .jets import ScalarJet
from .specialfn import jacobi, normalization_constant

__all__ = [
    "ModeIndex",
    "CoexactBasisIndex",
    "as_mode_index",
    "ScalarJet",
    "SpectralData",
    "spectral_data",
    "enumerate_scalar",
    "scalar_mode_jet",
    "mode_value",
    "mode_value_naive",
    "scalar_mode_closure",
    "scalar_field",
]


@dataclass(frozen=True)
class SpectralData:
    """Exact eigenvalues attached to one scalar mode."""

    lam: int
    mu: complex
    nu: complex


def spectral_data(i: ModeIndex) -> SpectralData:
    """Laplace eigenvalue -L(L+2) and the two Killing eigenvalues."""
    return SpectralData(-i.L * (i.L + 2), 1j * i.two_mp, -1j * i.two_mm)


def enumerate_scalar(L: int):
    """All (L+1)^2 mode indices at level L, lexicographic in (2m+, 2m-)."""
    if L < 0:
        raise DomainError(f"level must be non-negative, got {L}")
    return [
        ModeIndex(L, tp, tm)
        for tp in range(-L, L + 1, 2)
        for tm in range(-L, L + 1, 2)
    ]


# ---------------------------------------------------------------------------
# radial factor as exponent-indexed integer coefficients
# ---------------------------------------------------------------------------


def _radial_terms(i: ModeIndex) -> dict:
    """Map (sin-exponent, cos-exponent) -> integer coefficient."""
    n = i.n
    md = (i.L - i.two_mm) // 2
    mu = (i.L + i.two_mm) // 2
    terms = {}
    for t in range(max(0, n - md), min(n, mu) + 1):
        coef = (-1) ** t * math.comb(md, n - t) * math.comb(mu, t)
        terms[(2 * t + i.S, 2 * (n - t) + i.D)] = coef
    return terms


def _derived_terms(terms: dict) -> dict:
    """Termwise d/dalpha of sum coef * sin^p cos^q."""
    out: dict = {}
    for (pw, qw), coef in terms.items():
        if pw:
            key = (pw - 1, qw + 1)
            out[key] = out.get(key, 0) + pw * coef
        if qw:
            key = (pw + 1, qw - 1)
            out[key] = out.get(key, 0) - qw * coef
    return out


def _eval_terms(terms: dict, s, c):
    total = np.zeros(np.broadcast(s, c).shape, dtype=float)
    for (pw, qw), coef in terms.items():
        total = total + float(coef) * s**pw * c**qw
    return total


def _kappa(i: ModeIndex) -> float:
    # the weight prefactor 2^(m_plus) absorbed by the fused radial sum
    return normalization_constant(i) * 2.0 ** (i.two_mp / 2.0)


def _mode_pieces(i: ModeIndex, alpha, theta, phi, n_alpha_derivs: int):
    s, c = np.sin(alpha), np.cos(alpha)
    terms = _radial_terms(i)
    radial = [_eval_terms(terms, s, c)]
    for _ in range(n_alpha_derivs):
        terms = _derived_terms(terms)
        radial.append(_eval_terms(terms, s, c))
    phase = _kappa(i) * np.exp(1j * (i.S * np.asarray(phi) + i.D * np.asarray(theta)))
    return radial, phase


def scalar_mode_jet(i: ModeIndex, p: HopfPoint, order: int = 0) -> ScalarJet:
    """Mode value and partial derivatives up to total order <= 3.

    theta- and phi-derivatives are multiplications by iD and iS; the
    alpha-dependence is differentiated termwise on the radial sum.
    """
    if not 0 <= order <= 3:
        raise DomainError(f"jet order must lie in [0, 3], got {order}")
    radial, phase = _mode_pieces(i, p.alpha, p.theta, p.phi, order)
    coeffs = {}
    for k in range(order + 1):
        base = radial[k] * phase
        for j in range(order + 1 - k):
            for l in range(order + 1 - k - j):
                coeffs[(k, j, l)] = base * (1j * i.D) ** j * (1j * i.S) ** l
    return ScalarJet(order, coeffs, np.asarray(p.alpha).shape)


def mode_value(i: ModeIndex, p: HopfPoint):
    """Mode value at a point batch."""
    radial, phase = _mode_pieces(i, p.alpha, p.theta, p.phi, 0)
    return radial[0] * phase


def mode_value_naive(i: ModeIndex, p: HopfPoint):
    """Independent route via the unfused weight-times-Jacobi product.

    Only defined for nonnegative windings S, D, where both weight
    exponents are nonnegative; used to cross-check the fused sum.
    """
    if i.S < 0 or i.D < 0:
        raise DomainError("naive route requires nonnegative windings S, D")
    x = np.cos(2.0 * np.asarray(p.alpha))
    weight = (1.0 - x) ** (i.S / 2.0) * (1.0 + x) ** (i.D / 2.0)
    poly = jacobi(i.n, i.S, i.D, x)
    phase = np.exp(1j * (i.S * p.phi + i.D * p.theta))
    return normalization_constant(i) * weight * poly * phase


def scalar_mode_closure(i: ModeIndex):
    """Mode as a closure over raw chart arrays, for stencil evaluation."""

    def field(alpha, theta, phi):
        radial, phase = _mode_pieces(i, alpha, theta, phi, 0)
        return radial[0] * phase

    return field


def scalar_field(i: ModeIndex):
    """Mode as a closure over HopfPoint batches, for quadrature."""

    def field(p: HopfPoint):
        return mode_value(i, p)

    return field
