"""Finite-difference oracle for the analytic differential operators.

Everything here works on closures over raw chart arrays: a scalar field
is f(alpha, theta, phi) -> complex array, a one-form field returns its
three coordinate-basis components stacked on the leading axis.  The
operators mirror the jet-based ones in the exterior module but share no
code with them, so agreement between the two is a meaningful check.

The composite operators reduce to repeated first/second partials:

    (*d w)  orthonormal = ((dth h - dph g)/(s c), (dph f - dal h)/s,
                           (dal g - dth f)/c)
    delta w             = -((dal(s c f))/(s c) + (dth g)/c^2 + (dph h)/s^2)
    Laplace on w        = -(*d *d w + d delta w)
    Laplace on scalars  = dal^2 + (c/s - s/c) dal + dth^2/c^2 + dph^2/s^2

with s = sin alpha, c = cos alpha and w = (f, g, h) in the coordinate
basis.  Stencils that would leave 0 < alpha < pi/2 are rejected; the
angular directions are periodic and never constrained.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChartDomainError, DomainError
from .exterior import PointForm

__all__ = [
    "FdConfig",
    "fd_partial",
    "fd_d_scalar",
    "fd_directional",
    "fd_star_d",
    "fd_delta",
    "fd_laplace",
    "fd_scalar_laplacian",
]

_SCHEMES = ("central2", "central4")

# (offset multiple, weight); weights divide by h**order afterwards
_STENCILS = {
    ("central2", 1): ((1, 0.5), (-1, -0.5)),
    ("central2", 2): ((1, 1.0), (0, -2.0), (-1, 1.0)),
    ("central4", 1): ((2, -1 / 12), (1, 8 / 12), (-1, -8 / 12), (-2, 1 / 12)),
    ("central4", 2): (
        (2, -1 / 12),
        (1, 16 / 12),
        (0, -30 / 12),
        (-1, 16 / 12),
        (-2, 1 / 12),
    ),
}


@dataclass(frozen=True)
class FdConfig:
    """Step sizes and difference scheme for the oracle."""

    step_alpha: float = 1e-4
    step_theta: float = 1e-4
    step_phi: float = 1e-4
    scheme: str = "central2"

    def __post_init__(self) -> None:
        if self.scheme not in _SCHEMES:
            raise DomainError(f"scheme must be one of {_SCHEMES}, got {self.scheme!r}")
        if min(self.step_alpha, self.step_theta, self.step_phi) <= 0.0:
            raise DomainError("finite-difference steps must be positive")

    def step(self, axis: int) -> float:
        return (self.step_alpha, self.step_theta, self.step_phi)[axis]


def _coords(p):
    if hasattr(p, "alpha"):
        return (
            np.asarray(p.alpha, dtype=float),
            np.asarray(p.theta, dtype=float),
            np.asarray(p.phi, dtype=float),
        )
    a, t, f = p
    return np.asarray(a, dtype=float), np.asarray(t, dtype=float), np.asarray(f, dtype=float)


def fd_partial(field, p, direction: int, order: int = 1, cfg: FdConfig = FdConfig()):
    """Central-difference partial derivative along one chart axis."""
    if direction not in (0, 1, 2):
        raise DomainError(f"direction must be 0 (alpha), 1 (theta) or 2 (phi), got {direction}")
    if order not in (1, 2):
        raise DomainError(f"finite differences are provided to order 2, got {order}")
    a, t, f = _coords(p)
    h = cfg.step(direction)
    stencil = _STENCILS[(cfg.scheme, order)]
    if direction == 0:
        reach = max(abs(m) for m, _ in stencil) * h
        if np.any(a - reach <= 0.0) or np.any(a + reach >= np.pi / 2):
            raise ChartDomainError(
                "finite-difference stencil leaves the chart interval (0, pi/2)"
            )
    acc = 0.0
    for mult, weight in stencil:
        args = [a, t, f]
        args[direction] = args[direction] + mult * h
        acc = acc + weight * np.asarray(field(*args))
    return acc / h**order


def fd_directional(field, p, coeff_theta, coeff_phi, cfg: FdConfig = FdConfig()):
    """Derivative along coeff_theta * d/dtheta + coeff_phi * d/dphi."""
    return coeff_theta * fd_partial(field, p, 1, 1, cfg) + coeff_phi * fd_partial(
        field, p, 2, 1, cfg
    )


def fd_d_scalar(field, p, cfg: FdConfig = FdConfig()) -> PointForm:
    """Gradient one-form of a scalar closure, orthonormal components."""
    a, _, _ = _coords(p)
    s, c = np.sin(a), np.cos(a)
    return PointForm(
        1,
        np.stack(
            [
                fd_partial(field, p, 0, 1, cfg),
                fd_partial(field, p, 1, 1, cfg) / c,
                fd_partial(field, p, 2, 1, cfg) / s,
            ]
        ),
    )


def _component(w, k: int):
    return lambda a, t, f: np.asarray(w(a, t, f))[k]


def _curl_parts(w, p, cfg: FdConfig):
    dth_h = fd_partial(_component(w, 2), p, 1, 1, cfg)
    dph_g = fd_partial(_component(w, 1), p, 2, 1, cfg)
    dph_f = fd_partial(_component(w, 0), p, 2, 1, cfg)
    dal_h = fd_partial(_component(w, 2), p, 0, 1, cfg)
    dal_g = fd_partial(_component(w, 1), p, 0, 1, cfg)
    dth_f = fd_partial(_component(w, 0), p, 1, 1, cfg)
    return dth_h - dph_g, dph_f - dal_h, dal_g - dth_f


def fd_star_d(w, p, cfg: FdConfig = FdConfig()) -> PointForm:
    """*d of a one-form closure, orthonormal components."""
    a, _, _ = _coords(p)
    s, c = np.sin(a), np.cos(a)
    P, Q, R = _curl_parts(w, p, cfg)
    return PointForm(1, np.stack([P / (s * c), Q / s, R / c]))


def _star_d_coords(w, cfg: FdConfig):
    """*d of a one-form closure as a coordinate-component closure."""

    def sd(alpha, theta, phi):
        P, Q, R = _curl_parts(w, (alpha, theta, phi), cfg)
        s, c = np.sin(np.asarray(alpha, dtype=float)), np.cos(np.asarray(alpha, dtype=float))
        return np.stack([P / (s * c), (c / s) * Q, (s / c) * R])

    return sd


def fd_delta(w, p, cfg: FdConfig = FdConfig()):
    """Codifferential of a one-form closure (a scalar)."""
    a, _, _ = _coords(p)
    s, c = np.sin(a), np.cos(a)

    def weighted_f(alpha, theta, phi):
        al = np.asarray(alpha, dtype=float)
        return np.sin(al) * np.cos(al) * np.asarray(w(alpha, theta, phi))[0]

    term_a = fd_partial(weighted_f, p, 0, 1, cfg) / (s * c)
    term_t = fd_partial(_component(w, 1), p, 1, 1, cfg) / c**2
    term_f = fd_partial(_component(w, 2), p, 2, 1, cfg) / s**2
    return -(term_a + term_t + term_f)


def fd_laplace(w, p, cfg: FdConfig = FdConfig()) -> PointForm:
    """Laplace-de Rham operator on a one-form closure, orthonormal."""
    curl_curl = fd_star_d(_star_d_coords(w, cfg), p, cfg)

    def delta_field(alpha, theta, phi):
        return fd_delta(w, (alpha, theta, phi), cfg)

    grad_delta = fd_d_scalar(delta_field, p, cfg)
    return PointForm(1, -(curl_curl.components + grad_delta.components))


def fd_scalar_laplacian(field, p, cfg: FdConfig = FdConfig()):
    """Laplace-de Rham operator on a scalar closure."""
    a, _, _ = _coords(p)
    s, c = np.sin(a), np.cos(a)
    d2a = fd_partial(field, p, 0, 2, cfg)
    d1a = fd_partial(field, p, 0, 1, cfg)
    d2t = fd_partial(field, p, 1, 2, cfg)
    d2f = fd_partial(field, p, 2, 2, cfg)
    return d2a + (c / s - s / c) * d1a + d2t / c**2 + d2f / s**2
