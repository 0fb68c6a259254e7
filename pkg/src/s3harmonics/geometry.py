"""Hopf chart on the unit 3-sphere.

Coordinates (alpha, theta, phi) with alpha in the open interval (0, pi/2)
and theta, phi taken mod 2 pi parametrize the sphere through

    x1 = sin(alpha) cos(phi),   x2 = sin(alpha) sin(phi),
    x3 = cos(alpha) cos(theta), x4 = cos(alpha) sin(theta),

giving the round metric d alpha^2 + cos^2(alpha) d theta^2
+ sin^2(alpha) d phi^2 and the volume density sin(alpha) cos(alpha).
The chart excludes the two Hopf circles alpha = 0 and alpha = pi/2 where
the co-frame degenerates; evaluation requests on them are rejected rather
than silently returning infinities.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ChartDomainError
from .exterior import PointForm

__all__ = [
    "HopfPoint",
    "FrameWeights",
    "frame_weights",
    "volume_density",
    "embed",
    "flat",
    "sharp",
    "sample_interior_points",
    "VOLUME",
]

# total volume of the unit 3-sphere
VOLUME = 2.0 * np.pi**2

_ALPHA_MARGIN = 1e-12


@dataclass(frozen=True)
class HopfPoint:
    """A batch of chart points with common broadcast shape."""

    alpha: np.ndarray
    theta: np.ndarray
    phi: np.ndarray

    def __post_init__(self) -> None:
        a = np.atleast_1d(np.asarray(self.alpha, dtype=float))
        t = np.atleast_1d(np.asarray(self.theta, dtype=float))
        f = np.atleast_1d(np.asarray(self.phi, dtype=float))
        a, t, f = np.broadcast_arrays(a, t, f)
        if np.any(a <= _ALPHA_MARGIN) or np.any(a >= np.pi / 2 - _ALPHA_MARGIN):
            raise ChartDomainError(
                "alpha must lie strictly inside (0, pi/2); the bounding Hopf "
                "circles are outside this chart"
            )
        object.__setattr__(self, "alpha", a.copy())
        object.__setattr__(self, "theta", np.mod(t, 2.0 * np.pi))
        object.__setattr__(self, "phi", np.mod(f, 2.0 * np.pi))

    @property
    def shape(self):
        return self.alpha.shape


@dataclass(frozen=True)
class FrameWeights:
    """Co-frame scale factors (1, cos alpha, sin alpha) at a point batch.

    A coordinate-basis one-form a d alpha + b d theta + c d phi has
    orthonormal components (a/w_alpha, b/w_theta, c/w_phi).
    """

    w_alpha: np.ndarray
    w_theta: np.ndarray
    w_phi: np.ndarray

    @property
    def density(self) -> np.ndarray:
        return self.w_theta * self.w_phi


def frame_weights(p: HopfPoint) -> FrameWeights:
    return FrameWeights(np.ones_like(p.alpha), np.cos(p.alpha), np.sin(p.alpha))


def volume_density(p: HopfPoint) -> np.ndarray:
    """sqrt(det g) in the chart, the weight of d alpha d theta d phi."""
    return frame_weights(p).density


def embed(p: HopfPoint) -> np.ndarray:
    """Unit-sphere points in R^4, stacked on the leading axis."""
    w = frame_weights(p)
    return np.stack(
        [
            w.w_phi * np.cos(p.phi),
            w.w_phi * np.sin(p.phi),
            w.w_theta * np.cos(p.theta),
            w.w_theta * np.sin(p.theta),
        ]
    )


def flat(v, p: HopfPoint) -> PointForm:
    """Lower the index of coordinate vector components (v^a, v^t, v^f).

    The metric pairs d alpha with v^a, cos(alpha)^2 d theta with v^t and
    sin(alpha)^2 d phi with v^f; in the orthonormal co-frame the result has
    components (v^a, cos(alpha) v^t, sin(alpha) v^f).
    """
    v = np.asarray(v)
    w = frame_weights(p)
    return PointForm(1, np.stack([v[0] * w.w_alpha, w.w_theta * v[1], w.w_phi * v[2]]))


def sharp(f: PointForm, p: HopfPoint) -> np.ndarray:
    """Raise the index of a one-form value back to coordinate components."""
    if f.degree != 1:
        raise ValueError("sharp expects a one-form value")
    w = frame_weights(p)
    a = f.components
    return np.stack([a[0] / w.w_alpha, a[1] / w.w_theta, a[2] / w.w_phi])


def sample_interior_points(n: int, rng: np.random.Generator, margin: float = 0.05) -> HopfPoint:
    """Draw n chart points, keeping alpha away from the degenerate circles.

    alpha is drawn so that cos(2 alpha) is uniform, which matches the
    volume measure; the margin trims a band near each bounding circle so
    finite-difference stencils centered at the samples stay in the chart.
    """
    x = rng.uniform(-1.0 + margin, 1.0 - margin, size=n)
    alpha = 0.5 * np.arccos(x)
    theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    return HopfPoint(alpha, theta, phi)
