"""Exact-degree integration on the 3-sphere and Hermitian inner products.

Under x = cos 2 alpha the volume element is dV = (1/4) dx dtheta dphi, so a
Gauss-Legendre rule in x crossed with uniform angular grids integrates any
product of two modes exactly once the rule resolves the polynomial degree
in x and the angular windings.  A grid built for level L_max uses at least
L_max + 2 x-nodes and 2 L_max + 2 points per angle: products of two modes
with L <= L_max have x-degree at most L_max + 1 and winding differences
strictly below the angular point counts, so every Gram entry sits on the
exactness plateau and is limited by rounding alone.

Inner products are Hermitian with the conjugate on the second argument.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, FieldEvaluationError, GridResolutionError
from .geometry import HopfPoint

__all__ = [
    "QuadratureGrid",
    "build_grid",
    "inner_product_scalar",
    "inner_product_oneform",
    "gram",
]


@dataclass(frozen=True)
class QuadratureGrid:
    """Product rule: Gauss-Legendre in x = cos 2 alpha, uniform angles."""

    x_nodes: np.ndarray
    x_weights: np.ndarray
    n_theta: int
    n_phi: int
    exactness: int
    points: HopfPoint
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.weights.size


def build_grid(l_max: int, n_x: int | None = None, n_theta: int | None = None,
               n_phi: int | None = None) -> QuadratureGrid:
    """Grid exact for all pairwise inner products of modes with L <= l_max."""
    if l_max < 0:
        raise DomainError(f"grid level must be non-negative, got {l_max}")
    if n_x is None:
        n_x = l_max + 2
    if n_theta is None:
        n_theta = 2 * l_max + 2
    if n_phi is None:
        n_phi = 2 * l_max + 2
    if n_x < l_max + 2 or n_theta < 2 * l_max + 2 or n_phi < 2 * l_max + 2:
        raise GridResolutionError(
            f"a level-{l_max} grid needs at least {l_max + 2} x-nodes and "
            f"{2 * l_max + 2} points per angle"
        )
    x, wx = np.polynomial.legendre.leggauss(n_x)
    alpha = 0.5 * np.arccos(x)
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi
    am, tm, fm = np.meshgrid(alpha, theta, phi, indexing="ij")
    points = HopfPoint(am.ravel(), tm.ravel(), fm.ravel())
    # dV = (1/4) dx dtheta dphi: each angle contributes 2 pi / n
    w = wx[:, None, None] * (np.pi**2 / (n_theta * n_phi))
    weights = np.broadcast_to(w, am.shape).ravel().copy()
    return QuadratureGrid(x, wx, n_theta, n_phi, l_max, points, weights)


def _evaluate(field, grid: QuadratureGrid) -> np.ndarray:
    """Sample a field closure on the grid, localizing any failure."""
    if not callable(field):
        return np.asarray(field)
    try:
        val = field(grid.points)
    except Exception as exc:
        pts = grid.points
        for k in range(grid.size):
            pk = HopfPoint(pts.alpha.flat[k], pts.theta.flat[k], pts.phi.flat[k])
            try:
                field(pk)
            except Exception as inner:
                raise FieldEvaluationError(
                    f"field evaluation failed at grid point alpha={pts.alpha.flat[k]!r}, "
                    f"theta={pts.theta.flat[k]!r}, phi={pts.phi.flat[k]!r}: {inner}"
                ) from inner
        raise FieldEvaluationError(f"field evaluation failed on the grid: {exc}") from exc
    return np.asarray(getattr(val, "components", val))


def _as_rows(values: np.ndarray, grid: QuadratureGrid) -> np.ndarray:
    """Shape a sampled field into (components, nodes)."""
    arr = np.asarray(values)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.shape[-1] != grid.size:
        raise DomainError(
            f"field sample has {arr.shape[-1]} nodes, grid has {grid.size}"
        )
    return arr.reshape(arr.shape[0], grid.size)


def inner_product_scalar(f, g, grid: QuadratureGrid) -> complex:
    """Hermitian product of two scalar fields (conjugate on the second)."""
    fv = _as_rows(_evaluate(f, grid), grid)
    gv = _as_rows(_evaluate(g, grid), grid)
    return complex(np.sum(grid.weights * fv[0] * np.conjugate(gv[0])))


def inner_product_oneform(w, e, grid: QuadratureGrid) -> complex:
    """Hermitian product of two one-form fields, summed over frame components."""
    wv = _as_rows(_evaluate(w, grid), grid)
    ev = _as_rows(_evaluate(e, grid), grid)
    integrand = np.sum(wv * np.conjugate(ev), axis=0)
    return complex(np.sum(grid.weights * integrand))


def gram(fields, grid: QuadratureGrid) -> np.ndarray:
    """Hermitian Gram matrix of a field list in its given order.

    All fields must evaluate to the same component count (1 for scalars,
    3 for one-forms).  Summation order is fixed by the grid layout, so
    repeated runs on one grid are bit-identical.
    """
    fields = list(fields)
    if not fields:
        return np.zeros((0, 0), dtype=complex)
    rows = [_as_rows(_evaluate(f, grid), grid) for f in fields]
    counts = {r.shape[0] for r in rows}
    if len(counts) > 1:
        raise DomainError(f"mixed component counts in one Gram: {sorted(counts)}")
    stacked = np.stack([r.reshape(-1) for r in rows])
    wrep = np.tile(grid.weights, rows[0].shape[0])
    return (stacked * wrep) @ np.conjugate(stacked).T
