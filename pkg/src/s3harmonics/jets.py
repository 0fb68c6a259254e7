"""Truncated derivative ("jet") arithmetic in the chart variables.

A ScalarJet stores the partial derivatives of a field at a batch of points,
indexed by multi-indices (i, j, k) for d^i/dalpha^i d^j/dtheta^j d^k/dphi^k
with i + j + k <= order.  Sums, products (Leibniz), and reciprocals are
exact on the stored orders, so first-order differential operators can be
composed analytically by consuming one order per application.

Coefficients are numpy arrays over the point batch; missing entries are
implicitly zero, which keeps jets of functions of alpha alone sparse.
"""

from __future__ import annotations

from math import comb

import numpy as np

from .errors import DomainError

__all__ = ["ScalarJet", "multi_indices", "sin_alpha_jet", "cos_alpha_jet", "constant_jet"]


def multi_indices(order: int):
    """All (i, j, k) with i + j + k <= order, in graded lexicographic order."""
    out = []
    for total in range(order + 1):
        for i in range(total, -1, -1):
            for j in range(total - i, -1, -1):
                out.append((i, j, total - i - j))
    return out


class ScalarJet:
    """Partial derivatives of a complex field at a point batch."""

    __slots__ = ("order", "shape", "coeffs")

    # keep numpy from absorbing jets into object arrays; binary ops with
    # ndarrays then defer to the reflected methods below
    __array_ufunc__ = None

    def __init__(self, order: int, coeffs: dict, shape=None):
        if order < 0:
            raise DomainError(f"jet order must be non-negative, got {order}")
        self.order = order
        self.coeffs = {}
        for m, val in coeffs.items():
            if sum(m) <= order:
                self.coeffs[m] = np.asarray(val)
        if shape is None:
            if not self.coeffs:
                raise DomainError("cannot infer jet shape from empty coefficients")
            shape = next(iter(self.coeffs.values())).shape
        self.shape = shape

    # -- access ----------------------------------------------------------

    def partial(self, i: int, j: int, k: int):
        """Value of d^i_alpha d^j_theta d^k_phi f, zero if not stored."""
        if i + j + k > self.order:
            raise DomainError(
                f"partial of order {i + j + k} not held by an order-{self.order} jet"
            )
        val = self.coeffs.get((i, j, k))
        if val is None:
            return np.zeros(self.shape, dtype=complex)
        return val

    @property
    def value(self):
        return self.partial(0, 0, 0)

    def derivative(self, axis: int) -> "ScalarJet":
        """The jet of the derivative along axis 0=alpha, 1=theta, 2=phi."""
        if self.order == 0:
            raise DomainError("an order-0 jet holds no derivative information")
        shift = [0, 0, 0]
        shift[axis] = 1
        new = {}
        for m, val in self.coeffs.items():
            src = (m[0] - shift[0], m[1] - shift[1], m[2] - shift[2])
            if min(src) >= 0:
                new[src] = val
        return ScalarJet(self.order - 1, new, self.shape)

    def truncated(self, order: int) -> "ScalarJet":
        if order > self.order:
            raise DomainError(f"cannot extend an order-{self.order} jet to order {order}")
        return ScalarJet(order, self.coeffs, self.shape)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ScalarJet):
            return NotImplemented
        order = min(self.order, other.order)
        keys = {m for m in self.coeffs if sum(m) <= order}
        keys |= {m for m in other.coeffs if sum(m) <= order}
        out = {}
        for m in keys:
            a = self.coeffs.get(m)
            b = other.coeffs.get(m)
            out[m] = b if a is None else (a if b is None else a + b)
        return ScalarJet(order, out, self.shape)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ScalarJet(self.order, {m: -v for m, v in self.coeffs.items()}, self.shape)

    def __mul__(self, other):
        if isinstance(other, ScalarJet):
            order = min(self.order, other.order)
            out = {}
            for ma, va in self.coeffs.items():
                if sum(ma) > order:
                    continue
                for mb, vb in other.coeffs.items():
                    m = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])
                    if sum(m) > order:
                        continue
                    w = comb(m[0], ma[0]) * comb(m[1], ma[1]) * comb(m[2], ma[2])
                    term = w * va * vb
                    acc = out.get(m)
                    out[m] = term if acc is None else acc + term
            return ScalarJet(order, out, self.shape)
        # plain scalar or array factor
        return ScalarJet(
            self.order, {m: v * other for m, v in self.coeffs.items()}, self.shape
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "ScalarJet":
        """Jet of 1/f; the leading value must be nowhere zero."""
        g0 = self.partial(0, 0, 0)
        inv0 = 1.0 / g0
        out = {(0, 0, 0): inv0}
        for m in multi_indices(self.order):
            if m == (0, 0, 0):
                continue
            acc = 0.0
            for k, gk in self.coeffs.items():
                if k == (0, 0, 0):
                    continue
                r = (m[0] - k[0], m[1] - k[1], m[2] - k[2])
                if min(r) < 0:
                    continue
                rv = out.get(r)
                if rv is None:
                    continue
                w = comb(m[0], k[0]) * comb(m[1], k[1]) * comb(m[2], k[2])
                acc = acc + w * gk * rv
            out[m] = -inv0 * acc
        return ScalarJet(self.order, out, self.shape)


def constant_jet(value, order: int, shape=()) -> ScalarJet:
    val = np.broadcast_to(np.asarray(value), shape).copy()
    return ScalarJet(order, {(0, 0, 0): val}, shape)


def _alpha_cycle_jet(derivs, order: int) -> ScalarJet:
    # derivs is the 4-cycle of alpha-derivatives starting at the function itself
    coeffs = {(i, 0, 0): derivs[i % 4] for i in range(order + 1)}
    shape = np.asarray(derivs[0]).shape
    return ScalarJet(order, coeffs, shape)


def sin_alpha_jet(alpha, order: int) -> ScalarJet:
    """Jet of sin(alpha) as a field on the chart."""
    a = np.asarray(alpha, dtype=float)
    s, c = np.sin(a), np.cos(a)
    return _alpha_cycle_jet([s, c, -s, -c], order)


def cos_alpha_jet(alpha, order: int) -> ScalarJet:
    """Jet of cos(alpha) as a field on the chart."""
    a = np.asarray(alpha, dtype=float)
    s, c = np.sin(a), np.cos(a)
    return _alpha_cycle_jet([c, -s, -c, s], order)
