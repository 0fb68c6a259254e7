"""Exterior calculus on the round 3-sphere in the Hopf chart.

Pointwise algebra (wedge, Hodge star, parity, interior product) acts on
PointForm values expressed in the positively oriented orthonormal co-frame

    e_alpha = d alpha,   e_theta = cos(alpha) d theta,   e_phi = sin(alpha) d phi,

with the degree-2 basis taken cyclically as

    (e_theta ^ e_phi,  e_phi ^ e_alpha,  e_alpha ^ e_theta)

so that the Hodge star is the identity permutation on components in every
degree.  Differential operators (d, the codifferential, star-d and the
Laplace-de Rham operator) act on FormJet fields whose components are stored
in the coordinate basis (d alpha, d theta, d phi and its induced higher
bases); each application of d consumes one derivative order of the jet.

All signs are derived from this one orientation choice:

    * star star = identity on every degree,
    * delta = -star d star on odd degrees, +star d star on degree 2,
    * Delta = -(delta d + d delta).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegreeError
from .jets import ScalarJet, cos_alpha_jet, sin_alpha_jet

__all__ = [
    "PointForm",
    "FormJet",
    "wedge",
    "hodge",
    "parity",
    "interior",
    "inner_pointwise",
    "one_form_jet",
    "d_form",
    "hodge_jet",
    "delta_jet",
    "star_d_jet",
    "laplace_jet",
    "laplace_scalar_jet",
    "point_form",
    "d_scalar",
    "d_scalar_jet",
    "star_d",
    "codifferential",
    "laplace_de_rham_oneform",
]

_COMPONENT_COUNT = {0: 1, 1: 3, 2: 3, 3: 1}


def _alpha_of(p):
    """Accept a HopfPoint-like object or a bare alpha array."""
    return np.asarray(getattr(p, "alpha", p), dtype=float)


# ---------------------------------------------------------------------------
# pointwise values
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PointForm:
    """Value of a differential form at a point batch.

    components has shape (k, ...) where k is 1, 3, 3, 1 for degrees
    0, 1, 2, 3 and the trailing axes range over the point batch.
    """

    degree: int
    components: np.ndarray

    def __post_init__(self) -> None:
        if self.degree not in _COMPONENT_COUNT:
            raise DegreeError(f"form degree must be 0..3, got {self.degree}")
        comps = np.atleast_1d(np.asarray(self.components))
        if comps.shape[0] != _COMPONENT_COUNT[self.degree]:
            raise DegreeError(
                f"degree-{self.degree} form needs {_COMPONENT_COUNT[self.degree]} "
                f"components, got leading axis {comps.shape[0]}"
            )
        object.__setattr__(self, "components", comps)


def wedge(f: PointForm, g: PointForm) -> PointForm:
    """Exterior product; raises DegreeError past the top degree."""
    p, q = f.degree, g.degree
    if p + q > 3:
        raise DegreeError(f"wedge of degrees {p} and {q} overflows dimension 3")
    a, b = f.components, g.components
    if p == 0 or q == 0:
        scal, other, deg = (a[0], b, q) if p == 0 else (b[0], a, p)
        return PointForm(deg, other * scal)
    if p == 1 and q == 1:
        comps = np.stack(
            [
                a[1] * b[2] - a[2] * b[1],
                a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0],
            ]
        )
        return PointForm(2, comps)
    # 1 ^ 2 or 2 ^ 1: both reduce to the dot product onto the volume form
    return PointForm(3, (a * b).sum(axis=0, keepdims=True))


def hodge(f: PointForm) -> PointForm:
    """Hodge star; the identity transcription in the cyclic bases."""
    return PointForm(3 - f.degree, f.components.copy())


def parity(f: PointForm) -> PointForm:
    """Degree-parity involution, multiplying a p-form by (-1)^p."""
    sign = -1.0 if f.degree % 2 else 1.0
    return PointForm(f.degree, sign * f.components)


def interior(v, f: PointForm) -> PointForm:
    """Contraction with the vector of orthonormal-frame components v."""
    if f.degree == 0:
        raise DegreeError("cannot contract a 0-form")
    v = np.asarray(v)
    a = f.components
    if f.degree == 1:
        return PointForm(0, (v * a).sum(axis=0, keepdims=True))
    if f.degree == 2:
        comps = np.stack(
            [
                a[1] * v[2] - a[2] * v[1],
                a[2] * v[0] - a[0] * v[2],
                a[0] * v[1] - a[1] * v[0],
            ]
        )
        return PointForm(1, comps)
    return PointForm(2, np.stack([a[0] * v[0], a[0] * v[1], a[0] * v[2]]))


def inner_pointwise(f: PointForm, g: PointForm):
    """Frame inner product, conjugate-linear in the second argument."""
    if f.degree != g.degree:
        raise DegreeError("inner product requires equal degrees")
    return (f.components * np.conjugate(g.components)).sum(axis=0)


# ---------------------------------------------------------------------------
# jet-level fields and operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FormJet:
    """A differential form with derivative information, coordinate basis.

    comps holds one ScalarJet per component in the coordinate bases
    (1; d alpha, d theta, d phi; d theta^d phi, d phi^d alpha,
    d alpha^d theta; d alpha^d theta^d phi).  Orthonormal-frame values are
    produced on read by point_form().
    """

    degree: int
    comps: tuple

    def __post_init__(self) -> None:
        if self.degree not in _COMPONENT_COUNT:
            raise DegreeError(f"form degree must be 0..3, got {self.degree}")
        if len(self.comps) != _COMPONENT_COUNT[self.degree]:
            raise DegreeError(
                f"degree-{self.degree} jet needs {_COMPONENT_COUNT[self.degree]} components"
            )

    @property
    def order(self) -> int:
        return min(c.order for c in self.comps)

    def __add__(self, other: "FormJet") -> "FormJet":
        if self.degree != other.degree:
            raise DegreeError("cannot add forms of different degrees")
        return FormJet(self.degree, tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other: "FormJet") -> "FormJet":
        return self + (-1.0) * other

    def __mul__(self, factor) -> "FormJet":
        return FormJet(self.degree, tuple(c * factor for c in self.comps))

    __rmul__ = __mul__


def one_form_jet(f: ScalarJet, g: ScalarJet, h: ScalarJet) -> FormJet:
    """One-form f d alpha + g d theta + h d phi as a jet field."""
    return FormJet(1, (f, g, h))


def d_form(w: FormJet) -> FormJet:
    """Exterior derivative in the coordinate basis; consumes one jet order."""
    if w.degree == 3:
        raise DegreeError("d of a 3-form overflows dimension 3")
    if w.degree == 0:
        (f,) = w.comps
        return FormJet(1, (f.derivative(0), f.derivative(1), f.derivative(2)))
    if w.degree == 1:
        f, g, h = w.comps
        return FormJet(
            2,
            (
                h.derivative(1) - g.derivative(2),
                f.derivative(2) - h.derivative(0),
                g.derivative(0) - f.derivative(1),
            ),
        )
    P, Q, R = w.comps
    return FormJet(3, (P.derivative(0) + Q.derivative(1) + R.derivative(2),))


def _frame_factor_jets(alpha, order):
    s = sin_alpha_jet(alpha, order)
    c = cos_alpha_jet(alpha, order)
    return s, c


def hodge_jet(w: FormJet, p) -> FormJet:
    """Hodge star on a jet field; multiplies by frame factors, keeps order."""
    alpha = _alpha_of(p)
    s, c = _frame_factor_jets(alpha, w.order)
    sc = s * c
    if w.degree == 0:
        (f,) = w.comps
        return FormJet(3, (f * sc,))
    if w.degree == 1:
        f, g, h = w.comps
        return FormJet(2, (f * sc, g * (s * c.reciprocal()), h * (c * s.reciprocal())))
    if w.degree == 2:
        P, Q, R = w.comps
        return FormJet(
            1, (P * sc.reciprocal(), Q * (c * s.reciprocal()), R * (s * c.reciprocal()))
        )
    (v,) = w.comps
    return FormJet(0, (v * sc.reciprocal(),))


def delta_jet(w: FormJet, p) -> FormJet:
    """Codifferential on a jet field; consumes one jet order."""
    if w.degree == 0:
        raise DegreeError("the codifferential of a 0-form vanishes identically")
    sign = 1.0 if w.degree == 2 else -1.0
    return sign * hodge_jet(d_form(hodge_jet(w, p)), p)


def star_d_jet(w: FormJet, p) -> FormJet:
    """star(d w) for a one-form jet; a one-form jet one order lower."""
    if w.degree != 1:
        raise DegreeError("star_d is defined here on one-forms")
    return hodge_jet(d_form(w), p)


def laplace_jet(w: FormJet, p) -> FormJet:
    """Laplace-de Rham operator -(delta d + d delta) on a one-form jet."""
    if w.degree != 1:
        raise DegreeError("laplace_jet expects a one-form")
    t1 = delta_jet(d_form(w), p)
    t2 = d_form(delta_jet(w, p))
    return (-1.0) * (t1 + t2)


def laplace_scalar_jet(f: ScalarJet, p) -> ScalarJet:
    """Laplace-de Rham operator on a scalar jet: -delta(d f)."""
    return (-1.0) * delta_jet(d_scalar_jet(f), p).comps[0]


def d_scalar_jet(f: ScalarJet) -> FormJet:
    return d_form(FormJet(0, (f,)))


def point_form(w: FormJet, p) -> PointForm:
    """Orthonormal-frame value of a jet field at its point batch."""
    alpha = _alpha_of(p)
    s, c = np.sin(alpha), np.cos(alpha)
    vals = [comp.value for comp in w.comps]
    if w.degree == 0:
        return PointForm(0, np.stack(vals))
    if w.degree == 1:
        f, g, h = vals
        return PointForm(1, np.stack([f, g / c, h / s]))
    if w.degree == 2:
        P, Q, R = vals
        return PointForm(2, np.stack([P / (s * c), Q / s, R / c]))
    return PointForm(3, np.stack([vals[0] / (s * c)]))


# ---------------------------------------------------------------------------
# convenience wrappers returning pointwise values
# ---------------------------------------------------------------------------


def d_scalar(f: ScalarJet, p) -> PointForm:
    """Differential of a scalar jet as an orthonormal-frame one-form value."""
    return point_form(d_scalar_jet(f), p)


def star_d(w: FormJet, p) -> PointForm:
    return point_form(star_d_jet(w, p), p)


def codifferential(w: FormJet, p) -> PointForm:
    return point_form(delta_jet(w, p), p)


def laplace_de_rham_oneform(w: FormJet, p) -> PointForm:
    return point_form(laplace_jet(w, p), p)
