"""One-form mode families on the 3-sphere built from the scalar modes.

With Phi a scalar mode of level L, lam = -L(L+2) its Laplace eigenvalue,
mu and nu its Killing eigenvalues, and xi, xi' the unit Killing one-forms
(cos^2 a) d theta + (sin^2 a) d phi and -(cos^2 a) d theta + (sin^2 a) d phi,
the families are

    A  = d Phi                         (exact)
    B  = *d(Phi xi),   B' = *d(Phi xi')
    C  = *d B  = mu A - lam Phi xi  - 2 B
    C' = *d B' = nu A - lam Phi xi' + 2 B'
    E  = (L+2) B  + C  = mu A + L B  - lam Phi xi     with *d E  = +L E
    E' = (L+2) B' - C' = -nu A + L B' + lam Phi xi'   with *d E' = -L E'
    F  = L B - C = -mu A + (L+2) B + lam Phi xi       with *d F = -(L+2) F

All are built from the closed expansions on the right, which need only
one more derivative order of Phi than the requested jet order; the
double-curl route to C stays available through star_d_jet as an
independent cross-check.  E modes vanish identically when 2|m_plus| = L
or L < 2, and E' modes when 2|m_minus| = L or L < 2; those indices are
excluded from the co-exact basis enumeration but remain representable.
"""

from __future__ import annotations

import math
from types import SimpleNamespace

import numpy as np

from .errors import DomainError, InvalidModeError
from .exterior import FormJet, PointForm, d_scalar_jet, point_form, star_d_jet
from .geometry import HopfPoint
from .indices import CoexactBasisIndex, ModeIndex
from .jets import ScalarJet, constant_jet, cos_alpha_jet, sin_alpha_jet
from .scalar_modes import scalar_mode_jet, spectral_data

__all__ = [
    "FAMILY_TAGS",
    "KILLING_TAGS",
    "killing_one_form",
    "killing_point",
    "killing_field",
    "killing_coordinate_closure",
    "mode",
    "mode_point",
    "mode_is_null",
    "oneform_field",
    "coexact_field",
    "mode_coordinate_closure",
    "closed_form_gram",
    "norm_squared_E",
    "norm_squared_Eprime",
    "enumerate_coexact",
    "dimension_exact",
    "dimension_coexact",
]

FAMILY_TAGS = ("A", "B", "Bprime", "C", "Cprime", "E", "Eprime", "F")
KILLING_TAGS = ("xi", "xiprime")

_PRIMED = {"Bprime", "Cprime", "Eprime"}


def _check_tag(tag: str) -> None:
    if tag not in FAMILY_TAGS:
        raise InvalidModeError(f"family tag must be one of {FAMILY_TAGS}, got {tag!r}")


# ---------------------------------------------------------------------------
# Killing one-forms
# ---------------------------------------------------------------------------


def killing_one_form(which: str, p, order: int = 0) -> FormJet:
    """xi or xi' as a coordinate-basis one-form jet; both have unit norm."""
    if which not in KILLING_TAGS:
        raise DomainError(f"Killing tag must be one of {KILLING_TAGS}, got {which!r}")
    alpha = np.asarray(p.alpha, dtype=float)
    c = cos_alpha_jet(alpha, order)
    s = sin_alpha_jet(alpha, order)
    c2 = c * c
    s2 = s * s
    zero = constant_jet(np.zeros(alpha.shape, dtype=complex), order, alpha.shape)
    if which == "xi":
        return FormJet(1, (zero, c2, s2))
    return FormJet(1, (zero, -c2, s2))


def killing_point(which: str, p) -> PointForm:
    """Orthonormal value (0, +/- cos a, sin a) of a Killing one-form."""
    return point_form(killing_one_form(which, p, 0), p)


def killing_field(which: str):
    """Killing one-form as a closure over HopfPoint batches."""
    if which not in KILLING_TAGS:
        raise DomainError(f"Killing tag must be one of {KILLING_TAGS}, got {which!r}")

    def field(p: HopfPoint) -> PointForm:
        return killing_point(which, p)

    return field


def killing_coordinate_closure(which: str):
    """Coordinate components over raw chart arrays, for the FD oracle."""
    if which not in KILLING_TAGS:
        raise DomainError(f"Killing tag must be one of {KILLING_TAGS}, got {which!r}")
    sign = -1.0 if which == "xiprime" else 1.0

    def w(alpha, theta, phi):
        a = np.asarray(alpha, dtype=float)
        c2 = np.cos(a) ** 2
        s2 = np.sin(a) ** 2
        return np.stack([np.zeros_like(a), sign * c2, s2]).astype(complex)

    return w


# ---------------------------------------------------------------------------
# family construction
# ---------------------------------------------------------------------------


def _scaled(w: FormJet, f: ScalarJet) -> FormJet:
    return FormJet(w.degree, tuple(comp * f for comp in w.comps))


def mode(tag: str, i: ModeIndex, p, order: int = 0) -> FormJet:
    """One family member as a coordinate-basis one-form jet.

    order <= 2; the returned jet supports one (order >= 1) or two
    (order >= 2) applications of first-order differential operators.
    """
    _check_tag(tag)
    if not 0 <= order <= 2:
        raise DomainError(f"family jets are available to order 2, got {order}")
    f = scalar_mode_jet(i, p, order + 1)
    if tag == "A":
        return d_scalar_jet(f)
    sd = spectral_data(i)
    lam = float(sd.lam)
    xi = killing_one_form("xiprime" if tag in _PRIMED else "xi", p, order + 1)
    fxi = _scaled(xi, f)
    b = star_d_jet(fxi, p)
    if tag in ("B", "Bprime"):
        return b
    a = d_scalar_jet(f)
    if tag == "C":
        return sd.mu * a + (-lam) * fxi + (-2.0) * b
    if tag == "Cprime":
        return sd.nu * a + (-lam) * fxi + 2.0 * b
    L = float(i.L)
    if tag == "E":
        return sd.mu * a + L * b + (-lam) * fxi
    if tag == "Eprime":
        return (-sd.nu) * a + L * b + lam * fxi
    # F
    return (-sd.mu) * a + (L + 2.0) * b + lam * fxi


def mode_point(tag: str, i: ModeIndex, p) -> PointForm:
    """Orthonormal-frame value of a family member at a point batch."""
    return point_form(mode(tag, i, p, 0), p)


def mode_coordinate_closure(tag: str, i: ModeIndex):
    """Coordinate components over raw chart arrays, for the FD oracle."""
    _check_tag(tag)

    def w(alpha, theta, phi):
        p = SimpleNamespace(
            alpha=np.asarray(alpha, dtype=float),
            theta=np.asarray(theta, dtype=float),
            phi=np.asarray(phi, dtype=float),
        )
        jet = mode(tag, i, p, 0)
        return np.stack([comp.value for comp in jet.comps])

    return w


def mode_is_null(tag: str, i: ModeIndex) -> bool:
    """True when the family member vanishes identically at this index."""
    _check_tag(tag)
    if tag == "A":
        return i.L == 0
    if tag == "E":
        return norm_squared_E(i) == 0
    if tag == "Eprime":
        return norm_squared_Eprime(i) == 0
    return False


def oneform_field(tag: str, i: ModeIndex, normalized: bool = False):
    """Family member as a closure over HopfPoint batches.

    With normalized=True the closure divides by the closed-form norm;
    null modes are refused rather than silently zeroed.
    """
    _check_tag(tag)
    scale = 1.0
    if normalized:
        n2 = closed_form_gram(tag, tag, i, i).real
        if n2 <= 0.0:
            raise DomainError(f"cannot normalize the null mode {tag}{i}")
        scale = 1.0 / math.sqrt(n2)

    def field(p: HopfPoint) -> PointForm:
        val = mode_point(tag, i, p)
        return PointForm(1, scale * val.components)

    return field


def coexact_field(b: CoexactBasisIndex, normalized: bool = True):
    return oneform_field(b.tag, b.index, normalized=normalized)


# ---------------------------------------------------------------------------
# closed-form scalar products
# ---------------------------------------------------------------------------

_ZERO_CROSS = {
    ("A", "E"), ("E", "A"),
    ("A", "Eprime"), ("Eprime", "A"),
    ("E", "Eprime"), ("Eprime", "E"),
}


def closed_form_gram(tag_a: str, tag_b: str, i: ModeIndex, j: ModeIndex) -> complex:
    """Exact value of the Hermitian product of two family members.

    Same-family diagonal entries, the B/C mixes, and the cross pairs
    among {A, E, Eprime} (which vanish) are supported; the value is zero
    whenever the scalar indices differ.
    """
    _check_tag(tag_a)
    _check_tag(tag_b)
    pair = (tag_a, tag_b)
    supported = (
        tag_a == tag_b
        or pair in _ZERO_CROSS
        or pair in {("B", "C"), ("C", "B"), ("Bprime", "Cprime"), ("Cprime", "Bprime")}
    )
    if not supported:
        raise DomainError(f"no closed form held for the pair ({tag_a}, {tag_b})")
    if i != j or pair in _ZERO_CROSS:
        return 0j
    L = i.L
    lam = -L * (L + 2)
    mu2 = -(i.two_mp**2)
    nu2 = -(i.two_mm**2)
    if pair == ("A", "A"):
        val = -lam
    elif pair == ("B", "B"):
        val = mu2 - lam + 4
    elif pair in (("B", "C"), ("C", "B")):
        val = -2 * (mu2 - 2 * lam + 4)
    elif pair == ("C", "C"):
        val = (4 - lam) * mu2 + (lam - 12) * lam + 16
    elif pair == ("Bprime", "Bprime"):
        val = nu2 - lam + 4
    elif pair in (("Bprime", "Cprime"), ("Cprime", "Bprime")):
        val = 2 * (nu2 - 2 * lam + 4)
    elif pair == ("Cprime", "Cprime"):
        val = (4 - lam) * nu2 + (lam - 12) * lam + 16
    elif pair == ("E", "E"):
        val = norm_squared_E(i)
    elif pair == ("Eprime", "Eprime"):
        val = norm_squared_Eprime(i)
    else:  # ("F", "F")
        val = 2 * (L + 1) * (L + 2) * ((L + 2) ** 2 - i.two_mp**2)
    return complex(val)


def norm_squared_E(i: ModeIndex) -> int:
    """Squared norm 2L(L+1)(L^2 - 4 m_plus^2); zero iff the mode is null."""
    return 2 * i.L * (i.L + 1) * (i.L**2 - i.two_mp**2)


def norm_squared_Eprime(i: ModeIndex) -> int:
    """Squared norm 2L(L+1)(L^2 - 4 m_minus^2); zero iff the mode is null."""
    return 2 * i.L * (i.L + 1) * (i.L**2 - i.two_mm**2)


# ---------------------------------------------------------------------------
# enumeration and dimensions
# ---------------------------------------------------------------------------


def enumerate_coexact(L: int):
    """Basis labels at level L: the E block then the Eprime block.

    Each block is lexicographic in (2m_plus, 2m_minus); boundary indices
    with a vanishing mode are excluded, leaving (L-1)(L+1) labels per
    block.
    """
    if L < 2:
        raise DomainError(f"co-exact basis requires L >= 2, got {L}")
    out = [
        CoexactBasisIndex("E", ModeIndex(L, tp, tm))
        for tp in range(-(L - 2), L - 1, 2)
        for tm in range(-L, L + 1, 2)
    ]
    out += [
        CoexactBasisIndex("Eprime", ModeIndex(L, tp, tm))
        for tp in range(-L, L + 1, 2)
        for tm in range(-(L - 2), L - 1, 2)
    ]
    return out


def dimension_exact(L: int) -> int:
    """Degeneracy (L+1)^2 of the exact one-forms at eigenvalue -L(L+2)."""
    if L < 1:
        raise DomainError(f"exact one-forms require L >= 1, got {L}")
    return (L + 1) ** 2


def dimension_coexact(L: int) -> int:
    """Degeneracy 2(L-1)(L+1) of the co-exact one-forms at eigenvalue -L^2."""
    if L < 2:
        raise DomainError(f"co-exact one-forms require L >= 2, got {L}")
    return 2 * (L - 1) * (L + 1)
