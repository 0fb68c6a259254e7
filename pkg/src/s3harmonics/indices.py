"""Mode indices for the scalar harmonics and the co-exact one-form bases.

A scalar mode is labelled by (L, m_plus, m_minus) where L is a non-negative
integer and m_plus, m_minus both run over -L/2, -L/2 + 1, ..., L/2.  For odd
L the labels are half-odd integers, so they are stored doubled (``two_mp``,
``two_mm``) and every arithmetic consumer works with exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidModeError

__all__ = ["ModeIndex", "CoexactBasisIndex", "as_mode_index"]


@dataclass(frozen=True, order=True)
class ModeIndex:
    """Label of one scalar harmonic.

    Attributes
    ----------
    L : int
        Total level; the scalar eigenvalue is -L*(L+2).
    two_mp, two_mm : int
        Doubled azimuthal labels 2*m_plus and 2*m_minus.  Both must have
        the parity of L and lie in [-L, L].
    """

    L: int
    two_mp: int
    two_mm: int

    def __post_init__(self) -> None:
        if not isinstance(self.L, int) or self.L < 0:
            raise InvalidModeError(f"L must be a non-negative integer, got {self.L!r}")
        for name, tm in (("m_plus", self.two_mp), ("m_minus", self.two_mm)):
            if not isinstance(tm, int):
                raise InvalidModeError(f"2*{name} must be an integer, got {tm!r}")
            if abs(tm) > self.L:
                raise InvalidModeError(
                    f"|{name}| must not exceed L/2: got {name} = {Fraction(tm, 2)} at L = {self.L}"
                )
            if (tm - self.L) % 2 != 0:
                raise InvalidModeError(
                    f"2*{name} must have the parity of L: got {tm} at L = {self.L}"
                )

    # -- exact rational views -------------------------------------------------

    @property
    def mp(self) -> Fraction:
        return Fraction(self.two_mp, 2)

    @property
    def mm(self) -> Fraction:
        return Fraction(self.two_mm, 2)

    # -- derived integer labels ----------------------------------------------

    @property
    def S(self) -> int:
        """phi-winding number; d/dphi multiplies the mode by i*S."""
        return (self.two_mp - self.two_mm) // 2

    @property
    def D(self) -> int:
        """theta-winding number; d/dtheta multiplies the mode by i*D."""
        return (self.two_mp + self.two_mm) // 2

    @property
    def n(self) -> int:
        """Polynomial degree L/2 - m_plus of the radial factor."""
        return (self.L - self.two_mp) // 2

    def __str__(self) -> str:
        return f"({self.L}, {self.mp}, {self.mm})"


def as_mode_index(L: int, mp, mm) -> ModeIndex:
    """Build a ModeIndex from rational labels (Fraction, int, or 'p/q' string)."""
    mp = Fraction(mp)
    mm = Fraction(mm)
    for name, m in (("m_plus", mp), ("m_minus", mm)):
        if (2 * m).denominator != 1:
            raise InvalidModeError(f"{name} must be an integer or half-odd integer, got {m}")
    return ModeIndex(int(L), int(2 * mp), int(2 * mm))


_COEXACT_TAGS = ("E", "Eprime")


@dataclass(frozen=True, order=True)
class CoexactBasisIndex:
    """Label of one member of the co-exact one-form basis.

    ``tag`` is "E" or "Eprime".  The E family excludes the boundary
    |m_plus| = L/2 (where the mode vanishes identically) and the Eprime
    family excludes |m_minus| = L/2; both require L >= 2.
    """

    tag: str
    index: ModeIndex

    def __post_init__(self) -> None:
        if self.tag not in _COEXACT_TAGS:
            raise InvalidModeError(f"co-exact family tag must be one of {_COEXACT_TAGS}, got {self.tag!r}")
        i = self.index
        if i.L < 2:
            raise InvalidModeError(f"co-exact basis requires L >= 2, got L = {i.L}")
        if self.tag == "E" and abs(i.two_mp) > i.L - 2:
            raise InvalidModeError(
                f"E basis requires |m_plus| <= L/2 - 1: got m_plus = {i.mp} at L = {i.L}"
            )
        if self.tag == "Eprime" and abs(i.two_mm) > i.L - 2:
            raise InvalidModeError(
                f"Eprime basis requires |m_minus| <= L/2 - 1: got m_minus = {i.mm} at L = {i.L}"
            )

    def __str__(self) -> str:
        return f"{self.tag}{self.index}"
