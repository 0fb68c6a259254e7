"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ChartDomainError(DomainError):
    """A point (or a finite-difference stencil) leaves the interior chart
    0 < alpha < pi/2."""


class InvalidModeError(ValueError):
    """A mode index violates one of its constraints (range, parity,
    integrality, or a family-specific bound)."""


class GridResolutionError(ValueError):
    """A quadrature grid is too coarse for the requested product degree."""


class FieldEvaluationError(RuntimeError):
    """A field closure failed while being sampled on a quadrature grid."""


class DegreeError(ValueError):
    """A form-degree mismatch: wedge overflow past the top degree,
    contraction of a 0-form, or an operator applied at the wrong degree."""
