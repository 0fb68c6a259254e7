"""Explicit one-form eigenmodes of the Laplacian on the round 3-sphere.

The package builds the scalar harmonics on S^3 in the Hopf chart,
derives from them the eight one-form families A, B, Bprime, C, Cprime,
E, Eprime and F together with the two unit Killing one-forms, and
verifies every differential and integral relation they satisfy:
curl eigenvalues, Laplace-de Rham eigenvalues, co-exactness, closed-form
Gram matrices, orthonormality under exact quadrature, degeneracy counts
and finite-difference cross-checks.
"""

from .errors import (
    ChartDomainError,
    DegreeError,
    DomainError,
    FieldEvaluationError,
    GridResolutionError,
    InvalidModeError,
)
from .exterior import (
    FormJet,
    PointForm,
    codifferential,
    d_form,
    d_scalar,
    d_scalar_jet,
    delta_jet,
    hodge,
    hodge_jet,
    inner_pointwise,
    interior,
    laplace_de_rham_oneform,
    laplace_jet,
    laplace_scalar_jet,
    one_form_jet,
    parity,
    point_form,
    star_d,
    star_d_jet,
    wedge,
)
from .fd_oracle import (
    FdConfig,
    fd_d_scalar,
    fd_delta,
    fd_directional,
    fd_laplace,
    fd_partial,
    fd_scalar_laplacian,
    fd_star_d,
)
from .geometry import (
    VOLUME,
    FrameWeights,
    HopfPoint,
    embed,
    flat,
    frame_weights,
    sample_interior_points,
    sharp,
    volume_density,
)
from .indices import CoexactBasisIndex, ModeIndex, as_mode_index
from .jets import ScalarJet, constant_jet, cos_alpha_jet, multi_indices, sin_alpha_jet
from .mode_families import (
    FAMILY_TAGS,
    KILLING_TAGS,
    closed_form_gram,
    coexact_field,
    dimension_coexact,
    dimension_exact,
    enumerate_coexact,
    killing_coordinate_closure,
    killing_field,
    killing_one_form,
    killing_point,
    mode,
    mode_coordinate_closure,
    mode_is_null,
    mode_point,
    norm_squared_E,
    norm_squared_Eprime,
    oneform_field,
)
from .quadrature import (
    QuadratureGrid,
    build_grid,
    gram,
    inner_product_oneform,
    inner_product_scalar,
)
from .scalar_modes import (
    SpectralData,
    enumerate_scalar,
    mode_value,
    mode_value_naive,
    scalar_field,
    scalar_mode_closure,
    scalar_mode_jet,
    spectral_data,
)
from .specialfn import (
    comb_general,
    jacobi,
    jacobi_derivative,
    jacobi_recurrence,
    jacobi_sum,
    normalization_constant,
)
from .verification import (
    SUITES,
    CheckResult,
    run_suite,
    suite_counts,
    suite_eigen,
    suite_identities,
    suite_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "ChartDomainError",
    "DegreeError",
    "DomainError",
    "FieldEvaluationError",
    "GridResolutionError",
    "InvalidModeError",
    "FormJet",
    "PointForm",
    "codifferential",
    "d_form",
    "d_scalar",
    "d_scalar_jet",
    "delta_jet",
    "hodge",
    "hodge_jet",
    "inner_pointwise",
    "interior",
    "laplace_de_rham_oneform",
    "laplace_jet",
    "laplace_scalar_jet",
    "one_form_jet",
    "parity",
    "point_form",
    "star_d",
    "star_d_jet",
    "wedge",
    "FdConfig",
    "fd_d_scalar",
    "fd_delta",
    "fd_directional",
    "fd_laplace",
    "fd_partial",
    "fd_scalar_laplacian",
    "fd_star_d",
    "VOLUME",
    "FrameWeights",
    "HopfPoint",
    "embed",
    "flat",
    "frame_weights",
    "sample_interior_points",
    "sharp",
    "volume_density",
    "CoexactBasisIndex",
    "ModeIndex",
    "as_mode_index",
    "ScalarJet",
    "constant_jet",
    "cos_alpha_jet",
    "multi_indices",
    "sin_alpha_jet",
    "FAMILY_TAGS",
    "KILLING_TAGS",
    "closed_form_gram",
    "coexact_field",
    "dimension_coexact",
    "dimension_exact",
    "enumerate_coexact",
    "killing_coordinate_closure",
    "killing_field",
    "killing_one_form",
    "killing_point",
    "mode",
    "mode_coordinate_closure",
    "mode_is_null",
    "mode_point",
    "norm_squared_E",
    "norm_squared_Eprime",
    "oneform_field",
    "QuadratureGrid",
    "build_grid",
    "gram",
    "inner_product_oneform",
    "inner_product_scalar",
    "SpectralData",
    "enumerate_scalar",
    "mode_value",
    "mode_value_naive",
    "scalar_field",
    "scalar_mode_closure",
    "scalar_mode_jet",
    "spectral_data",
    "comb_general",
    "jacobi",
    "jacobi_derivative",
    "jacobi_recurrence",
    "jacobi_sum",
    "normalization_constant",
    "SUITES",
    "CheckResult",
    "run_suite",
    "suite_counts",
    "suite_eigen",
    "suite_identities",
    "suite_oracle",
    "__version__",
]
