"""Morrow-Patterson interpolation nodes on the square: constructions, the
exact cubature rule, the interpolation operator with certified-fast kernel
evaluation, and admissible-mesh machinery."""

from .chebkernel import (
    SINGULAR_THRESHOLD,
    TrigSumKind,
    TripleSineArgs,
    cheb_t,
    cheb_u,
    cheb_u_values,
    trig_sum_closed,
    trig_sum_direct,
    triple_sine_sum_closed,
    triple_sine_sum_direct,
    weighted_sine_product_sum_closed,
    weighted_sine_product_sum_direct,
)
from .cubature import (
    CubatureRule,
    IntegrationResult,
    cubature_rule,
    discrete_moment_closed,
    discrete_moment_direct,
    exactness_table,
    integrate,
)
from .errors import (
    DomainError,
    InvalidDegreeError,
    ParameterError,
    SingularityError,
)
from .interp import (
    GridSpec,
    KernelDiagnostics,
    KernelEvalConfig,
    KernelMethod,
    LebesgueReport,
    bound_hyperinterp,
    interpolate,
    kernel_direct,
    kernel_fast,
    lebesgue_constant,
    lebesgue_function,
    lebesgue_grid_eval,
    subsquare_bound,
)
from .meshes import (
    AdmissibleMesh,
    certified_sup_norm,
    covering_radius,
    dubiner_distance,
    fine_grid_norm,
    mesh_a,
    mesh_b,
    random_polynomial,
)
from .nodes import (
    InterlacingDecomposition,
    NodeFamily,
    NodeSet,
    Point2,
    dubiner_equispacing_check,
    extended_mp,
    interlacing_decomposition,
    lissajous_point,
    lissajous_samples,
    morrow_patterson,
    mp_angle_grid,
    mp_from_padua,
    mp_weights,
    padua,
    vanishing_polynomial,
)

__version__ = "0.1.0"
