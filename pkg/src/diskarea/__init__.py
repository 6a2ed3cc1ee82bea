"""Harmonic self-maps of the unit disk: areas of concentric-disk images,
contraction and boundary-flux verification, and the pointwise identities
behind them.  The quadratic-cost kernels run through a compiled core when the
extension is built (``diskarea.pair_sums.BACKEND`` says which path is live).
"""

from .area import (
    EXACT_FAMILY,
    GREEN_QUADRATURE,
    GREEN_SPECTRAL,
    JACOBIAN_GRID,
    KERNEL_DIRECT,
    KERNEL_FFT,
    METHODS,
    AreaEstimate,
    area_green_quadrature,
    area_green_spectral,
    area_jacobian_grid,
    area_kernel,
    area_kernel_defining_integral,
    area_kernel_direct,
    area_kernel_fft,
    exact_family_area,
    family_boundary_map,
    family_coeffs,
)
from .circle_maps import (
    HOMEOMORPHISM,
    NONDECREASING_STEP,
    TWO_PI,
    BoundaryMap,
    boundary_values,
    conjugate_map,
    eval_lift,
    from_json,
    make_identity,
    make_mobius_boundary,
    make_random_homeomorphism,
    make_rotation,
    make_step_map,
    map_hash,
    mollify_map,
    to_json,
)
from .pair_sums import BACKEND, HAVE_COMPILED
from .poisson import (
    FourierCoeffs,
    eval_harmonic,
    eval_harmonic_direct,
    eval_harmonic_step,
    eval_theta_derivative,
    fourier_from_boundary,
    poisson_kernel,
    poisson_kernel_deriv,
    sample_count,
    semigroup_residual,
    wirtinger_on_circle,
)
from .proof_checks import (
    MonotoneProfile,
    check_gap_double_integral,
    check_mirror_pair_identity,
    check_reduction_chain,
    check_tangent_gap_signs,
    cos_identity_residual,
    increment_mean_residual,
    increment_profile,
    mirror_pair_residual,
    profile_gap_integral,
    random_profile,
    reflect_profile,
    strict_interior_positivity,
    tangent_gap,
)
from .verify import (
    HypothesisViolationError,
    VerdictRecord,
    boundary_jacobian_integral,
    check_area_contraction,
    equality_slack,
    estimate_area,
    holomorphic_convexity_check,
    lift_identity_deviation,
    schwarz_bound,
    schwarz_bound_check,
    winding_injectivity_check,
)

__version__ = "0.1.0"
