"""Modified Lommel functions of the first kind and bounds for their exponentially weighted integrals."""

from .bounds import (
    BoundKind,
    BoundResult,
    Side,
    best_lower,
    best_upper,
    evaluate_all,
    evaluate_bound,
    in_domain,
    two_sided_envelope,
)
from .gamma import lower_incomplete_gamma, reciprocal_gamma
from .harness import (
    GridConfig,
    TableSpec,
    VerificationReport,
    asymptotic_suite,
    compare_table,
    ratio_V,
    reproduce_table,
    run_grid_verification,
)
from .integral import (
    IntegralSpec,
    SlowConvergenceWarning,
    integral,
    integral_closed_form_beta1,
    integral_gamma_series,
    integral_power_series,
    integral_quadrature,
    normalized_F,
)
from .lommel import (
    EvalResult,
    LommelParams,
    a_term,
    large_x_asymptotic,
    lommel_t,
    lommel_t_tilde,
    ratio_lower_bound,
    recurrence_residual,
    small_x_asymptotic,
    struve_L,
    t_tilde,
)

__version__ = "0.1.0"
