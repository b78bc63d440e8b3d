"""
Spectral factorization, scattering and causality for stationary series,
with the Riemann Hypothesis for curves over finite fields as the main
application.
"""
from .errors import *  # noqa: F401,F403
from .poly import (
    ComplexPolynomial,
    RationalFunction,
    RootSet,
    circle_points,
    laurent_coefficients,
    poly_roots,
    rational_eval_circle,
)
from .hardy import (
    BlaschkeProduct,
    CepstralOuter,
    FactorizedFunction,
    InnernessCertificate,
    factor_rational,
    hardy_representative,
    is_inner,
    outer_from_density,
    szego_condition,
)
from .timeseries import (
    AutocovarianceSequence,
    MovingAverageModel,
    SamplePath,
    SpectralDensity,
    autocovariance,
    estimate_autocovariance,
    one_sided_representation,
    purely_innovating,
    synthesize,
    white_noise,
)
from .scattering import (
    CausalityVerdict,
    ScatteringPair,
    causality_test,
    dual_scattering,
    naive_scattering,
    relations_check,
    scattering_pair,
)
from .fields import FiniteField
from .zeta import (
    CurveSpec,
    CurveZeta,
    check_rh,
    class_number,
    count_points,
    e_coefficients,
    functional_equation_residual,
    psi_from_zeta,
    rh_by_roots,
    rh_by_scattering,
    zeta_from_curve,
    zeta_from_numerator,
    zeta_from_point_counts,
)

__version__ = "0.1.0"
