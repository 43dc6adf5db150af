"""Numerical toolkit for the quadrilateral zeta function

    Q(s, a) = (zeta(s, a) + zeta(s, 1-a) + Li(s, a) + Li(s, 1-a)) / 2,   0 < a <= 1/2.
"""

from .dirichlet import (
    Character,
    CharacterTable,
    RationalShift,
    admissible_shifts,
    enumerate_characters,
    gauss_sum,
    hurwitz_by_characters,
    l_function,
    li_by_characters,
    li_by_characters_coprime,
    q_decompose,
    q_decompose_single_modulus,
)
from .errors import (
    BracketError,
    ContourError,
    DomainError,
    ExcludedPointError,
    PoleError,
    PrecisionError,
    QuadratureError,
    QZetaError,
    RangeError,
)
from .hurwitz import (
    approx_hurwitz_critical,
    approx_li_critical,
    hurwitz_zeta,
    hurwitz_zeta_regular,
    hurwitz_zeta_with_error,
    p_pair,
    p_pair_via_functional_equation,
    periodic_zeta,
    periodic_zeta_with_error,
    z_pair,
)
from .options import DEFAULT_OPTIONS, EvalOptions, ShiftParameter
from .quadzeta import (
    QPoint,
    chi_factor,
    fe_residual,
    hardy_z,
    q_eval,
    quadrilateral_zeta,
    residue_check,
    residue_estimate,
    xi_completed,
)
from .special import bernoulli_even, gamma, log_gamma, log_gamma_factor, rs_theta
from .theta import ThetaValue, g_theta, g_theta_complex, integral_xi, modular_residual
from .windows import (
    WindowParams,
    WindowReport,
    detect_zeros_by_windows,
    i_window,
    j_window,
    parseval_check,
    window_report,
)
from .zeros import (
    CountReport,
    ZeroRecord,
    count_argument_principle,
    count_lower_bound_profile,
    find_a0,
    local_winding,
    main_term,
    real_zeros_unit_interval,
    scan_critical_line,
)

__version__ = "0.1.0"
