"""Verblunsky coefficients, unit-circle orthogonal polynomials, logarithmic
moments and explicit sum rules, with quadrature and enumeration oracles."""

from .errors import (
    BadDecay,
    FactorizationUnstable,
    NoConvergence,
    NotNonnegative,
    OutOfDisk,
    UnsupportedOrder,
)
from .general_wm import (
    alpha_series,
    check_condition_559,
    check_conjecture_519,
    coeff_sum,
    cos_power,
    decompositions,
    fejer_riesz,
    general_sum_rule,
    partitions,
    series_count,
    shift_identity_residual,
    w_general,
)
from .logmoments import (
    LogMomentTable,
    d_direct,
    d_from_w,
    single_index_property,
    w0_closed,
    w_closed,
    w_from_d,
)
from .measures import (
    BernsteinSzegoMeasure,
    TrigWeightPoly,
    bs_measure,
    fourier_log,
    integrate_Z,
    moment_oracle,
    szego_taylor,
    weight,
)
from .moments import (
    LowerUnitriangular,
    b_inverse,
    kappa,
    limit_diagnostics,
    moment_c,
    verblunsky_identity_residual,
)
from .opuc_core import (
    Method,
    MonicOpucPolynomial,
    brick_G,
    build_polynomials,
    coefficient,
    reversed_poly,
)
from .sumrules import (
    RULE_IDS,
    SumRuleReport,
    WEIGHTS,
    condition_diagnostics,
    linear_combination_checks,
    sum_rule,
)
from .verblunsky import VerblunskySequence, make_explicit, make_geometric, rho

__all__ = [
    "BadDecay",
    "BernsteinSzegoMeasure",
    "FactorizationUnstable",
    "LogMomentTable",
    "LowerUnitriangular",
    "Method",
    "MonicOpucPolynomial",
    "NoConvergence",
    "NotNonnegative",
    "OutOfDisk",
    "RULE_IDS",
    "SumRuleReport",
    "TrigWeightPoly",
    "UnsupportedOrder",
    "VerblunskySequence",
    "WEIGHTS",
    "alpha_series",
    "b_inverse",
    "brick_G",
    "bs_measure",
    "build_polynomials",
    "check_condition_559",
    "check_conjecture_519",
    "coeff_sum",
    "coefficient",
    "condition_diagnostics",
    "cos_power",
    "d_direct",
    "d_from_w",
    "decompositions",
    "fejer_riesz",
    "fourier_log",
    "general_sum_rule",
    "integrate_Z",
    "kappa",
    "limit_diagnostics",
    "linear_combination_checks",
    "make_explicit",
    "make_geometric",
    "moment_c",
    "moment_oracle",
    "partitions",
    "reversed_poly",
    "rho",
    "series_count",
    "shift_identity_residual",
    "single_index_property",
    "sum_rule",
    "szego_taylor",
    "verblunsky_identity_residual",
    "w0_closed",
    "w_closed",
    "w_from_d",
    "w_general",
    "weight",
]
