"""Exact machinery for coefficients of integer powers of log(1+x)/x:
truncated big-rational power series, p-adic valuations, weighted multinomial
coefficients, and a verification harness for the valuation identities and
zero-coefficient characterization they satisfy.
"""

from .exact_arith import (
    INFINITY,
    HypothesisError,
    Rational,
    Valuation,
    falling_multinomial,
    multinomial,
    nu_int,
    nu_rat,
    parse_rational,
    require_prime,
    to_rational,
)
from .series import (
    TruncSeries,
    bernoulli,
    coeff_valuation,
    int_pow,
    log_series,
    mul,
    reciprocal,
    scale_variable,
)
from .combinatorics import (
    IndexTuple,
    c_coeff,
    c_recursion_holds,
    enumerate_weighted,
    format_index_tuple,
    parse_index_tuple,
    size,
    term_valuation,
    term_value,
    unit_tuple,
    valuation_inequality_holds,
    weight,
)
from .harness import (
    VerifyReport,
    all_pass,
    reconstruct,
    render_json_lines,
    render_tsv,
    verify_falling_valuation,
    verify_main,
    verify_offset_bound,
    verify_offset_equality,
    verify_reconstruct,
    verify_zero_coeffs,
    verify_zero_property,
)

__version__ = "0.1.0"
