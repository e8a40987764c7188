"""Term generators and reference values for the shipped test problems."""
from .bessel import BesselSumParams, bessel_product_terms, bessel_sum_closed_form, scaled_bessel_j, scaled_hankel
from .exactness import alternating_power_tail, one_f_zero_value, rising_power_terms
from .hypergeometric import WATSON_3F2, HypParams, ParameterPole, log_gamma, log_gamma_ratio, pfq_terms
from .lerch import LerchParams, lerch_terms, polylog_terms
from .zeta import (
    PoleError,
    bernoulli_fractions,
    bernoulli_numbers,
    euler_maclaurin_zeta,
    zeta_alt_partial_sums,
    zeta_alt_terms,
    zeta_condensed_closed,
    zeta_dirichlet_terms,
    zeta_neg_int,
    zeta_truncation_estimate,
)

__all__ = [
    "BesselSumParams",
    "HypParams",
    "LerchParams",
    "ParameterPole",
    "PoleError",
    "WATSON_3F2",
    "alternating_power_tail",
    "bernoulli_fractions",
    "bernoulli_numbers",
    "bessel_product_terms",
    "bessel_sum_closed_form",
    "euler_maclaurin_zeta",
    "log_gamma",
    "log_gamma_ratio",
    "lerch_terms",
    "one_f_zero_value",
    "pfq_terms",
    "polylog_terms",
    "rising_power_terms",
    "scaled_bessel_j",
    "scaled_hankel",
    "zeta_alt_partial_sums",
    "zeta_alt_terms",
    "zeta_condensed_closed",
    "zeta_dirichlet_terms",
    "zeta_neg_int",
    "zeta_truncation_estimate",
]
