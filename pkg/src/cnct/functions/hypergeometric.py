"""Terms of generalized hypergeometric series p+1Fp evaluated in O(1) per index."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ..series import SeriesError, SeriesTerms, SignPattern, exact_real, log_real, power_sequence

# Stirling-series coefficients B_2k / (2k (2k-1)), k = 1..8
_STIRLING = (
    1.0 / 12,
    -1.0 / 360,
    1.0 / 1260,
    -1.0 / 1680,
    1.0 / 1188,
    -691.0 / 360360,
    1.0 / 156,
    -3617.0 / 122400,
)
_STIRLING_MIN = 30.0


class ParameterPole(SeriesError):
    pass


def log_gamma(x: float) -> float:
    """``ln Gamma(x)`` for ``x > 0``."""
    if not x > 0:
        raise ValueError("log_gamma requires x > 0")
    return math.lgamma(x)


def _stirling_tail(t: float) -> float:
    r = 1.0 / t
    r2 = r * r
    acc = 0.0
    for c in reversed(_STIRLING):
        acc = acc * r2 + c
    return acc * r


def log_gamma_ratio(x: float, y: float) -> float:
    """``ln Gamma(x) - ln Gamma(y)`` for positive ``x, y`` without cancellation.

    When both arguments are large the Stirling forms are subtracted
    analytically, so the result keeps full relative accuracy even for
    arguments near 2^60 where the individual log-gammas are ~1e19.
    """
    if min(x, y) < _STIRLING_MIN:
        return math.lgamma(x) - math.lgamma(y)
    d = x - y
    main = (x - 0.5) * math.log1p(d / y) + d * math.log(y) - d
    return main + (_stirling_tail(x) - _stirling_tail(y))


def _is_nonpositive_int(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _log_pochhammer_sum(num, den, m: float) -> float:
    """``sum_i ln[Gamma(m + a_i) / Gamma(m + b_i)]`` for ``m + min(params) >= 30``.

    The ``ln m`` pieces are collected into one product with the net exponent
    ``sum(a_i - b_i)``, so large indices cost no more than rounding of that
    single term.
    """
    total_d = 0.0
    acc = 0.0
    for a, b in zip(num, den):
        d = a - b
        x, y = m + a, m + b
        total_d += d
        acc += (x - 0.5) * math.log1p(d / y) + d * math.log1p(b / m) - d
        acc += _stirling_tail(x) - _stirling_tail(y)
    return acc + total_d * math.log(m)


@dataclass(frozen=True)
class HypParams:
    numerator: tuple[float, ...]
    denominator: tuple[float, ...]
    z: Union[float, str]

    def __post_init__(self):
        if len(self.numerator) != len(self.denominator) + 1:
            raise ValueError("need p+1 numerator and p denominator parameters")
        for b in self.denominator:
            if _is_nonpositive_int(b):
                raise ParameterPole(f"denominator parameter {b} is zero or a negative integer")


def pfq_terms(p: HypParams) -> SeriesTerms:
    """Terms ``prod (alpha_i)_m / prod (beta_j)_m * z^m / m!``.

    Below a parameter-dependent cutover ``M`` (at least 30) the Pochhammer
    products are multiplied out; beyond it the term is ``P_M`` times a
    Stirling-form log-gamma difference, so the cost per index is bounded.
    """
    num = sorted(float(a) for a in p.numerator)
    den = sorted([float(b) for b in p.denominator] + [1.0])
    zq = exact_real(p.z)
    zn = power_sequence(zq)
    lz = log_real(abs(zq)) if zq != 0 else -math.inf
    lowest = min(num + den)
    cutover = 30 + (math.ceil(-lowest) if lowest < 0 else 0)
    terminate_at = min((int(-a) for a in num if _is_nonpositive_int(a)), default=None)

    def ratio_product(m: int) -> float:
        v = 1.0
        for i in range(m):
            for x, y in zip(num, den):
                v *= (x + i) / (y + i)
        return v

    p_cut = ratio_product(cutover)
    l_cut = _log_pochhammer_sum(num, den, float(cutover)) if terminate_at is None else 0.0

    def a(m: int) -> float:
        if m < cutover:
            return ratio_product(m) * zn(m)
        if terminate_at is not None or zq == 0:
            return 0.0
        log_ratio = _log_pochhammer_sum(num, den, float(m)) - l_cut
        v = p_cut * math.exp(log_ratio + m * lz)
        return -v if zq < 0 and m % 2 else v

    positive = zq > 0 and all(x > 0 for x in num) and all(y > 0 for y in den)
    pattern = SignPattern.MONOTONE_NONNEGATIVE if positive else SignPattern.GENERAL
    label = f"pFq({','.join(map(str, p.numerator))};{','.join(map(str, p.denominator))};{p.z})"
    return SeriesTerms(a, pattern, label)


#: 3F2(1, 3, 7; 5/2, 14; 1) from Watson's summation theorem
WATSON_3F2 = 10.0 * 567567.0 * math.pi**2 / 20971520.0
