"""Lerch transcendent and polylogarithm term generators."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ..series import SeriesTerms, SignPattern, exact_real, power_sequence

Real = Union[float, str]


@dataclass(frozen=True)
class LerchParams:
    """Parameters of ``Phi(z, s, alpha)``; ``z`` may be a decimal string."""

    z: Real
    s: float
    alpha: float

    def __post_init__(self):
        if not float(self.alpha) > 0:
            raise ValueError("alpha must be positive")
        if abs(exact_real(self.z)) > 1:
            raise ValueError("|z| must not exceed 1")


def lerch_terms(p: LerchParams) -> SeriesTerms:
    """Terms ``z^n / (alpha + n)^s`` of Phi(z, s, alpha)."""
    zq = exact_real(p.z)
    s, alpha = float(p.s), float(p.alpha)
    zn = power_sequence(zq)

    def a(n: int) -> float:
        w = zn(n)
        if w == 0.0:
            return 0.0
        return w * math.pow(alpha + n, -s)

    pattern = SignPattern.MONOTONE_NONNEGATIVE if zq >= 0 else SignPattern.ALTERNATING
    return SeriesTerms(a, pattern, f"Phi({p.z},{s!r},{alpha!r})")


def polylog_terms(s: float, z: Real) -> SeriesTerms:
    """Terms ``z^(k+1) / (k+1)^s`` of Li_s(z) = z Phi(z, s, 1)."""
    zq = exact_real(z)
    if abs(zq) > 1:
        raise ValueError("|z| must not exceed 1")
    s = float(s)
    zn = power_sequence(zq)

    def a(k: int) -> float:
        w = zn(k + 1)
        if w == 0.0:
            return 0.0
        return w * math.pow(k + 1, -s)

    pattern = SignPattern.MONOTONE_NONNEGATIVE if zq >= 0 else SignPattern.ALTERNATING
    return SeriesTerms(a, pattern, f"Li{s!r}({z})")
