"""Riemann zeta function: Dirichlet series, condensed alternating series and oracles."""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from ..series import Scalar, SeriesError, SeriesTerms, SignPattern


class PoleError(SeriesError):
    pass


def _power(base: int, expo: Scalar) -> Scalar:
    """``base ** expo`` for an integer base, principal branch for complex exponents."""
    if isinstance(expo, complex):
        return cmath.exp(expo * math.log(base))
    return math.pow(base, expo)


def zeta_dirichlet_terms(z: Scalar) -> SeriesTerms:
    """Terms ``a(m) = (m + 1)^(-z)`` of the Dirichlet series.

    Real ``z > 1`` is tagged monotone; anything else is tagged general.
    Every ``z != 1`` carries the closed-form condensed terms, which also define
    the alternating series where the Dirichlet series itself diverges.
    """
    z = _normalize(z)

    def a(m: int) -> Scalar:
        return _power(m + 1, -z)

    if z == 1:
        return SeriesTerms(a, SignPattern.GENERAL, "zeta(1)")
    hook = zeta_alt_terms(z)
    if isinstance(z, float) and z > 1:
        return SeriesTerms(a, SignPattern.MONOTONE_NONNEGATIVE, f"zeta({z!r})", hook)
    return SeriesTerms(a, SignPattern.GENERAL, f"zeta({z!r})", hook)


def _normalize(z: Scalar) -> Scalar:
    if isinstance(z, complex):
        return float(z.real) if z.imag == 0 else z
    return float(z)


def zeta_truncation_estimate(z: float, n: int) -> float:
    """Leading two terms of ``zeta(z) - sum_{m<=n} (m+1)^(-z)`` for real ``z > 1``."""
    if not z > 1:
        raise ValueError("z must be > 1")
    n1 = n + 1.0
    return n1 ** (1 - z) / (z - 1) - 0.5 / n1**z


def _prefactor(z: Scalar) -> Scalar:
    if z == 1:
        raise PoleError("zeta has a pole at z = 1")
    if isinstance(z, complex):
        return 1.0 / (1.0 - cmath.exp((1 - z) * math.log(2)))
    return 1.0 / (1.0 - math.pow(2.0, 1.0 - z))


def zeta_condensed_closed(z: Scalar, j: int) -> Scalar:
    """Condensed term ``A_j = (j+1)^(-z) / (1 - 2^(1-z))`` of the Dirichlet series.

    The inner geometric series is summed in closed form, so this is also the
    summed value when ``|2^(1-z)| > 1``.
    """
    z = _normalize(z)
    return _prefactor(z) * _power(j + 1, -z)


def zeta_alt_terms(z: Scalar) -> Callable[[int], Scalar]:
    """Return a function ``j -> A_j`` for the alternating zeta series."""
    z = _normalize(z)
    pre = _prefactor(z)
    return lambda j: pre * _power(j + 1, -z)


def zeta_alt_partial_sums(z: Scalar, n: int) -> list[Scalar]:
    """``S_0 .. S_n`` of ``zeta(z) = sum_j (-1)^j (j+1)^(-z) / (1 - 2^(1-z))``."""
    A = zeta_alt_terms(z)
    out = []
    acc: Scalar = 0.0
    for j in range(n + 1):
        acc = acc + A(j) if j % 2 == 0 else acc - A(j)
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def bernoulli_fractions(m_max: int) -> tuple[Fraction, ...]:
    """Exact ``B_0 .. B_{m_max}`` from ``sum_{j<=m} C(m+1, j) B_j = 0`` (``B_1 = -1/2``)."""
    B = [Fraction(1)]
    for m in range(1, m_max + 1):
        acc = sum((math.comb(m + 1, j) * B[j] for j in range(m)), Fraction(0))
        B.append(-acc / (m + 1))
    return tuple(B)


def bernoulli_numbers(q: int) -> list[float]:
    """``B_0 .. B_{2q}`` as doubles."""
    if q < 0 or q > 30:
        raise ValueError("q must lie in 0..30")
    return [float(b) for b in bernoulli_fractions(2 * q)]


def zeta_neg_int(l: int) -> float:
    """``zeta(-l)`` for a non-negative integer ``l`` from Bernoulli numbers."""
    if l < 0:
        raise ValueError("l must be >= 0")
    if l == 0:
        return -0.5
    if l % 2 == 0:
        return 0.0
    m2 = l + 1
    return float(-bernoulli_fractions(m2)[m2] / m2)


def euler_maclaurin_zeta(z: float, N: int = 100, q: int = 8) -> float:
    """Reference value of ``zeta(z)``, real ``z > 1``.

    Sums the first ``N`` Dirichlet terms directly and replaces the tail
    ``sum_{m>=N} f(m)``, ``f(x) = (x+1)^(-z)``, by its Euler-Maclaurin
    expansion with ``q`` Bernoulli corrections.
    """
    if not z > 1:
        raise ValueError("z must be > 1")
    if N < 10 or not 1 <= q <= 10:
        raise ValueError("need N >= 10 and 1 <= q <= 10")
    x = N + 1.0
    head = math.fsum(math.pow(m + 1, -z) for m in range(N))
    parts = [head, x ** (1 - z) / (z - 1), 0.5 * x**-z]
    B = bernoulli_fractions(2 * q)
    # f^(k)(N) = (-z)(-z-1)...(-z-k+1) x^(-z-k)
    falling = 1.0
    for k in range(1, 2 * q):
        falling *= -z - (k - 1)
        if k % 2 == 1:
            j2 = k + 1
            parts.append(-float(B[j2]) / math.factorial(j2) * falling * x ** (-z - k))
    return math.fsum(parts)
