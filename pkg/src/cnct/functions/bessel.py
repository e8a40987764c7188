"""Partial-wave model series of products of spherical Bessel and Hankel functions.

    exp(-y(1-r)) / (y(1-r)) = - sum_l (2l+1) j_l(iry) h_l^(1)(iy),   0 < r < 1, y > 0

The raw factors over- and underflow once l reaches a few hundred while their
product stays O(r^l), so each term is evaluated as

    (2l+1) j_l(iry) h_l^(1)(iy) = -(r^l / y) * J_l(ry) * H_l(y)

with two scaled factors that both tend to 1 as l grows:

    J_l(x) = j_l(ix) (2l+1)!! / (ix)^l                  (power series in x^2)
    H_l(y) = e^-y sum_k (l+k)! / (k! (l-k)! (2y)^k) * y^l / (2l-1)!!
                                                         (explicit finite sum)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ..series import SeriesError, SeriesTerms, SignPattern, exact_real, power_sequence

_TINY = 1e-17
_GUARD = (1e-8, 1e8)


class OverflowGuard(SeriesError):
    pass


@dataclass(frozen=True)
class BesselSumParams:
    """``0 < r < 1`` and ``y > 0``; decimal strings are taken at their exact value."""

    r: Union[float, str]
    y: Union[float, str]

    def __post_init__(self):
        if not 0 < exact_real(self.r) < 1:
            raise ValueError("r must lie in (0, 1)")
        if not exact_real(self.y) > 0:
            raise ValueError("y must be positive")


def scaled_bessel_j(l: int, x: float) -> float:
    """``j_l(ix) (2l+1)!! / (ix)^l`` summed from its power series in ``x^2``."""
    h = 0.5 * x * x
    term = 1.0
    acc = 1.0
    m = 0
    while True:
        m += 1
        term *= h / (m * (2 * l + 2 * m + 1))
        acc += term
        if term < _TINY * acc:
            return acc


def scaled_hankel(l: int, y: float) -> float:
    """``(2/pi) k_l(y) y^(l+1) / (2l-1)!!``, i.e. ``h_l^(1)(iy) (iy)^(l+1) / (-i (2l-1)!!)``.

    The finite sum is walked downward from its dominant ``k = l`` term; the
    term ratio decreases monotonically, so the walk stops once the remaining
    geometric tail is negligible.
    """
    c = 1.0
    acc = 1.0
    for k in range(l, 0, -1):
        ratio = 2.0 * y * k / ((l + k) * (l - k + 1))
        c *= ratio
        acc += c
        if ratio < 1 and c * ratio / (1 - ratio) < _TINY * acc:
            break
    return math.exp(-y) * acc


def bessel_product_terms(p: BesselSumParams) -> SeriesTerms:
    """Terms ``(2l+1) j_l(iry) h_l^(1)(iy)``; all real and negative."""
    rq, yq = exact_real(p.r), exact_real(p.y)
    y = float(yq)
    x = float(rq * yq)
    r_pow = power_sequence(rq)

    def a(l: int) -> float:
        pre = r_pow(l) / y
        if pre == 0.0:
            return -0.0
        J = scaled_bessel_j(l, x)
        H = scaled_hankel(l, y)
        if not (_GUARD[0] < J < _GUARD[1] and _GUARD[0] < H < _GUARD[1]):
            raise OverflowGuard(f"scaled factors out of range at l={l}: J={J!r}, H={H!r}")
        return -(pre * J * H)

    return SeriesTerms(a, SignPattern.MONOTONE_NONPOSITIVE, f"bessel-sum(r={p.r},y={p.y})")


def bessel_sum_closed_form(p: BesselSumParams) -> float:
    """``exp(-y(1-r)) / (y(1-r))``; the series sums to the negative of this."""
    u = float(exact_real(p.y) * (1 - exact_real(p.r)))
    if u <= 0:
        raise SeriesError("pole at y(1-r) = 0")
    return math.exp(-u) / u
