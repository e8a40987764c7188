"""Closed forms behind the exactness results for alternating power sums."""
from __future__ import annotations

import math


def alternating_power_tail(n: int, l: int) -> float:
    """Abel sum of ``sum_nu (-1)^nu (n + nu + 2)^l`` for ``l = 1..4``."""
    if l == 1:
        return (2 * n + 3) / 4
    if l == 2:
        return (n + 1) * (n + 2) / 2
    if l == 3:
        return (2 * n + 3) * (2 * n * n + 6 * n + 3) / 8
    if l == 4:
        return (n + 1) * (n + 2) * (n * n + 3 * n + 1) / 2
    raise ValueError(f"unsupported power l={l}; closed forms exist for l = 1..4")


def one_f_zero_value(l: int) -> float:
    """``l! 1F0(l+1; ; -1) = sum_j (-1)^j (j+1)_l = l! / 2^(l+1)`` (Abel sum)."""
    if not 0 <= l <= 20:
        raise ValueError("l must lie in 0..20")
    return math.factorial(l) / 2.0 ** (l + 1)


def rising_power_terms(l: int):
    """``j -> (j+1)_l``, magnitudes of the alternating series summed above."""

    def A(j: int) -> float:
        return float(math.prod(range(j + 1, j + 1 + l)))

    return A
