"""Levin-type nonlinear sequence transformations.

Both transformations are ratios of weighted k-th differences,

    T_k^(n) = Delta^k{ w_k(n) s_n / omega_n } / Delta^k{ w_k(n) / omega_n },

with power weights ``(n + beta)^(k-1)`` (Levin) or Pochhammer weights
``(n + beta)_(k-1)`` (the S transformation).  With the Smith-Ford remainder estimate
``omega_n = Delta s_n`` they become the d and delta transformations.

The direct sums exist for cross-checking; tables are built with the
three-term recursions, one anti-diagonal at a time.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .series import Scalar

#: denominators smaller than this fraction of the sum of their summands' moduli are flagged
STABILITY_THRESHOLD = 1e-12

LEVIN = "levin-d"
WENIGER = "weniger-delta"
EULER = "euler"


def pochhammer(a: float, m: int) -> float:
    """Rising factorial ``(a)_m`` for small non-negative ``m`` (weights only)."""
    p = 1.0
    for i in range(m):
        p *= a + i
    return p


def levin_weight(beta: float = 1.0) -> Callable[[int, int], float]:
    return lambda k, n: (n + beta) ** (k - 1)


def weniger_weight(beta: float = 1.0) -> Callable[[int, int], float]:
    return lambda k, n: pochhammer(n + beta, k - 1) if k >= 1 else 1.0 / (n + beta - 1)


@dataclass(frozen=True)
class WeightedTransformSpec:
    """Positive weights ``w(k, n)``; ``beta`` is informational for the named families."""

    weight: Callable[[int, int], float]
    beta: float = 1.0

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError("beta must be positive")


def _check_window(s, omega, k, n):
    if k < 0 or n < 0:
        raise ValueError("order and index must be non-negative")
    if len(s) < n + k + 1 or len(omega) < n + k + 1:
        raise ValueError(f"need s and omega up to index {n + k}")


def _direct(weight, s, omega, k, n):
    """Return ``(value, unstable)`` for the weighted transform."""
    _check_window(s, omega, k, n)
    for j in range(k + 1):
        if omega[n + j] == 0:
            return s[n + j], False
    if k == 0:
        return s[n], False
    scale = weight(k, n + k)
    num = 0.0
    den = 0.0
    den_abs = 0.0
    for j in range(k + 1):
        c = math.comb(k, j) * (weight(k, n + j) / scale)
        if j % 2:
            c = -c
        num += c * s[n + j] / omega[n + j]
        t = c / omega[n + j]
        den += t
        den_abs += abs(t)
    unstable = abs(den) < STABILITY_THRESHOLD * den_abs
    return num / den, unstable


def weighted_transform_direct(spec: WeightedTransformSpec, s, omega, k: int, n: int) -> Scalar:
    return _direct(spec.weight, s, omega, k, n)[0]


def levin_direct(beta: float, s, omega, k: int, n: int) -> Scalar:
    """Levin transformation L_k^(n)(beta, s_n, omega_n) from its explicit sums."""
    if k == 0:
        _check_window(s, omega, k, n)
        return s[n]
    return _direct(levin_weight(beta), s, omega, k, n)[0]


def weniger_direct(beta: float, s, omega, k: int, n: int) -> Scalar:
    """Delta transformation S_k^(n)(beta, s_n, omega_n) from its explicit sums."""
    if k == 0:
        _check_window(s, omega, k, n)
        return s[n]
    return _direct(weniger_weight(beta), s, omega, k, n)[0]


def levin_coefficient(beta: float) -> Callable[[int, int], float]:
    def coef(k: int, n: int) -> float:
        b = beta + n
        return b * (b + k) ** (k - 1) / (b + k + 1) ** k

    return coef


def weniger_coefficient(beta: float) -> Callable[[int, int], float]:
    def coef(k: int, n: int) -> float:
        if k == 0:
            return 1.0  # removable 0/0 at beta + n = 1
        b = beta + n
        return (b + k) * (b + k - 1) / ((b + 2 * k) * (b + 2 * k - 1))

    return coef


@dataclass
class TransformTable:
    """Triangular table ``value[k][n]`` for ``k + n <= m`` plus the diagonal ``T_m^(0)``.

    ``numerator`` and ``denominator`` hold the recursion's raw sums (they are
    only defined up to a common scale per entry).
    """

    numerator: list[list[Scalar]] = field(default_factory=list)
    denominator: list[list[Scalar]] = field(default_factory=list)
    value: list[list[Scalar]] = field(default_factory=list)
    unstable: list[list[bool]] = field(default_factory=list)

    @property
    def diagonal(self) -> list[Scalar]:
        return [row[0] for row in self.value]

    @property
    def diagonal_unstable(self) -> list[bool]:
        return [row[0] for row in self.unstable]


class RecursiveTransform:
    """Incremental three-term-recursion evaluation of a Levin-type transform.

    Each :meth:`push` appends one ``(s_m, omega_m)`` pair, computes the new
    anti-diagonal ``k + n = m`` and returns the diagonal element ``T_m^(0)``.
    """

    def __init__(self, coefficient: Callable[[int, int], float]):
        self.coef = coefficient
        self.s: list[Scalar] = []
        self.table = TransformTable()
        self._zeros: list[int] = []
        self._num: list[Scalar] = []
        self._den: list[Scalar] = []
        self._abs: list[float] = []

    @property
    def m(self) -> int:
        return len(self.s) - 1

    def push(self, s_m: Scalar, omega_m: Scalar) -> Scalar:
        m = len(self.s)
        self.s.append(s_m)
        if omega_m == 0:
            self._zeros.append(m)
            num, den, dab = [0.0], [0.0], [0.0]
        else:
            inv = 1.0 / omega_m
            num, den, dab = [s_m * inv], [inv], [abs(inv)]
        for k in range(m):
            n = m - 1 - k
            c = self.coef(k, n)
            num.append(num[k] - c * self._num[k])
            den.append(den[k] - c * self._den[k])
            dab.append(dab[k] + abs(c) * self._abs[k])
        self._num, self._den, self._abs = num, den, dab

        t = self.table
        t.numerator.append([])
        t.denominator.append([])
        t.value.append([])
        t.unstable.append([])
        for k in range(m + 1):
            n = m - k
            t.numerator[k].append(num[k])
            t.denominator[k].append(den[k])
            i = bisect.bisect_left(self._zeros, n)
            if i < len(self._zeros) and self._zeros[i] <= m:
                val, flag = self.s[self._zeros[i]], False
            elif k == 0:
                val, flag = s_m, False
            else:
                val = num[k] / den[k] if den[k] != 0 else math.nan
                flag = not abs(den[k]) >= STABILITY_THRESHOLD * dab[k]
            t.value[k].append(val)
            t.unstable[k].append(flag)
        return t.value[m][0]


def _recursive(coef, s, omega, max_order) -> TransformTable:
    if len(s) < max_order + 1 or len(omega) < max_order + 1:
        raise ValueError(f"need {max_order + 1} partial sums and remainder estimates")
    rt = RecursiveTransform(coef)
    for i in range(max_order + 1):
        rt.push(s[i], omega[i])
    return rt.table


def levin_recursive(beta: float, s, omega, max_order: int) -> TransformTable:
    return _recursive(levin_coefficient(beta), s, omega, max_order)


def weniger_recursive(beta: float, s, omega, max_order: int) -> TransformTable:
    return _recursive(weniger_coefficient(beta), s, omega, max_order)


def smith_ford_estimates(S: Sequence[Scalar], A: Sequence[Scalar]) -> list[Scalar]:
    """Remainder estimates ``omega_n = Delta S_n = (-1)^(n+1) A_(n+1)``.

    ``A`` must hold ``A_0 .. A_(m+1)`` to pair with ``S_0 .. S_m``.
    """
    m = len(A) - 2
    if m < 0:
        raise ValueError("need at least two condensed terms")
    return [A[n + 1] if n % 2 else -A[n + 1] for n in range(min(m, len(S) - 1) + 1)]


class EulerTransform:
    """Partial sums of the Euler transform of ``sum_k (-1)^k u_k``, one term at a time."""

    def __init__(self):
        self._diag: list[Scalar] = []  # _diag[i] = Delta^i u_(m-i)
        self.sums: list[Scalar] = []

    def push(self, u: Scalar) -> Scalar:
        new = [u]
        for i, d in enumerate(self._diag):
            new.append(new[i] - d)
        self._diag = new
        k = len(new) - 1
        term = new[k] / 2.0 ** (k + 1)
        prev = self.sums[-1] if self.sums else 0.0
        self.sums.append(prev - term if k % 2 else prev + term)
        return self.sums[-1]


def euler_transform(u: Sequence[Scalar], n: int) -> list[Scalar]:
    """``E_0 .. E_n`` with ``E_n = sum_{k<=n} (-1)^k Delta^k u_0 / 2^(k+1)``."""
    if len(u) < n + 1:
        raise ValueError(f"need u_0 .. u_{n}")
    et = EulerTransform()
    for k in range(n + 1):
        et.push(u[k])
    return et.sums
