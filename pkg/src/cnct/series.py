"""Term generators, partial sums and simple convergence diagnostics.

A series is described by a :class:`SeriesTerms` object: a pure function of a
non-negative integer index plus a caller-declared sign pattern.  Everything
downstream (condensation, transforms, driver) consumes this contract.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Union

Scalar = Union[float, complex]

#: number of leading terms inspected when validating a monotone sign tag
SIGN_CHECK_TERMS = 64


class SeriesError(ValueError):
    """Base class for contract violations raised by this package."""


class SignContractError(SeriesError):
    pass


class IndeterminateRatio(SeriesError):
    pass


class SignPattern(enum.Enum):
    MONOTONE_NONNEGATIVE = "monotone-nonnegative"
    MONOTONE_NONPOSITIVE = "monotone-nonpositive"
    ALTERNATING = "alternating"
    GENERAL = "general"

    @property
    def is_monotone(self) -> bool:
        return self in (SignPattern.MONOTONE_NONNEGATIVE, SignPattern.MONOTONE_NONPOSITIVE)

    @property
    def sign(self) -> int:
        if self is SignPattern.MONOTONE_NONNEGATIVE:
            return 1
        if self is SignPattern.MONOTONE_NONPOSITIVE:
            return -1
        return 0


def exact_real(x) -> Fraction:
    """Exact rational value of a real parameter.

    Decimal strings such as ``"0.99999"`` keep their decimal value, floats
    their binary value.  Near ``z = 1`` the difference matters: the binary
    double nearest 0.99999 shifts ``z^(2^20)`` by about 6e-11 relative.
    """
    if isinstance(x, (bool, complex)):
        raise TypeError(f"expected a real parameter, got {x!r}")
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def log_real(x: Fraction) -> float:
    """``ln x`` for an exact positive rational, accurate also for ``x`` near 1."""
    if x <= 0:
        raise ValueError("log_real requires x > 0")
    if Fraction(1, 2) < x < 2:
        return math.log1p(float(x - 1))
    return math.log(float(x)) if float(x) > 0 else math.log(x.numerator) - math.log(x.denominator)


def power_sequence(z: Fraction) -> Callable[[int], float]:
    """``n -> z^n`` in O(1) per index via ``exp(n ln|z|)`` with sign tracking."""
    if z == 0:
        return lambda n: 1.0 if n == 0 else 0.0
    if z == 1:
        return lambda n: 1.0
    lz = log_real(abs(z))
    neg = z < 0

    def zn(n: int) -> float:
        v = math.exp(n * lz)
        return -v if neg and n % 2 else v

    return zn


def modulus(x: Scalar) -> float:
    return abs(x)


@dataclass(frozen=True)
class SeriesTerms:
    """A random-access term generator ``k -> a(k)``.

    ``condensed`` optionally supplies the condensed sums ``A_j`` in closed
    form; the condensation stage prefers it over numerical inner sums when
    present (e.g. the Dirichlet series of the zeta function, whose inner sum
    is a geometric series that converges far too slowly near ``z = 1``).
    """

    func: Callable[[int], Scalar]
    pattern: SignPattern = SignPattern.GENERAL
    name: str = "series"
    condensed: Optional[Callable[[int], Scalar]] = field(default=None, compare=False)

    def __call__(self, k: int) -> Scalar:
        return self.func(k)

    def validate(self, count: int = SIGN_CHECK_TERMS, fetch: Optional[Callable[[int], Scalar]] = None) -> None:
        """Spot-check the declared sign pattern on the first ``count`` terms.

        ``fetch`` replaces ``func`` for the lookups, so a caller with a term
        cache can keep its evaluation count honest.
        """
        if not self.pattern.is_monotone:
            return
        sign = self.pattern.sign
        get = self.func if fetch is None else fetch
        for k in range(count):
            a = get(k)
            if isinstance(a, complex):
                raise SignContractError(
                    f"{self.name}: complex term a({k}) = {a!r} in a series tagged {self.pattern.value}"
                )
            if a * sign < 0:
                raise SignContractError(
                    f"{self.name}: term a({k}) = {a!r} violates declared pattern {self.pattern.value}"
                )


def shift(terms: SeriesTerms, offset: int) -> SeriesTerms:
    """Return the tail series ``k -> a(k + offset)``.

    Used to hand the monotone tail of a series to the condensation stage after
    the leading irregular-sign terms have been summed directly by the caller.
    """
    if offset < 0:
        raise ValueError("offset must be non-negative")
    func = terms.func
    return SeriesTerms(lambda k: func(k + offset), terms.pattern, f"{terms.name}[+{offset}]")


def partial_sums(terms: Callable[[int], Scalar], n: int) -> list[Scalar]:
    """Partial sums ``sigma_0 .. sigma_n`` accumulated left to right."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out: list[Scalar] = []
    acc: Scalar = 0.0
    for k in range(n + 1):
        acc = acc + terms(k)
        out.append(acc)
    return out


def estimate_rho(sums: list[Scalar]) -> Scalar:
    """Ratio of the last two consecutive differences of ``sums``.

    For a sequence with ``(s_{n+1} - s) / (s_n - s) -> rho`` the difference
    ratio tends to the same ``rho``; values near 1 indicate logarithmic
    convergence.  This is a heuristic aid, not a classifier.
    """
    if len(sums) < 3:
        raise ValueError("need at least 3 partial sums")
    d_last = sums[-1] - sums[-2]
    d_prev = sums[-2] - sums[-3]
    if d_prev == 0 or d_last == 0:
        raise IndeterminateRatio("a difference of partial sums vanished")
    return d_last / d_prev
