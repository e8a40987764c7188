"""Van Wijngaarden condensation of a monotone series into an alternating one.

    sum_k a(k) = sum_j (-1)^j A_j,    A_j = sum_k 2^k a(2^k (j+1) - 1)

The inner sums are evaluated term by term without acceleration and truncated
once the newest term is negligible relative to the running sum.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional

from .series import Scalar, SeriesError, SeriesTerms


class NonConvergentInnerSum(SeriesError):
    """The inner sum for ``A_j`` did not settle within the configured limits.

    Usually means the input violates Daniel's criterion (no summable,
    strictly decreasing majorant) or decays too slowly for double precision.
    """


@dataclass(frozen=True)
class CondensationConfig:
    inner_rel_tol: float = 1e-16
    inner_abs_floor: float = 5e-324
    max_inner_terms: int = 64
    max_index: int = 2**62
    use_closed_form: bool = True

    def __post_init__(self):
        if not (self.inner_rel_tol > 0 and self.inner_abs_floor > 0):
            raise ValueError("tolerances must be positive")
        if self.max_inner_terms < 1:
            raise ValueError("max_inner_terms must be >= 1")
        if self.max_index < 0:
            raise ValueError("max_index must be non-negative")


DEFAULT_CONFIG = CondensationConfig()


@dataclass(frozen=True)
class CondensedTerm:
    j: int
    value: Scalar
    inner_terms_used: int
    max_original_index: int


def _inner_sum(fetch, j: int, cfg: CondensationConfig) -> CondensedTerm:
    acc: Scalar = 0.0
    used = 0
    max_idx = -1
    settled = False
    for k in range(cfg.max_inner_terms):
        idx = ((j + 1) << k) - 1
        if idx > cfg.max_index:
            break
        b = (1 << k) * fetch(idx)
        acc = acc + b
        used += 1
        max_idx = idx
        mag = abs(b)
        if mag < cfg.inner_abs_floor or mag < cfg.inner_rel_tol * abs(acc):
            settled = True
            break
    if not settled:
        raise NonConvergentInnerSum(
            f"inner sum for A_{j} not converged after {used} terms "
            f"(highest index {max_idx}, last term still above tolerance)"
        )
    return CondensedTerm(j, acc, used, max_idx)


def condensed_term(terms: SeriesTerms, j: int, cfg: CondensationConfig = DEFAULT_CONFIG) -> CondensedTerm:
    """Compute one condensed term ``A_j`` with diagnostics."""
    if j < 0:
        raise ValueError("j must be >= 0")
    if cfg.use_closed_form and terms.condensed is not None:
        return CondensedTerm(j, terms.condensed(j), 0, -1)
    return _inner_sum(terms.func, j, cfg)


class Condenser:
    """Caching condensation of one series.

    Original terms and condensed terms are memoized, so growing ``n`` never
    repeats work, and ``term_evaluations`` counts distinct indices fetched.
    Safe for concurrent use from several threads.
    """

    def __init__(self, terms: SeriesTerms, cfg: CondensationConfig = DEFAULT_CONFIG, validate: bool = True):
        if not terms.pattern.is_monotone:
            raise SeriesError(f"{terms.name}: condensation requires a monotone series, got {terms.pattern.value}")
        self.terms = terms
        self.cfg = cfg
        self._term_cache: dict[int, Scalar] = {}
        self._condensed: dict[int, CondensedTerm] = {}
        self._closed = 0
        self._lock = threading.Lock()
        if validate:
            terms.validate(fetch=self._fetch)

    @property
    def term_evaluations(self) -> int:
        """Distinct original indices fetched; a closed-form ``A_j`` counts as one."""
        return len(self._term_cache) + self._closed

    def _fetch(self, k: int) -> Scalar:
        try:
            return self._term_cache[k]
        except KeyError:
            pass
        v = self.terms.func(k)
        with self._lock:
            self._term_cache.setdefault(k, v)
        return v

    def term(self, j: int) -> CondensedTerm:
        ct = self._condensed.get(j)
        if ct is not None:
            return ct
        if self.cfg.use_closed_form and self.terms.condensed is not None:
            ct = CondensedTerm(j, self.terms.condensed(j), 0, -1)
        else:
            ct = _inner_sum(self._fetch, j, self.cfg)
        with self._lock:
            if j not in self._condensed:
                self._condensed[j] = ct
                if ct.inner_terms_used == 0:
                    self._closed += 1
        return self._condensed[j]

    def value(self, j: int) -> Scalar:
        return self.term(j).value


def vw_partial_sums(
    terms: SeriesTerms, n: int, cfg: CondensationConfig = DEFAULT_CONFIG, condenser: Optional[Condenser] = None
) -> tuple[list[Scalar], list[Scalar]]:
    """Partial sums ``S_0 .. S_n`` of the condensed alternating series.

    Returns ``(S, A)`` where ``A`` holds ``A_0 .. A_n``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    c = condenser if condenser is not None else Condenser(terms, cfg)
    A = [c.value(j) for j in range(n + 1)]
    S: list[Scalar] = []
    acc: Scalar = 0.0
    for j, a in enumerate(A):
        acc = acc + a if j % 2 == 0 else acc - a
        S.append(acc)
    return S, A
