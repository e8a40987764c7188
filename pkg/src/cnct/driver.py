"""The combined pipeline: condensation followed by nonlinear acceleration.

Partial sums ``S_m`` of the alternating series are produced one at a time and
pushed into incremental transform tables, so each step costs one new
condensed term and one anti-diagonal of every selected transform.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .condensation import DEFAULT_CONFIG, CondensationConfig, Condenser
from .series import Scalar, SeriesError, SeriesTerms
from .transforms import (
    EULER,
    LEVIN,
    WENIGER,
    EulerTransform,
    RecursiveTransform,
    levin_coefficient,
    weniger_coefficient,
)

BOTH = "both"
TRANSFORMS = (LEVIN, WENIGER, EULER, BOTH)
CONDENSE = "condense-then-accelerate"
ALTERNATING = "accelerate-given-alternating"
MODES = (CONDENSE, ALTERNATING)


def selected_transforms(transform: str) -> tuple[str, ...]:
    """Names computed for a request; the last one is the reported value."""
    if transform == BOTH:
        return (LEVIN, WENIGER)
    if transform in (LEVIN, WENIGER, EULER):
        return (transform,)
    raise ValueError(f"unknown transform {transform!r}; choose one of {', '.join(TRANSFORMS)}")


@dataclass(frozen=True)
class AccelerationRequest:
    """Pipeline configuration.

    In ``accelerate-given-alternating`` mode ``partial_sums`` holds ``S_0 ..``
    and ``magnitudes`` the matching ``A_j`` (derived from the sums if absent).
    ``min_order`` forces that many diagonal rows even after convergence, which
    is how table output gets a fixed number of rows.
    """

    terms: Optional[SeriesTerms] = None
    transform: str = BOTH
    beta: float = 1.0
    target_rel_tol: float = 1e-14
    max_order: int = 30
    condensation: CondensationConfig = DEFAULT_CONFIG
    mode: str = CONDENSE
    partial_sums: Optional[Sequence[Scalar]] = None
    magnitudes: Optional[Sequence[Scalar]] = None
    min_order: int = 0

    def __post_init__(self):
        selected_transforms(self.transform)
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if not self.beta > 0:
            raise ValueError("beta must be positive")
        if not self.target_rel_tol > 0:
            raise ValueError("target_rel_tol must be positive")
        if self.max_order < 2:
            raise ValueError("max_order must be >= 2")
        if self.min_order < 0 or self.min_order > self.max_order:
            raise ValueError("min_order must lie in 0..max_order")
        if self.mode == CONDENSE and self.terms is None:
            raise ValueError("condense-then-accelerate needs a term generator")
        if self.mode == ALTERNATING and self.partial_sums is None:
            raise ValueError("accelerate-given-alternating needs partial sums")


@dataclass
class AccelerationResult:
    value: Scalar
    order_used: int
    error_estimate: float
    term_evaluations: int
    converged: bool
    stability_warnings: list[str] = field(default_factory=list)
    values: dict[str, Scalar] = field(default_factory=dict)
    transform: str = BOTH
    partial_sums: list[Scalar] = field(default_factory=list)
    diagonals: dict[str, list[Scalar]] = field(default_factory=dict)

    @property
    def rows(self) -> int:
        return len(self.partial_sums)


class _Source:
    """``j -> A_j`` with an evaluation counter and an optional length limit."""

    def __init__(self, get: Callable[[int], Scalar], count: Callable[[], int], limit: Optional[int] = None):
        self.get = get
        self.count = count
        self.limit = limit


def _list_source(S: Sequence[Scalar], A: Optional[Sequence[Scalar]]) -> _Source:
    S = list(S)
    if A is None:
        A = [S[0]] + [(S[j] - S[j - 1]) * (1 if j % 2 == 0 else -1) for j in range(1, len(S))]
    A = list(A)
    if len(A) < len(S):
        raise ValueError("need a magnitude A_j for every partial sum")
    used = [0]

    def get(j: int) -> Scalar:
        used[0] = max(used[0], j + 1)
        return A[j]

    return _Source(get, lambda: used[0], len(S))


def _term_source(req: AccelerationRequest) -> _Source:
    terms = req.terms
    if terms.pattern.is_monotone:
        c = Condenser(terms, req.condensation)
        return _Source(c.value, lambda: c.term_evaluations)
    if terms.condensed is None:
        raise SeriesError(
            f"{terms.name}: condensation requires a monotone series, got {terms.pattern.value}"
        )
    # the alternating series is known in closed form: skip the condensation stage
    cache: dict[int, Scalar] = {}

    def get(j: int) -> Scalar:
        if j not in cache:
            cache[j] = terms.condensed(j)
        return cache[j]

    return _Source(get, lambda: len(cache))


def _converged(diag: list[Scalar], flags: list[bool], tol: float) -> bool:
    if len(diag) < 3 or flags[-1] or flags[-2]:
        return False
    t2, t1, t0 = diag[-1], diag[-2], diag[-3]
    return abs(t2 - t1) <= tol * abs(t2) and abs(t1 - t0) <= tol * abs(t1)


def _run(req: AccelerationRequest, source: _Source) -> AccelerationResult:
    names = selected_transforms(req.transform)
    engines: dict[str, object] = {}
    for name in names:
        if name == LEVIN:
            engines[name] = RecursiveTransform(levin_coefficient(req.beta))
        elif name == WENIGER:
            engines[name] = RecursiveTransform(weniger_coefficient(req.beta))
        else:
            engines[name] = EulerTransform()
    diags: dict[str, list[Scalar]] = {n: [] for n in names}
    flags: dict[str, list[bool]] = {n: [] for n in names}
    done: dict[str, Optional[int]] = {n: None for n in names}
    warnings: list[str] = []
    S: list[Scalar] = []

    last = req.max_order
    if source.limit is not None:
        # omega_m needs A_(m+1)
        last = min(last, source.limit - 2)
        if last < 0:
            raise ValueError("need at least two partial sums")

    acc: Scalar = 0.0
    for m in range(last + 1):
        a_m = source.get(m)
        acc = acc + a_m if m % 2 == 0 else acc - a_m
        S.append(acc)
        a_next = source.get(m + 1)
        omega = -a_next if m % 2 == 0 else a_next
        for name in names:
            eng = engines[name]
            if name == EULER:
                t, bad = eng.push(a_m), False
            else:
                t = eng.push(acc, omega)
                bad = eng.table.unstable[m][0]
            diags[name].append(t)
            flags[name].append(bad)
            if bad:
                warnings.append(f"{name}: order {m} denominator below the cancellation threshold")
            if done[name] is None and _converged(diags[name], flags[name], req.target_rel_tol):
                done[name] = m
        if all(v is not None for v in done.values()) and m >= req.min_order:
            break

    primary = names[-1]
    diag = diags[primary]
    m = len(diag) - 1
    converged = all(v is not None for v in done.values())
    order_used = max(done.values()) if converged else m
    err = abs(diag[-1] - diag[-2]) if m >= 1 else math.inf
    return AccelerationResult(
        value=diag[-1],
        order_used=order_used,
        error_estimate=err,
        term_evaluations=source.count(),
        converged=converged,
        stability_warnings=warnings,
        values={n: diags[n][-1] for n in names},
        transform=req.transform,
        partial_sums=S,
        diagonals=diags,
    )


def cnct(req: AccelerationRequest) -> AccelerationResult:
    """Run the pipeline described by ``req``.

    Stops once two consecutive diagonal increments of every selected
    transform are below ``target_rel_tol`` relative (neither entry flagged as
    unstable), or at ``max_order`` with ``converged=False``.  The error
    estimate is the last diagonal increment, a heuristic and not a bound.
    """
    if req.mode == ALTERNATING:
        source = _list_source(req.partial_sums, req.magnitudes)
    else:
        source = _term_source(req)
    return _run(req, source)


def accelerate_alternating(
    S: Sequence[Scalar],
    A: Optional[Sequence[Scalar]] = None,
    transform: str = BOTH,
    beta: float = 1.0,
    max_order: int = 30,
    target_rel_tol: float = 1e-14,
    min_order: int = 0,
) -> AccelerationResult:
    """Accelerate given partial sums ``S_n = sum_{j<=n} (-1)^j A_j``.

    Also sums divergent alternating input.  With ``L`` partial sums the
    highest order reachable is ``L - 2``.
    """
    req = AccelerationRequest(
        transform=transform,
        beta=beta,
        target_rel_tol=target_rel_tol,
        max_order=max_order,
        mode=ALTERNATING,
        partial_sums=list(S),
        magnitudes=None if A is None else list(A),
        min_order=min(min_order, max_order),
    )
    return cnct(req)
