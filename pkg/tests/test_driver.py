import math
import threading

import pytest
from conftest import alt_sums, rising_diagonal, within_ulps, zeta_neg_diagonal

from cnct import (
    ALTERNATING,
    BOTH,
    EULER,
    LEVIN,
    WENIGER,
    AccelerationRequest,
    SeriesError,
    SeriesTerms,
    SignPattern,
    accelerate_alternating,
    cnct,
)
from cnct.functions import (
    BesselSumParams,
    bessel_product_terms,
    bessel_sum_closed_form,
    one_f_zero_value,
    polylog_terms,
    zeta_alt_partial_sums,
    zeta_alt_terms,
    zeta_dirichlet_terms,
    zeta_neg_int,
)


def test_zeta_101_weniger():
    r = cnct(AccelerationRequest(terms=zeta_dirichlet_terms(1.01), transform=WENIGER))
    assert r.converged
    assert r.order_used <= 15
    assert r.value * 1e-3 == pytest.approx(0.100577943338497, rel=5e-13)


def test_li2_weniger():
    r = cnct(AccelerationRequest(terms=polylog_terms(2, "0.99999"), transform=WENIGER))
    assert r.converged and r.order_used <= 13
    assert r.value * 0.1 == pytest.approx(0.164480893699293, rel=5e-13)


def test_bessel_levin_and_evaluation_budget():
    p = BesselSumParams("0.9999", "0.7")
    r = cnct(AccelerationRequest(terms=bessel_product_terms(p), transform=LEVIN))
    assert r.converged
    assert r.value * 1e-5 == pytest.approx(-0.142847143207135, rel=5e-13)
    assert r.value == pytest.approx(-bessel_sum_closed_form(p), rel=5e-13)
    assert r.term_evaluations <= 600


def test_zeta_minus_one_weniger_exact_at_order_3():
    S = zeta_alt_partial_sums(-1.0, 20)
    A = [zeta_alt_terms(-1.0)(j) for j in range(21)]
    r = accelerate_alternating(S, A, transform=WENIGER, min_order=14)
    assert within_ulps(r.diagonals[WENIGER][3] * 10, -10 / 12, 2)


def test_zeta_minus_one_weniger_exact_from_order_3():
    """Every displayed row from order 3 on, to 8 ulp of the scaled value.

    Expected red: rounding in the recursion drifts to 12 ulp at orders 8-10.
    """
    S = zeta_alt_partial_sums(-1.0, 20)
    A = [zeta_alt_terms(-1.0)(j) for j in range(21)]
    r = accelerate_alternating(S, A, transform=WENIGER, min_order=14)
    bad = [m for m in range(3, 15) if not within_ulps(r.diagonals[WENIGER][m] * 10, -10 / 12)]
    assert bad == []


def test_divergent_input_levin():
    S = zeta_alt_partial_sums(-1.0, 20)
    # the raw sums oscillate with linearly growing amplitude
    assert abs(S[20]) > abs(S[10]) > abs(S[2]) and S[20] < 0 < S[19]
    r = accelerate_alternating(S, transform=LEVIN, min_order=13)
    assert abs(r.diagonals[LEVIN][13] * 10 - (-10 / 12)) <= 1e-13


def test_complex_zeta_levin():
    z = 0.5 + 13.7j
    S = zeta_alt_partial_sums(z, 30)
    A = [zeta_alt_terms(z)(j) for j in range(31)]
    r = accelerate_alternating(S, A, transform=LEVIN, min_order=19)
    t = r.diagonals[LEVIN][19]
    assert abs(t.real - 0.107439455835313) <= 1e-12
    assert abs(t.imag + 0.312976660556163) <= 1e-12


@pytest.mark.parametrize("l", [0, 1, 2, 3, 4])
def test_levin_beta2_exact_for_negative_zeta(l):
    """Expected red for l = 3: the double inputs alone carry a ~100 ulp error."""
    assert within_ulps(zeta_neg_diagonal(l, LEVIN, 2.0, l + 1), zeta_neg_int(l))


@pytest.mark.parametrize("l", [0, 1, 2, 3, 4])
def test_weniger_beta2_exact_for_rising_powers(l):
    """Expected red for l = 3, 4 (29 and 54 ulp, from cancellation in the sums)."""
    assert within_ulps(rising_diagonal(l, WENIGER, 2.0, l + 1), one_f_zero_value(l))


@pytest.mark.parametrize("l", [1, 2])
def test_weniger_beta1_accidentally_exact(l):
    for order in range(3, 8):
        assert within_ulps(zeta_neg_diagonal(l, WENIGER, 1.0, order), zeta_neg_int(l))


def test_weniger_beta1_not_exact_for_zeta_minus_3():
    assert abs(zeta_neg_diagonal(3, WENIGER, 1.0, 3) - zeta_neg_int(3)) > 1e-6


def test_determinism():
    req = AccelerationRequest(terms=zeta_dirichlet_terms(1.01))
    a, b = cnct(req), cnct(req)
    assert a.value.hex() == b.value.hex()
    assert a.diagonals == b.diagonals and a.term_evaluations == b.term_evaluations


def test_term_evaluations_count_distinct_indices():
    seen = set()
    lock = threading.Lock()

    def a(m):
        with lock:
            seen.add(m)
        return (m + 1.0) ** -2.5

    r = cnct(AccelerationRequest(terms=SeriesTerms(a, SignPattern.MONOTONE_NONNEGATIVE, "zeta(2.5)")))
    assert r.converged
    assert r.term_evaluations == len(seen)
    assert r.value == pytest.approx(1.341487257250917, rel=1e-13)


@pytest.mark.parametrize(
    "terms",
    [zeta_dirichlet_terms(1.01), polylog_terms(3, "0.99999"), zeta_dirichlet_terms(-1.0), zeta_dirichlet_terms(0.5 + 13.7j)],
)
@pytest.mark.parametrize("transform", [LEVIN, WENIGER, BOTH])
def test_converged_error_estimate_invariant(terms, transform):
    req = AccelerationRequest(terms=terms, transform=transform)
    r = cnct(req)
    assert r.error_estimate >= 0
    assert r.converged
    assert r.error_estimate <= req.target_rel_tol * abs(r.value)
    assert r.order_used <= req.max_order


def test_both_reports_every_transform():
    r = cnct(AccelerationRequest(terms=zeta_dirichlet_terms(2.0), transform=BOTH))
    assert set(r.values) == {LEVIN, WENIGER}
    assert r.value == r.values[WENIGER]
    assert r.values[LEVIN] == pytest.approx(math.pi**2 / 6, rel=1e-14)


def test_euler_transform_slow_but_runs():
    r = cnct(AccelerationRequest(terms=zeta_dirichlet_terms(1.01), transform=EULER, max_order=15))
    assert not r.converged
    assert r.order_used == 15
    assert r.value * 1e-3 == pytest.approx(0.100577817763434, rel=5e-13)


def test_non_convergence_is_a_result():
    r = cnct(AccelerationRequest(terms=zeta_dirichlet_terms(1.01), max_order=4))
    assert r.converged is False
    assert r.order_used == 4
    assert r.error_estimate > 0


def test_alternating_needs_enough_sums():
    r = accelerate_alternating([1.0, 0.5, 0.8333333333333334, 0.5833333333333334], max_order=30)
    assert r.order_used == 2
    with pytest.raises(ValueError):
        accelerate_alternating([1.0])


def test_grandi_series():
    S = alt_sums([1.0] * 10)
    r = accelerate_alternating(S)
    assert r.value == 0.5


def test_non_monotone_without_closed_form_is_rejected():
    t = SeriesTerms(lambda m: (-0.5) ** m, SignPattern.ALTERNATING, "geometric")
    with pytest.raises(SeriesError):
        cnct(AccelerationRequest(terms=t))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(transform="levin-u"),
        dict(mode="other"),
        dict(beta=0.0),
        dict(target_rel_tol=0.0),
        dict(max_order=1),
        dict(min_order=40),
        dict(terms=None),
        dict(mode=ALTERNATING, partial_sums=None),
    ],
)
def test_request_validation(kwargs):
    base = dict(terms=zeta_dirichlet_terms(2.0))
    base.update(kwargs)
    with pytest.raises(ValueError):
        AccelerationRequest(**base)


def test_independent_runs_are_concurrent_safe():
    from concurrent.futures import ThreadPoolExecutor

    reqs = [AccelerationRequest(terms=zeta_dirichlet_terms(z)) for z in (1.01, 1.5, 2.0, 3.0)] * 2
    with ThreadPoolExecutor(4) as ex:
        vals = [r.value for r in ex.map(cnct, reqs)]
    assert vals[:4] == vals[4:]
