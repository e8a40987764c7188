import math
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnct.functions import zeta_alt_partial_sums, zeta_alt_terms
from cnct.transforms import (
    STABILITY_THRESHOLD,
    EulerTransform,
    RecursiveTransform,
    WeightedTransformSpec,
    euler_transform,
    levin_coefficient,
    levin_direct,
    levin_recursive,
    levin_weight,
    pochhammer,
    smith_ford_estimates,
    weighted_transform_direct,
    weniger_direct,
    weniger_recursive,
    weniger_weight,
)

from conftest import alt_sums, ulps


def exact_direct(weight, s, om, k, n):
    """Rational-arithmetic evaluation of the weighted-difference ratio."""
    num = den = Fraction(0)
    for j in range(k + 1):
        c = (-1) ** j * comb(k, j) * Fraction(weight(k, n + j))
        num += c * Fraction(s[n + j]) / Fraction(om[n + j])
        den += c / Fraction(om[n + j])
    return num / den


def random_alternating(r, N):
    A = [r.uniform(0.1, 2.0) / (j + 1) ** r.uniform(0.5, 2.0) for j in range(N + 2)]
    S = alt_sums(A)
    return S[: N + 1], smith_ford_estimates(S, A)[: N + 1], A


def test_geometric_example_levin_and_weniger():
    s, om = [1.0, 1.5], [0.5, 0.25]
    assert levin_direct(1.0, s, om, 1, 0) == 2.0
    assert weniger_direct(1.0, s, om, 1, 0) == 2.0
    assert levin_recursive(1.0, s, om, 1).value[1][0] == 2.0


def test_constant_weights():
    spec = WeightedTransformSpec(lambda k, n: 1.0, 1.0)
    assert weighted_transform_direct(spec, [1.0, 1.5], [0.5, 0.25], 1, 0) == 2.0


def test_weight_spec_validation():
    with pytest.raises(ValueError):
        WeightedTransformSpec(lambda k, n: 1.0, 0.0)


def test_order_zero_identity(rng):
    S, om, _ = random_alternating(rng, 10)
    for n in range(10):
        assert levin_direct(1.0, S, om, 0, n) == S[n]
        assert weniger_direct(1.0, S, om, 0, n) == S[n]
    for tab in (levin_recursive(1.0, S, om, 10), weniger_recursive(1.0, S, om, 10)):
        assert tab.value[0] == S


def test_generic_equals_named(rng):
    S, om, _ = random_alternating(rng, 12)
    for beta in (1.0, 2.0, 0.5):
        for k in range(1, 8):
            lev = weighted_transform_direct(WeightedTransformSpec(levin_weight(beta), beta), S, om, k, 2)
            wen = weighted_transform_direct(WeightedTransformSpec(weniger_weight(beta), beta), S, om, k, 2)
            assert lev == levin_direct(beta, S, om, k, 2)
            assert wen == weniger_direct(beta, S, om, k, 2)
    assert weniger_weight(1.0)(4, 3) == pochhammer(4.0, 3)


@pytest.mark.parametrize("beta", [1.0, 2.0])
def test_direct_recursive_agreement(rng, beta):
    for _ in range(20):
        S, om, _ = random_alternating(rng, 14)
        lt = levin_recursive(beta, S, om, 12)
        wt = weniger_recursive(beta, S, om, 12)
        for k in range(13):
            for n in range(13 - k):
                d = levin_direct(beta, S, om, k, n)
                assert lt.value[k][n] == pytest.approx(d, rel=1e-12)
                d = weniger_direct(beta, S, om, k, n)
                assert wt.value[k][n] == pytest.approx(d, rel=1e-12)


def test_levin_recursion_coefficient_against_exact_ratio():
    """The three-term recursion must reproduce the rational direct formula."""
    S = [Fraction(1), Fraction(1, 2), Fraction(5, 6), Fraction(7, 12), Fraction(47, 60)]
    om = [Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4), Fraction(1, 5), Fraction(-1, 6)]
    rt = RecursiveTransform(levin_coefficient(1.0))
    for s, w in zip(S, om):
        rt.push(float(s), float(w))
    ref = exact_direct(levin_weight(1.0), S, om, 4, 0)
    assert rt.table.value[4][0] == pytest.approx(float(ref), rel=1e-14)


def test_quasi_linearity(rng):
    worst = 0.0
    for _ in range(200):
        S, om, _ = random_alternating(rng, 10)
        lam, mu = rng.uniform(-10, 10), rng.uniform(-10, 10)
        k = rng.randint(1, 8)
        n = rng.randint(0, 10 - k)
        for f in (levin_direct, weniger_direct):
            t = f(1.0, S, om, k, n)
            t2 = f(1.0, [lam * x + mu for x in S], [lam * w for w in om], k, n)
            basis = max(abs(lam * t), abs(mu), abs(lam * t + mu))
            worst = max(worst, abs(t2 - (lam * t + mu)) / math.ulp(basis))
    assert worst <= 4


def geometric(z, N):
    s, acc = [], 0.0
    for j in range(N + 1):
        acc += z**j
        s.append(acc)
    return s, [z ** (j + 1) for j in range(N + 1)]


@settings(max_examples=200, deadline=None)
@given(st.floats(-0.999, -0.001), st.integers(1, 8), st.integers(0, 4))
def test_geometric_exactness_alternating(z, k, n):
    s, om = geometric(z, n + k)
    assert ulps(levin_direct(1.0, s, om, k, n), 1 / (1 - z)) <= 4


@pytest.mark.parametrize("z", [-0.99, -0.5, -0.1, 0.1, 0.5, 0.9, 0.99, 0.999])
def test_geometric_exactness_first_order(z):
    """d_1 = 1/(1 - z) within 4 ulp for |z| < 1.

    For z close to +1 the inputs' own rounding is amplified by ~1/(1 - z)
    in the denominator difference, so the tail of this grid is expected red.
    """
    s, om = geometric(z, 3)
    for n in range(3):
        assert ulps(levin_direct(1.0, s, om, 1, n), 1 / (1 - z)) <= 4


def test_zero_remainder_short_circuit():
    s = [1.0, 3.0, 6.0, 6.0, 6.0]
    om = [2.0, 3.0, 0.0, 0.0, 0.0]
    assert levin_direct(1.0, s, om, 3, 0) == 6.0
    assert weniger_direct(1.0, s, om, 2, 1) == 6.0
    assert levin_recursive(1.0, s, om, 4).diagonal[2:] == [6.0, 6.0, 6.0]


def test_smith_ford_estimates():
    A = [zeta_alt_terms(2.0)(j) for j in range(6)]
    S = alt_sums(A)
    om = smith_ford_estimates(S, A)
    assert om[0] == pytest.approx(-0.5, rel=1e-15)
    for n in range(len(om)):
        assert om[n] == pytest.approx(S[n + 1] - S[n], rel=1e-14)
    x = 0.5
    A = [x**j for j in range(8)]
    om = smith_ford_estimates(alt_sums(A), A)
    assert om == [(-x) ** (n + 1) for n in range(7)]


def test_denominator_summands_share_sign_for_alternating_input():
    z = 1.01
    S = zeta_alt_partial_sums(z, 21)
    A = [zeta_alt_terms(z)(j) for j in range(22)]
    om = smith_ford_estimates(S, A)
    for w in (levin_weight(1.0), weniger_weight(1.0)):
        for k in range(1, 19):
            for n in range(0, 20 - k):
                terms = [(-1) ** j * comb(k, j) * w(k, n + j) / om[n + j] for j in range(k + 1)]
                assert all(t > 0 for t in terms) or all(t < 0 for t in terms)


def test_stability_flag_on_cancelling_denominator():
    # nearly constant monotone estimates: the k-th difference of a degree k-1
    # polynomial times 1/omega_n is almost zero, far below its summands
    s = [1 - 0.5**n for n in range(20)]
    om = [0.999999**n for n in range(20)]
    tab = levin_recursive(1.0, s, om, 19)
    flags = [tab.unstable[k][0] for k in range(20)]
    assert not any(flags[:5])
    assert all(flags[16:])
    alt = [(-1) ** n / (n + 1) for n in range(20)]
    tab = levin_recursive(1.0, alt_sums([1 / (j + 1) for j in range(20)]), alt, 19)
    assert not any(any(row) for row in tab.unstable)
    assert STABILITY_THRESHOLD == 1e-12


def test_euler_examples():
    assert euler_transform([1.0] * 10, 9) == [0.5] * 10
    u = [1 / (k + 1) for k in range(30)]
    E = euler_transform(u, 29)
    assert E[-1] == pytest.approx(math.log(2), rel=1e-9)
    with pytest.raises(ValueError):
        euler_transform([1.0], 3)


def test_euler_against_binomial_sums():
    u = [Fraction(1, (k + 1) ** 2) for k in range(12)]
    et = EulerTransform()
    for x in u:
        et.push(float(x))
    acc = Fraction(0)
    for k in range(12):
        dk = (-1) ** k * sum((-1) ** m * comb(k, m) * u[m] for m in range(k + 1))
        acc += (-1) ** k * dk / 2 ** (k + 1)
    assert et.sums[-1] == pytest.approx(float(acc), rel=1e-14)


def test_euler_table_41_column():
    A = zeta_alt_terms(1.01)
    E = euler_transform([A(j) for j in range(16)], 15)
    assert E[15] * 1e-3 == pytest.approx(0.100577817763434, rel=5e-13)
    assert E[1] * 1e-3 == pytest.approx(0.090606301069428, rel=5e-13)


def model_sequence(n, alternating):
    """``t + sign_n (n+1)^-1 exp(1/(n+1))`` with t = 0, i.e. c_j = 1/j!."""
    r = math.exp(1 / (n + 1)) / (n + 1)
    return (-1) ** n * r if alternating else r


@pytest.mark.parametrize("transform", [levin_direct, weniger_direct])
@pytest.mark.parametrize("alternating,bound", [(True, -3.5), (False, -1.5)])
def test_error_decay_slopes(transform, alternating, bound):
    """Log-log slope of (T_2^(n) - t)/(s_n - t) over n in [10, 40].

    Theory: -2k = -4 for alternating input, -k = -2 for monotone input.
    """
    k = 2
    s = [model_sequence(n, alternating) for n in range(45)]
    om = [((-1) ** n if alternating else 1) / (n + 1) for n in range(45)]
    xs, ys = [], []
    for n in range(10, 41):
        ratio = transform(1.0, s, om, k, n) / s[n]
        xs.append(math.log(n))
        ys.append(math.log(abs(ratio)))
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    theory = -2 * k if alternating else -k
    assert slope <= bound
    assert abs(slope - theory) <= 0.5
