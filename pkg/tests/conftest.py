import math

import pytest


def ulps(x: float, ref: float) -> float:
    """Distance of ``x`` from ``ref`` in units of ``ulp(ref)``."""
    return abs(x - ref) / math.ulp(ref)


def alt_sums(A):
    """Partial sums of ``sum_j (-1)^j A_j``, accumulated left to right."""
    out, acc = [], 0.0
    for j, a in enumerate(A):
        acc = acc + a if j % 2 == 0 else acc - a
        out.append(acc)
    return out


@pytest.fixture
def rng():
    import random

    return random.Random(20240611)


def within_ulps(x: float, ref: float, n: int = 8) -> bool:
    """``x`` equals ``ref`` to ``n`` ulp; a zero reference is measured in ulp(1)."""
    scale = ref if ref != 0 else 1.0
    return abs(x - ref) <= n * math.ulp(scale)


def diagonal_at(S, A, transform, beta, order):
    """Diagonal entry ``T_order^(0)`` computed from explicit sums and magnitudes."""
    from cnct import accelerate_alternating

    res = accelerate_alternating(S, A, transform=transform, beta=beta, max_order=max(order, 2), min_order=order)
    return res.diagonals[transform][order]


def zeta_neg_diagonal(l, transform, beta, order):
    from cnct.functions import zeta_alt_partial_sums, zeta_alt_terms

    A = [zeta_alt_terms(-float(l))(j) for j in range(order + 2)]
    return diagonal_at(zeta_alt_partial_sums(-float(l), order + 1), A, transform, beta, order)


def rising_diagonal(l, transform, beta, order):
    from cnct.functions import rising_power_terms

    A = [float(rising_power_terms(l)(j)) for j in range(order + 2)]
    return diagonal_at(alt_sums(A), A, transform, beta, order)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
