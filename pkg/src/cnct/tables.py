"""Registry of the reference tables reproduced by ``cnct table``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .functions import (
    WATSON_3F2,
    BesselSumParams,
    HypParams,
    LerchParams,
    bessel_product_terms,
    lerch_terms,
    pfq_terms,
    polylog_terms,
    zeta_dirichlet_terms,
)
from .series import Scalar, SeriesTerms


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    title: str
    make_terms: Callable[[], SeriesTerms]
    params: dict
    scale: float
    orders: int
    golden: Scalar
    euler: bool = False
    #: relative tolerance, or absolute per component for complex goldens
    tolerance: float = 5e-13
    euler_golden: Optional[float] = None


def _hyp(num, den, z):
    return lambda: pfq_terms(HypParams(num, den, z))


TABLES: dict[str, TableSpec] = {
    t.table_id: t
    for t in (
        TableSpec("4.1", "zeta(1.01)", lambda: zeta_dirichlet_terms(1.01), {"z": 1.01}, 1e-3, 15,
                  0.100577943338497, euler=True, euler_golden=0.100577817763434),
        TableSpec("4.2", "zeta(-1), divergent alternating series", lambda: zeta_dirichlet_terms(-1.0),
                  {"z": -1.0}, 10.0, 15, -0.833333333333333),
        TableSpec("4.3", "zeta(1/2 + 13.7 i)", lambda: zeta_dirichlet_terms(0.5 + 13.7j),
                  {"z": "0.5+13.7i"}, 1.0, 25, 0.107439455835313 - 0.312976660556163j, tolerance=1e-12),
        TableSpec("5.1", "Li_1(0.99999) = -ln(0.00001)", lambda: polylog_terms(1, "0.99999"),
                  {"s": 1.0, "z": "0.99999"}, 1e-2, 20, 0.115129254649702),
        TableSpec("5.2", "Li_2(0.99999)", lambda: polylog_terms(2, "0.99999"),
                  {"s": 2.0, "z": "0.99999"}, 1e-1, 15, 0.164480893699293),
        TableSpec("5.3", "Li_3(0.99999)", lambda: polylog_terms(3, "0.99999"),
                  {"s": 3.0, "z": "0.99999"}, 1e-1, 15, 0.120204045438733),
        TableSpec("5.4", "Phi(0.99999, 2, 10000)", lambda: lerch_terms(LerchParams("0.99999", 2.0, 10000.0)),
                  {"z": "0.99999", "s": 2.0, "alpha": 10000.0}, 1e4, 20, 0.798585139222548),
        TableSpec("6.1", "3F2(1, 3/2, 5; 9/8, 47/8; 0.99999)", _hyp((1.0, 1.5, 5.0), (1.125, 5.875), "0.99999"),
                  {"num": "1,3/2,5", "den": "9/8,47/8", "z": "0.99999"}, 1e-4, 20, 0.238434298763330),
        TableSpec("6.2", "3F2(1, 3, 7; 5/2, 14; 0.99999)", _hyp((1.0, 3.0, 7.0), (2.5, 14.0), "0.99999"),
                  {"num": "1,3,7", "den": "5/2,14", "z": "0.99999"}, 1e-1, 20, 0.267102823984762),
        TableSpec("6.3", "3F2(1, 3, 7; 5/2, 14; 1)", _hyp((1.0, 3.0, 7.0), (2.5, 14.0), 1.0),
                  {"num": "1,3,7", "den": "5/2,14", "z": 1.0}, 1e-1, 20, WATSON_3F2 * 1e-1),
        TableSpec("7.1", "sum_l (2l+1) j_l(0.9999*0.7 i) h_l(0.7 i)",
                  lambda: bessel_product_terms(BesselSumParams("0.9999", "0.7")),
                  {"r": "0.9999", "y": "0.7"}, 1e-5, 25, -0.142847143207135),
    )
}


def check_value(spec: TableSpec, value: Scalar) -> tuple[bool, float]:
    """Compare a displayed (scaled) value with the golden one.

    Returns ``(ok, error)`` where the error is relative for real goldens and
    the larger per-component absolute deviation for complex ones.
    """
    g = spec.golden
    if isinstance(g, complex):
        v = complex(value)
        err = max(abs(v.real - g.real), abs(v.imag - g.imag))
    else:
        if isinstance(value, complex):
            return False, float("inf")
        err = abs(value - g) / abs(g)
    return err <= spec.tolerance, err
