"""Convergence acceleration of slowly convergent monotone series.

Van Wijngaarden condensation turns a monotone series into an alternating one,
which Levin-type sequence transformations (d and delta variants) then sum to
machine precision.
"""
from .condensation import CondensationConfig, CondensedTerm, Condenser, NonConvergentInnerSum, condensed_term, vw_partial_sums
from .driver import ALTERNATING, BOTH, CONDENSE, AccelerationRequest, AccelerationResult, accelerate_alternating, cnct
from .series import SeriesError, SeriesTerms, SignContractError, SignPattern, partial_sums
from .transforms import EULER, LEVIN, WENIGER, TransformTable, euler_transform, levin_direct, levin_recursive, weniger_direct, weniger_recursive

__version__ = "0.1.0"

__all__ = [
    "ALTERNATING",
    "AccelerationRequest",
    "AccelerationResult",
    "BOTH",
    "CONDENSE",
    "CondensationConfig",
    "CondensedTerm",
    "Condenser",
    "EULER",
    "LEVIN",
    "NonConvergentInnerSum",
    "SeriesError",
    "SeriesTerms",
    "SignContractError",
    "SignPattern",
    "TransformTable",
    "WENIGER",
    "accelerate_alternating",
    "cnct",
    "condensed_term",
    "euler_transform",
    "levin_direct",
    "levin_recursive",
    "partial_sums",
    "vw_partial_sums",
    "weniger_direct",
    "weniger_recursive",
]
