"""Quantum synchronizable codes from binary cyclic codes."""

from .codes import CodeError, CyclicCode, min_distance
from .polyring import BinPoly, order
from .qscengine import (
    Distance,
    HypothesisError,
    QscRecord,
    qsc_bch,
    qsc_bch_sum,
    qsc_duadic,
    qsc_duadic_corollary,
    qsc_intersection,
    qsc_pair,
    qsc_product,
    qsc_rr4n,
    qsc_rr_duadic,
    qsc_sum,
    verify_record,
)

__all__ = [
    "BinPoly",
    "CodeError",
    "CyclicCode",
    "Distance",
    "HypothesisError",
    "QscRecord",
    "min_distance",
    "order",
    "qsc_bch",
    "qsc_bch_sum",
    "qsc_duadic",
    "qsc_duadic_corollary",
    "qsc_intersection",
    "qsc_pair",
    "qsc_product",
    "qsc_rr4n",
    "qsc_rr_duadic",
    "qsc_sum",
    "verify_record",
]
