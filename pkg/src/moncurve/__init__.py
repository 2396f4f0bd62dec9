"""Exact decision procedure for analyticity of g/h at the origin via monomial curves."""
from .analyticity import (
    Analytic,
    CurveCheckReport,
    DecideConfig,
    Inconclusive,
    MeromorphicGerm,
    NotAnalytic,
    curve_check,
    decide,
    liftability_scan,
    required_truncation,
    step3_witness,
    verify_witness,
    witness_transport,
)
from .blowup import ElementaryMove, MoveSequence, liftability, transport_curve
from .expr import germ_from_text, parse_germ
from .principalize import MonomialIdeal, minimalize, principalize_search, regularize_tuple
from .semigroup import choose_unique_tuple, semigroup, sg_contains, sg_frobenius, sg_frobenius_bound
from .series import MonomialMap, MultiSeries, UniSeries, substitute_curve

__all__ = [name for name in dir() if not name.startswith("_")]
