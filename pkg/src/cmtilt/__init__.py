"""Exact tilting-theoretic invariants of graded curve hypersurface rings."""

from .fields import QQ, FieldSpec
from .quotient import QuotientRing, a_invariant, choose_nzd
from .report import AnalysisReport, analyze, run_catalog
from .ring import GradedRing, RingElement, WeightedPoly, parse_poly

__all__ = [
    "QQ",
    "FieldSpec",
    "GradedRing",
    "RingElement",
    "WeightedPoly",
    "parse_poly",
    "QuotientRing",
    "choose_nzd",
    "a_invariant",
    "AnalysisReport",
    "analyze",
    "run_catalog",
]

__version__ = "0.1.0"
