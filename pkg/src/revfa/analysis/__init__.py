"""Equivalence checks, Pin-condition falsification and bounded model search."""

from .equivalence import LanguageOracle, bounded_equiv, exact_equiv, words
from .pin import PinResult, pin_falsify
from .search import SearchInfeasible, SearchReport, estimate_candidates, search_model

__all__ = [
    "LanguageOracle", "PinResult", "SearchInfeasible", "SearchReport", "bounded_equiv",
    "estimate_candidates", "exact_equiv", "pin_falsify", "search_model", "words",
]
