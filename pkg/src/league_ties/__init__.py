"""Exact counting of tied double round-robin seasons under 3/1/0 scoring.

Two independent routes to every count: a brute-force enumeration of all
match outcomes (the oracle, practical to n=5) and an optimised counter that
folds away symmetries, prunes impossible first-team profiles and searches
the rest (practical to n=8).
"""

from .brute import count_completions_bruteforce, count_tied_bruteforce
from .engine import KNOWN_TOTALS, TiedCountReport, count_tied, resume
from .eulerian import eulerian_count, eulerian_count_bruteforce
from .kernels import BACKEND
from .profiles import (
    Profile,
    ProfileClass,
    classify_profile,
    doubling_factor,
    iter_profiles,
    representation_factor,
)
from .scoring import LeagueSize, complement, pair_outcome, result_points
from .search import count_completions

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "KNOWN_TOTALS",
    "LeagueSize",
    "Profile",
    "ProfileClass",
    "TiedCountReport",
    "classify_profile",
    "complement",
    "count_completions",
    "count_completions_bruteforce",
    "count_tied",
    "count_tied_bruteforce",
    "doubling_factor",
    "eulerian_count",
    "eulerian_count_bruteforce",
    "iter_profiles",
    "pair_outcome",
    "representation_factor",
    "resume",
    "result_points",
    "__version__",
]
