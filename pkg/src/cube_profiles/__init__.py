"""Matchings of the hypercube with prescribed direction profiles."""

from .constructor import Decision, Reason, Verdict, construct_even, decide
from .hypercube import (
    Edge,
    Matching,
    delete_down,
    double_and_extend,
    make_edge,
    permute_coordinates,
    profile_of,
    uncovered,
    verify,
)
from .oracle import SearchBudget, SearchResult, Status, count_with_profile, enumerate_admissible, exists_with_profile
from .profiles import classify, lift_half, precedes

__version__ = "0.1.0"
