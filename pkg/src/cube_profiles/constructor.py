"""Witness construction for even profiles and the admissibility decision.

Every even profile with sum at most 2^(n-1) is realized by a matching of
Q^n. The construction sorts the profile, pads it to a perfect tuple, and
builds it by induction on the dimension: a perfect even sorted tuple
``(x_1, ..., x_m)`` is ``double_and_extend`` applied to a matching of Q^(m-1)
with profile ``(x_1/2, ..., x_(m-1)/2)``. That inner matching comes from
deleting edges out of either a frozen base case or a recursively built
perfect matching for ``lift_half(x)``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .basecases import base_cases_of_dimension
from .hypercube import (
    Matching,
    Profile,
    check_dimension,
    delete_down,
    double_and_extend,
    permute_coordinates,
    verify,
)
from .oracle import SearchBudget, Status, exists_with_profile
from .profiles import is_even, lift_half, o_count, precedes, round_up_even

log = logging.getLogger(__name__)

# Matchings up to this dimension are small enough to memoize.
_CACHE_DIMENSION = 10


class Reason(enum.Enum):
    PERFECT_BUT_ODD = "perfect-but-odd"
    SUM_EXCEEDS_HALF = "sum-exceeds-half"
    COORDINATE_EXCEEDS_DIRECTION_CLASS = "coordinate-exceeds-direction-class"
    NO_MATCHING_EXISTS = "no-matching-exists"


class Verdict(enum.Enum):
    ADMISSIBLE = "Admissible"
    NOT_ADMISSIBLE = "NotAdmissible"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    witness: Matching | None = None
    reason: Reason | None = None
    route: str = ""

    def __str__(self) -> str:
        if self.verdict is Verdict.NOT_ADMISSIBLE:
            return f"NotAdmissible: {self.reason.value}"
        return self.verdict.value


class InadmissibleProfile(ValueError):
    def __init__(self, reason: Reason, message: str):
        super().__init__(message)
        self.reason = reason


def _validate(x: Sequence[int], n: int) -> Profile:
    check_dimension(n)
    x = tuple(x)
    if len(x) != n:
        raise ValueError(f"profile {x} has length {len(x)}, expected {n}")
    if any(not isinstance(v, int) or v < 0 for v in x):
        raise ValueError(f"profile {x} must have nonnegative integer entries")
    return x


def _size_obstruction(x: Profile, n: int) -> InadmissibleProfile | None:
    half = 1 << (n - 1)
    for i, v in enumerate(x):
        if v > half:
            return InadmissibleProfile(
                Reason.COORDINATE_EXCEEDS_DIRECTION_CLASS,
                f"coordinate {i + 1} is {v} but Q^{n} has only {half} edges per direction",
            )
    if sum(x) > half:
        return InadmissibleProfile(
            Reason.SUM_EXCEEDS_HALF, f"profile sums to {sum(x)} > 2^{n - 1} = {half}"
        )
    return None


def sorting_permutation(x: Sequence[int]) -> tuple[int, ...]:
    """Stable ascending order: ``x[order[k]]`` is the k-th smallest entry."""
    return tuple(sorted(range(len(x)), key=x.__getitem__))


def _perfect_sorted(x: Profile) -> Matching:
    if len(x) <= _CACHE_DIMENSION:
        return _perfect_sorted_cached(x)
    return _build_perfect_sorted(x)


@lru_cache(maxsize=8192)
def _perfect_sorted_cached(x: Profile) -> Matching:
    return _build_perfect_sorted(x)


def _build_perfect_sorted(x: Profile) -> Matching:
    m = len(x)
    if m < 2:
        raise AssertionError(f"no perfect even tuple exists in dimension {m}")
    inner = tuple(v // 2 for v in x[:-1])
    for base_profile, base in base_cases_of_dimension(m - 1):
        if precedes(inner, base_profile):
            return double_and_extend(delete_down(base, inner))
    # Above dimension 7 the largest coordinate is at least 2^(m-1)/m >= 2(m-1),
    # so the lift always applies; this is checked rather than assumed.
    lifted = lift_half(x)
    return double_and_extend(delete_down(_perfect_sorted(lifted), inner))


def construct_even(x: Sequence[int], n: int) -> Matching:
    """A matching of Q^n whose profile is the even tuple ``x``.

    Requires every entry even, at most 2^(n-1), and a total of at most 2^(n-1).
    The output depends only on ``x``.
    """
    x = _validate(x, n)
    problem = _size_obstruction(x, n)
    if problem is not None:
        raise problem
    if not is_even(x):
        raise ValueError(f"construct_even needs an even profile, got {x}")
    if sum(x) == 0:
        return Matching(n)

    order = sorting_permutation(x)
    xs = tuple(x[i] for i in order)
    deficit = (1 << (n - 1)) - sum(xs)
    padded = xs[:-1] + (xs[-1] + deficit,)
    m = _perfect_sorted(padded)
    if deficit:
        m = delete_down(m, xs)
    return permute_coordinates(m, order)


def _dominating_base_case(x: Profile, n: int) -> Matching | None:
    order = sorting_permutation(x)
    xs = tuple(x[i] for i in order)
    for base_profile, base in base_cases_of_dimension(n):
        if precedes(xs, tuple(sorted(base_profile))):
            return permute_coordinates(delete_down(base, xs), order)
    return None


def decide(x: Sequence[int], n: int, oracle_max_dim: int | None = None,
           budget: SearchBudget | None = None) -> Decision:
    """Three-valued admissibility verdict for ``x`` in Q^n.

    Admissible verdicts always carry a verified witness. Odd tuples that
    neither round up to a feasible even tuple nor sit under a base case
    go to the brute-force oracle when ``n <= oracle_max_dim``, and are
    otherwise reported Unknown.
    """
    x = _validate(x, n)
    half = 1 << (n - 1)

    problem = _size_obstruction(x, n)
    if problem is not None:
        return Decision(Verdict.NOT_ADMISSIBLE, reason=problem.reason, route="size")
    # Summing all vertices of F_2^n gives zero only for n >= 2; Q^1 has the
    # odd perfect profile (1).
    if n >= 2 and sum(x) == half and not is_even(x):
        return Decision(Verdict.NOT_ADMISSIBLE, reason=Reason.PERFECT_BUT_ODD, route="parity")

    rounded = round_up_even(x)
    if sum(rounded) <= half:
        witness = delete_down(construct_even(rounded, n), x)
        return _admissible(witness, x, "round-up")

    witness = _dominating_base_case(x, n)
    if witness is not None:
        return _admissible(witness, x, "base-case")

    if oracle_max_dim is not None and n <= oracle_max_dim:
        budget = budget or SearchBudget(max_dimension=oracle_max_dim)
        if budget.max_dimension < n:
            budget = SearchBudget(n, budget.node_limit, budget.time_limit)
        res = exists_with_profile(n, x, budget)
        if res.status is Status.FOUND:
            return _admissible(res.witness, x, "oracle")
        if res.status is Status.EXHAUSTED:
            return Decision(Verdict.NOT_ADMISSIBLE, reason=Reason.NO_MATCHING_EXISTS, route="oracle")
        log.info("oracle budget exhausted on %s in Q^%d", x, n)
    return Decision(Verdict.UNKNOWN, route="unresolved")


def _admissible(witness: Matching, x: Profile, route: str) -> Decision:
    check = verify(witness, x, require_perfect=sum(x) == 1 << (witness.n - 1))
    if not check:
        raise AssertionError(f"{route} witness for {x} failed verification: {check}")
    return Decision(Verdict.ADMISSIBLE, witness=witness, route=route)


def lift_guard_holds(x: Sequence[int]) -> bool:
    """Whether ``lift_half`` applies to the sorted tuple ``x``."""
    return x[-1] >= 2 * o_count(x)

