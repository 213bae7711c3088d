from __future__ import annotations

from typing import Iterator

from . import formats
from .basecases import BASE_CASES, check_base_cases, frozen_pairs
from .constructor import Verdict, decide
from .oracle import SearchBudget, bounded_tuples, exists_with_profile


def run_selftest(max_oracle_dim: int = 3) -> Iterator[tuple[str, bool, str]]:
    """Yield ``(check, passed, detail)`` for the base table and small cross-checks."""
    problems = check_base_cases()
    yield "base cases verify", not problems, "; ".join(problems)

    budget = SearchBudget(max_dimension=max(5, max_oracle_dim))
    for profile, stored in BASE_CASES.items():
        res = exists_with_profile(len(profile), profile, budget)
        same = res.found and formats.to_json(res.witness) == formats.to_json(stored)
        same = same and res.witness.vertex_pairs() == frozen_pairs(profile)
        yield f"base case {profile} re-derived byte-for-byte", bool(same), res.status.value

    for n in range(1, max_oracle_dim + 1):
        half = 1 << (n - 1)
        bad = []
        for x in bounded_tuples(n, half):
            d = decide(x, n, oracle_max_dim=n)
            found = exists_with_profile(n, x, budget).found
            if (d.verdict is Verdict.ADMISSIBLE) != found or d.verdict is Verdict.UNKNOWN:
                bad.append(x)
        yield f"decide agrees with oracle in Q^{n}", not bad, f"disagreements: {bad}" if bad else ""
