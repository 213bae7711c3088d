"""Hand-off matchings the recursion cannot reach by lifting.

Each entry was produced once by ``oracle.exists_with_profile`` on the
listed profile and frozen here as sorted ``(u, v)`` vertex pairs.
``selftest`` re-derives and compares them.
"""

from __future__ import annotations

from .hypercube import Matching, Profile, edge_between, verify

_FROZEN: dict[Profile, list[tuple[int, int]]] = {
    (1,): [(0, 1)],
    (1, 1, 1): [(0, 1), (2, 6), (5, 7)],
    (3, 3, 3, 3, 3): [
        (0, 1), (2, 3), (4, 5), (6, 14), (7, 15), (8, 10), (9, 25), (11, 27),
        (12, 28), (16, 20), (17, 21), (19, 23), (22, 30), (24, 26), (29, 31),
    ],
}


def _build(profile: Profile, pairs: list[tuple[int, int]]) -> Matching:
    n = len(profile)
    return Matching(n, tuple(edge_between(u, v, n) for u, v in pairs))


BASE_CASES: dict[Profile, Matching] = {p: _build(p, pairs) for p, pairs in _FROZEN.items()}


def frozen_pairs(profile: Profile) -> list[tuple[int, int]]:
    return list(_FROZEN[profile])


def base_cases_of_dimension(n: int) -> list[tuple[Profile, Matching]]:
    return [(p, m) for p, m in BASE_CASES.items() if len(p) == n]


def check_base_cases() -> list[str]:
    """Problems with the frozen table; empty when every entry verifies."""
    problems = []
    for profile, m in BASE_CASES.items():
        verdict = verify(m, profile)
        if not verdict:
            problems.append(f"base case {profile}: {verdict}")
    return problems


_startup_problems = check_base_cases()
if _startup_problems:
    raise RuntimeError("; ".join(_startup_problems))
