"""Arithmetic on profile tuples: evenness, perfection, precedence, lifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hypercube import Profile


class LiftingInapplicable(ValueError):
    """The last coordinate is too small to absorb the mod-4 corrections."""


@dataclass(frozen=True)
class ProfileClass:
    is_even: bool
    is_perfect: bool
    o_count: int


def _check_length(x: Sequence[int], n: int) -> None:
    if len(x) != n:
        raise ValueError(f"profile {tuple(x)} has length {len(x)}, expected {n}")


def is_even(x: Sequence[int]) -> bool:
    return all(v % 2 == 0 for v in x)


def is_perfect(x: Sequence[int], n: int) -> bool:
    return sum(x) == 1 << (n - 1)


def o_count(x: Sequence[int]) -> int:
    """Number of coordinates, last one excluded, that are 2 mod 4."""
    return sum(1 for v in x[:-1] if v % 4 == 2)


def classify(x: Sequence[int], n: int) -> ProfileClass:
    _check_length(x, n)
    return ProfileClass(is_even(x), is_perfect(x, n), o_count(x))


def precedes(y: Sequence[int], x: Sequence[int]) -> bool:
    """Coordinatewise ``y <= x``."""
    if len(y) != len(x):
        raise ValueError(f"cannot compare profiles of lengths {len(y)} and {len(x)}")
    return all(a <= b for a, b in zip(y, x))


def round_up_even(x: Sequence[int]) -> Profile:
    return tuple(v + (v & 1) for v in x)


def lift_half(x: Sequence[int]) -> Profile:
    """Perfect even tuple in N^n dominating the halved head of ``x`` in N^(n+1).

    ``x`` must be sorted, even, with ``sum(x) <= 2^n`` and
    ``x[-1] >= 2 * o_count(x)``. Halve the first n coordinates, bump the
    odd halves (coordinates that were 2 mod 4) up by one, then put the
    remaining even deficit on the last coordinate so the result stays
    sorted.
    """
    x = tuple(x)
    n = len(x) - 1
    if n < 1:
        raise ValueError("lift_half needs a profile with at least two coordinates")
    if not is_even(x):
        raise ValueError(f"lift_half needs an even profile, got {x}")
    if any(a > b for a, b in zip(x, x[1:])):
        raise ValueError(f"lift_half needs a non-decreasing profile, got {x}")
    if sum(x) > 1 << n:
        raise ValueError(f"profile {x} sums to more than 2^{n}")
    o = o_count(x)
    if x[-1] < 2 * o:
        raise LiftingInapplicable(f"last coordinate {x[-1]} < 2*o(x) = {2 * o} for {x}")

    half = tuple(v // 2 for v in x[:-1])
    z = [h + (h & 1) for h in half]
    deficit = (1 << (n - 1)) - sum(z)
    # Fails only when n == 1, where 2^(n-1) is odd.
    if deficit < 0 or deficit % 2:
        raise LiftingInapplicable(f"padding deficit {deficit} for {x} is not a nonnegative even number")
    z[-1] += deficit
    lifted = tuple(z)

    assert is_even(lifted) and sum(lifted) == 1 << (n - 1) and precedes(half, lifted)
    return lifted
