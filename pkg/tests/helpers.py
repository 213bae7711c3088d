"""Independent oracles used by the tests. Nothing here imports the package's search code."""

from __future__ import annotations

import itertools
import random
from math import comb


def stars_and_bars(total: int, parts: int) -> int:
    return comb(total + parts - 1, parts - 1)


def compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def perfect_even_tuples(n: int):
    """All even tuples in N^n summing to 2^(n-1)."""
    for c in compositions(1 << (n - 2), n):
        yield tuple(2 * v for v in c)


def random_perfect_even(n: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform over perfect even tuples, via a uniform stars-and-bars draw."""
    stars = 1 << (n - 2)
    bars = sorted(rng.sample(range(stars + n - 1), n - 1))
    parts, prev = [], -1
    for b in bars + [stars + n - 1]:
        parts.append(b - prev - 1)
        prev = b
    return tuple(2 * p for p in parts)


def permanent(matrix) -> int:
    """Permanent by dynamic programming over column subsets."""
    size = len(matrix)
    dp = {0: 1}
    for row in matrix:
        nxt: dict[int, int] = {}
        for used, ways in dp.items():
            for c in range(size):
                if row[c] and not used >> c & 1:
                    key = used | 1 << c
                    nxt[key] = nxt.get(key, 0) + ways
        dp = nxt
    return dp.get((1 << size) - 1, 0)


def biadjacency(left, right, adjacent) -> list[list[int]]:
    return [[1 if adjacent(u, v) else 0 for v in right] for u in left]


def hypercube_perfect_matching_count(n: int) -> int:
    evens = [v for v in range(1 << n) if bin(v).count("1") % 2 == 0]
    odds = [v for v in range(1 << n) if bin(v).count("1") % 2 == 1]
    return permanent(biadjacency(evens, odds, lambda a, b: bin(a ^ b).count("1") == 1))


def brute_hamilton_cycles(n: int) -> tuple[int, set[tuple[int, ...]]]:
    """Count undirected Hamilton cycles of Q^n by trying every vertex order."""
    size = 1 << n
    cycles = 0
    profiles = set()
    for order in itertools.permutations(range(1, size)):
        walk = (0,) + order + (0,)
        diffs = [walk[k] ^ walk[k + 1] for k in range(size)]
        if all(d and d & (d - 1) == 0 for d in diffs):
            cycles += 1
            prof = [0] * n
            for d in diffs:
                prof[d.bit_length() - 1] += 1
            profiles.add(tuple(prof))
    return cycles // 2, profiles


def sorted_perfect_even(n: int):
    """Non-decreasing even tuples in N^n summing to 2^(n-1)."""

    def rec(prefix, left, low):
        k = n - len(prefix)
        if k == 1:
            if left >= low:
                yield prefix + (left,)
            return
        for v in range(low, left // k + 1):
            yield from rec(prefix + (v,), left - v, v)

    for t in rec((), 1 << (n - 2), 0):
        yield tuple(2 * v for v in t)
