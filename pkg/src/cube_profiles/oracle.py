"""Exhaustive backtracking ground truth for small dimensions.

Independent of the constructor: nothing here knows about doubling or
lifting. Results are exact (a search that finishes without a witness is a
proof of non-existence) unless a node or time limit cuts it short, in
which case the status says so.
"""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field
from typing import Hashable, Iterator, Sequence

from .hypercube import Edge, Matching, Profile, check_dimension, verify

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    max_dimension: int = 5
    node_limit: int | None = None
    time_limit: float | None = None  # seconds


class Status(enum.Enum):
    FOUND = "Found"
    EXHAUSTED = "Exhausted-None"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class SearchResult:
    status: Status
    nodes_explored: int
    witness: Matching | None = None
    count: int | None = None

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


class SearchBudgetExceeded(RuntimeError):
    """Raised by aggregate searches when an underlying search ran out of budget."""


class _OutOfBudget(Exception):
    pass


class _Meter:
    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.node_limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _OutOfBudget
        if self.deadline is not None and self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget


def _check_request(n: int, x: Sequence[int], budget: SearchBudget) -> tuple[int, ...]:
    check_dimension(n)
    if n > budget.max_dimension:
        raise ValueError(
            f"oracle refuses Q^{n}: budget max_dimension is {budget.max_dimension}; raise it to override"
        )
    x = tuple(int(v) for v in x)
    if len(x) != n or any(v < 0 for v in x):
        raise ValueError(f"profile {x} is not a nonnegative tuple of length {n}")
    return x


def _profile_search(n: int, x: tuple[int, ...], budget: SearchBudget, counting: bool) -> SearchResult:
    size = 1 << n
    remaining = list(x)
    skips_left = size - 2 * sum(x)
    meter = _Meter(budget)
    if skips_left < 0 or any(v > size // 2 for v in x):
        return SearchResult(Status.EXHAUSTED, 0, count=0 if counting else None)

    decided = bytearray(size)  # covered or deliberately left uncovered
    chosen: list[Edge] = []
    total = 0

    def dfs(v: int, to_place: int, skips: int) -> bool:
        nonlocal total
        meter.tick()
        if to_place == 0:
            if counting:
                total += 1
                return False
            return True
        while decided[v]:
            v += 1
        # 2*to_place + skips == number of undecided vertices, so the
        # skip allowance alone bounds what is still placeable.
        decided[v] = 1
        for d in range(n):
            if not remaining[d]:
                continue
            bit = 1 << d
            if v & bit:
                continue  # partner is smaller, hence already decided
            w = v | bit
            if decided[w]:
                continue
            decided[w] = 1
            remaining[d] -= 1
            chosen.append(Edge(v, d))
            if dfs(v + 1, to_place - 1, skips):
                return True
            chosen.pop()
            remaining[d] += 1
            decided[w] = 0
        if skips:
            if dfs(v + 1, to_place, skips - 1):
                return True
        decided[v] = 0
        return False

    try:
        hit = dfs(0, sum(x), skips_left)
    except _OutOfBudget:
        return SearchResult(Status.BUDGET_EXCEEDED, meter.nodes)
    if counting:
        return SearchResult(Status.FOUND if total else Status.EXHAUSTED, meter.nodes, count=total)
    if hit:
        witness = Matching(n, tuple(chosen))
        assert verify(witness, x, require_perfect=sum(x) == size // 2)
        return SearchResult(Status.FOUND, meter.nodes, witness=witness)
    return SearchResult(Status.EXHAUSTED, meter.nodes)


def exists_with_profile(n: int, x: Sequence[int], budget: SearchBudget | None = None) -> SearchResult:
    """Search Q^n for a matching with profile ``x``.

    Vertices are decided in increasing order: match the smallest undecided
    vertex upward along each direction with budget left (increasing
    direction order), or leave it uncovered while the allowance
    ``2^n - 2*sum(x)`` lasts.
    """
    budget = budget or SearchBudget()
    x = _check_request(n, x, budget)
    result = _profile_search(n, x, budget, counting=False)
    log.debug("exists_with_profile(%d, %s): %s after %d nodes", n, x, result.status.value, result.nodes_explored)
    return result


def count_with_profile(n: int, x: Sequence[int], budget: SearchBudget | None = None) -> SearchResult:
    """Exact number of matchings (as edge sets) of Q^n with profile ``x``."""
    budget = budget or SearchBudget()
    x = _check_request(n, x, budget)
    return _profile_search(n, x, budget, counting=True)


def bounded_tuples(n: int, sum_bound: int, cap: int | None = None) -> Iterator[Profile]:
    """All nonnegative n-tuples with sum <= ``sum_bound`` (and entries <= ``cap``), lexicographic."""
    cap = sum_bound if cap is None else min(cap, sum_bound)

    def rec(prefix: tuple[int, ...], left: int) -> Iterator[Profile]:
        if len(prefix) == n:
            yield prefix
            return
        for v in range(min(cap, left) + 1):
            yield from rec(prefix + (v,), left - v)

    yield from rec((), sum_bound)


def enumerate_admissible(n: int, sum_bound: int, budget: SearchBudget | None = None) -> set[Profile]:
    """Every profile with sum <= ``sum_bound`` realized by some matching of Q^n.

    Searches once per sorted profile and expands by symmetry.
    """
    budget = budget or SearchBudget()
    _check_request(n, (0,) * n, budget)
    verdict: dict[Profile, bool] = {}
    admissible: set[Profile] = set()
    for x in bounded_tuples(n, sum_bound):
        key = tuple(sorted(x))
        if key not in verdict:
            res = exists_with_profile(n, key, budget)
            if res.status is Status.BUDGET_EXCEEDED:
                raise SearchBudgetExceeded(f"budget exhausted on profile {key} in Q^{n}")
            verdict[key] = res.found
        if verdict[key]:
            admissible.add(x)
    return admissible


# Generic exact cover, shared with the explorer's graph families.


def exact_covers(
    n_items: int, options: Sequence[int], budget: SearchBudget | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield every selection of option indices whose bitmasks partition ``n_items`` items.

    Always branches on the lowest uncovered item, trying its options in
    index order. Raises :class:`SearchBudgetExceeded` when the budget runs out.
    """
    meter = _Meter(budget or SearchBudget(max_dimension=10**9))
    full = (1 << n_items) - 1
    by_item: list[list[tuple[int, int]]] = [[] for _ in range(n_items)]
    for idx, mask in enumerate(options):
        if mask <= 0 or mask > full:
            raise ValueError(f"option {idx} has mask outside the item range")
        low = (mask & -mask).bit_length() - 1
        by_item[low].append((idx, mask))

    picked: list[int] = []

    def rec(covered: int) -> Iterator[tuple[int, ...]]:
        meter.tick()
        if covered == full:
            yield tuple(picked)
            return
        free = ~covered & (covered + 1)
        item = free.bit_length() - 1
        for idx, mask in by_item[item]:
            if mask & covered:
                continue
            picked.append(idx)
            yield from rec(covered | mask)
            picked.pop()

    try:
        yield from rec(0)
    except _OutOfBudget:
        raise SearchBudgetExceeded(f"exact cover search exceeded its budget after {meter.nodes} nodes") from None


@dataclass
class LabeledGraph:
    """Simple graph whose edges each carry one direction label."""

    vertices: list[Hashable]
    edges: list[tuple[Hashable, Hashable, Hashable]]
    index: dict[Hashable, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self.index = {v: i for i, v in enumerate(self.vertices)}
        if len(self.index) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        seen = set()
        for u, v, _ in self.edges:
            if u == v:
                raise ValueError(f"loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"parallel edge {u!r}-{v!r}")
            seen.add(key)


def perfect_matchings(graph: LabeledGraph, budget: SearchBudget | None = None) -> Iterator[tuple[int, ...]]:
    """Yield perfect matchings of ``graph`` as tuples of edge indices."""
    masks = [(1 << graph.index[u]) | (1 << graph.index[v]) for u, v, _ in graph.edges]
    if len(graph.vertices) % 2:
        return iter(())
    return exact_covers(len(graph.vertices), masks, budget)


def label_counts(graph: LabeledGraph, edge_ids: Sequence[int]) -> dict[Hashable, int]:
    counts: dict[Hashable, int] = {}
    for i in edge_ids:
        label = graph.edges[i][2]
        counts[label] = counts.get(label, 0) + 1
    return counts

