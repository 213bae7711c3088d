"""Exhaustive small-dimension searches around open questions on profiles.

Four families are covered: Hamilton cycles of Q^n, decompositions of
E(Q^n) into 4-cycles, perfect matchings of the middle layer graph, and
perfect matchings of the permutahedron. Each search returns an exact,
deterministically ordered result together with the comparisons the
family calls for.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping, Sequence

from .hypercube import Profile, check_dimension
from .oracle import (
    LabeledGraph,
    SearchBudget,
    SearchBudgetExceeded,
    _Meter,
    _OutOfBudget,
    exact_covers,
    label_counts,
    perfect_matchings,
)

log = logging.getLogger(__name__)

Pair = tuple[int, int]


@dataclass(frozen=True)
class PairWeighting:
    """Symmetric weights on the unordered pairs of ``range(m)``."""

    m: int
    w: tuple[tuple[Pair, int], ...]

    @classmethod
    def from_counts(cls, m: int, counts: Mapping[Pair, int]) -> PairWeighting:
        items = []
        for pair in itertools.combinations(range(m), 2):
            items.append((pair, int(counts.get(pair, 0))))
        extra = set(counts) - {p for p, _ in items}
        if extra:
            raise ValueError(f"pairs {sorted(extra)} are not ordered pairs i < j of range({m})")
        if any(v < 0 for _, v in items):
            raise ValueError("weights must be nonnegative")
        return cls(m, tuple(items))

    def __getitem__(self, pair: Pair) -> int:
        i, j = sorted(pair)
        return dict(self.w)[(i, j)]

    def vector(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.w)

    def row_sum(self, i: int) -> int:
        return sum(v for (a, b), v in self.w if i in (a, b))

    def to_json(self) -> dict:
        # Indices are 1-based for display.
        return {"m": self.m, "w": {f"{a + 1},{b + 1}": v for (a, b), v in self.w}}


def _sorted_weightings(ws: Iterable[PairWeighting]) -> list[PairWeighting]:
    return sorted(ws, key=lambda pw: pw.vector())


def _default_budget(budget: SearchBudget | None, default_max: int) -> SearchBudget:
    return budget if budget is not None else SearchBudget(max_dimension=default_max)


def _gate(n: int, budget: SearchBudget, what: str) -> None:
    if n > budget.max_dimension:
        raise ValueError(f"{what} search refuses n={n}: budget max_dimension is {budget.max_dimension}")


# Hamilton cycles


@dataclass
class HamiltonReport:
    n: int
    cycles: int
    profiles: list[Profile]
    predicted: list[Profile]

    @property
    def missing(self) -> list[Profile]:
        """Predicted profiles with no Hamilton cycle."""
        found = set(self.profiles)
        return [p for p in self.predicted if p not in found]

    @property
    def unexpected(self) -> list[Profile]:
        predicted = set(self.predicted)
        return [p for p in self.profiles if p not in predicted]

    @property
    def agrees(self) -> bool:
        return not self.missing and not self.unexpected


def predicted_hamilton_profiles(n: int) -> list[Profile]:
    """Even tuples summing to 2^n with every entry in [2, 2^(n-1)]."""
    total, top = 1 << n, 1 << (n - 1)
    out = []

    def rec(prefix: tuple[int, ...], left: int) -> None:
        k = n - len(prefix)
        if k == 0:
            if left == 0:
                out.append(prefix)
            return
        for v in range(2, min(top, left) + 1, 2):
            if left - v >= 2 * (k - 1):
                rec(prefix + (v,), left - v)

    rec((), total)
    return sorted(out)


def hamilton_profiles(n: int, budget: SearchBudget | None = None) -> HamiltonReport:
    """Profiles of all Hamilton cycles of Q^n.

    Cycles are rooted at vertex 0 and only kept when the second vertex is
    smaller than the last, so each undirected cycle is seen once.
    """
    check_dimension(n)
    budget = _default_budget(budget, 4)
    _gate(n, budget, "Hamilton")
    size = 1 << n
    if n == 1:
        return HamiltonReport(n, 0, [], predicted_hamilton_profiles(n))
    meter = _Meter(budget)
    counts = [0] * n
    found: set[Profile] = set()
    cycles = 0

    def dfs(v: int, visited: int, depth: int, second: int) -> None:
        nonlocal cycles
        meter.tick()
        if depth == size:
            # Close back to vertex 0; the orientation rule keeps one of the two directions.
            if v & (v - 1) == 0 and second < v:
                d = v.bit_length() - 1
                counts[d] += 1
                found.add(tuple(counts))
                counts[d] -= 1
                cycles += 1
            return
        for d in range(n):
            w = v ^ (1 << d)
            if visited >> w & 1:
                continue
            counts[d] += 1
            dfs(w, visited | (1 << w), depth + 1, second if depth > 1 else w)
            counts[d] -= 1

    try:
        dfs(0, 1, 1, 0)
    except _OutOfBudget:
        raise SearchBudgetExceeded(f"Hamilton search in Q^{n} exceeded its budget") from None
    return HamiltonReport(n, cycles, sorted(found), predicted_hamilton_profiles(n))


# 4-cycle decompositions


def cube_faces(n: int) -> list[tuple[Pair, int, tuple[int, int, int, int]]]:
    """All 2-faces of Q^n as ``((i, j), base, edge ids)``.

    Edge ids index the canonical edges ``(base, dir)`` as ``dir * 2^(n-1) + rank``
    where rank is the base with bit ``dir`` squeezed out.
    """
    half = 1 << (n - 1)

    def edge_id(base: int, d: int) -> int:
        low = base & ((1 << d) - 1)
        high = base >> (d + 1)
        return d * half + (high << d | low)

    faces = []
    for i, j in itertools.combinations(range(n), 2):
        bi, bj = 1 << i, 1 << j
        for v in range(1 << n):
            if v & (bi | bj):
                continue
            ids = (edge_id(v, i), edge_id(v | bj, i), edge_id(v, j), edge_id(v | bi, j))
            faces.append(((i, j), v, ids))
    return faces


@dataclass
class FaceReport:
    n: int
    decompositions: int
    weightings: list[PairWeighting]


def face_decomposition_profiles(n: int, budget: SearchBudget | None = None) -> FaceReport:
    """Weightings of all partitions of E(Q^n) into 4-cycles.

    Every 4-cycle of Q^n is a 2-face, so this is an exact cover of the
    n*2^(n-1) edges by faces. A face spanning directions i, j adds one to w({i, j}).
    """
    check_dimension(n)
    budget = _default_budget(budget, 4)
    _gate(n, budget, "face decomposition")
    n_edges = n << (n - 1)
    faces = cube_faces(n) if n >= 2 else []
    masks = [sum(1 << e for e in ids) for _, _, ids in faces]
    seen: set[tuple[int, ...]] = set()
    result: list[PairWeighting] = []
    total = 0
    if faces:
        for picked in exact_covers(n_edges, masks, budget):
            total += 1
            c = Counter(faces[k][0] for k in picked)
            pw = PairWeighting.from_counts(n, c)
            if pw.vector() not in seen:
                seen.add(pw.vector())
                result.append(pw)
    return FaceReport(n, total, _sorted_weightings(result))


def face_weighting_obstructions(pw: PairWeighting, n: int) -> list[str]:
    """Which necessary conditions ``pw`` violates as a 4-cycle decomposition profile of Q^n.

    Conservation: each direction class has 2^(n-1) edges and a face holds
    two of them, so the faces through direction i number 2^(n-2).
    Parity: that number must also be even.
    """
    problems = []
    for i in range(n):
        r = pw.row_sum(i)
        if 2 * r != 1 << (n - 1):
            problems.append(f"edge-count conservation fails in direction {i + 1}: {r} faces hold {2 * r} of {1 << (n - 1)} edges")
        if r % 2:
            problems.append(f"parity fails in direction {i + 1}: {r} faces")
    return problems


# Middle layer graph


def middle_layer_graph(n: int) -> LabeledGraph:
    """Induced subgraph of Q^(2n+1) on weights n and n+1; labels are directions."""
    dim = 2 * n + 1
    lower = [v for v in range(1 << dim) if v.bit_count() == n]
    upper = [v for v in range(1 << dim) if v.bit_count() == n + 1]
    edges = [(v, v | 1 << d, d) for v in lower for d in range(dim) if not v >> d & 1]
    return LabeledGraph(lower + upper, edges)


def middle_layer_conditions(n: int) -> dict[str, int]:
    return {
        "sum": comb(2 * n + 1, n + 1),
        "parity": comb(2 * n + 1, n + 1) % 2,
        "max_per_direction": comb(2 * n - 1, n - 1),
    }


def middle_layer_violations(x: Sequence[int], n: int) -> list[str]:
    cond = middle_layer_conditions(n)
    problems = []
    if sum(x) != cond["sum"]:
        problems.append(f"sum {sum(x)} != {cond['sum']}")
    for i, v in enumerate(x):
        if v % 2 != cond["parity"]:
            problems.append(f"coordinate {i + 1} has parity {v % 2}, needs {cond['parity']}")
        if v > cond["max_per_direction"]:
            problems.append(f"coordinate {i + 1} is {v} > {cond['max_per_direction']}")
    return problems


def middle_layer_feasible_tuples(n: int) -> list[Profile]:
    """Tuples passing the sum, parity and per-direction cap conditions."""
    cond = middle_layer_conditions(n)
    dim = 2 * n + 1
    choices = [v for v in range(cond["max_per_direction"] + 1) if v % 2 == cond["parity"]]
    return sorted(
        t for t in itertools.product(choices, repeat=dim) if sum(t) == cond["sum"]
    )


@dataclass
class MiddleLayerReport:
    n: int
    matchings: int
    profiles: list[Profile]
    feasible: list[Profile]


def middle_layer_profiles(n: int, budget: SearchBudget | None = None) -> MiddleLayerReport:
    if n < 1:
        raise ValueError("middle layer graph needs n >= 1")
    budget = _default_budget(budget, 2)
    _gate(n, budget, "middle layer")
    graph = middle_layer_graph(n)
    found: set[Profile] = set()
    total = 0
    for picked in perfect_matchings(graph, budget):
        total += 1
        c = label_counts(graph, picked)
        found.add(tuple(c.get(d, 0) for d in range(2 * n + 1)))
    return MiddleLayerReport(n, total, sorted(found), middle_layer_feasible_tuples(n))


def lucas_parity(top: int, bottom: int) -> int:
    """Parity of C(top, bottom): 1 iff no binary carries occur adding bottom and top - bottom."""
    if not 0 <= bottom <= top <= 1 << 62:
        raise ValueError(f"need 0 <= bottom <= top <= 2^62, got ({top}, {bottom})")
    return 1 if bottom & (top - bottom) == 0 else 0


# Permutahedron


def permutahedron_graph(n: int) -> LabeledGraph:
    """Perm(n): permutations of 1..n+1, adjacent when they swap two consecutive values.

    The edge label is the 0-based position pair (i, j) that was swapped;
    the edge is parallel to e_i - e_j.
    """
    if n < 1:
        raise ValueError("permutahedron needs n >= 1")
    vertices = list(itertools.permutations(range(1, n + 2)))
    edges = []
    for p in vertices:
        pos = {val: i for i, val in enumerate(p)}
        for k in range(1, n + 1):
            i, j = pos[k], pos[k + 1]
            if i < j:  # each edge once: from the side where k sits left of k+1
                q = list(p)
                q[i], q[j] = q[j], q[i]
                edges.append((p, tuple(q), (i, j)))
    return LabeledGraph(vertices, edges)


@dataclass
class PermReport:
    n: int
    matchings: int
    weightings: list[PairWeighting]
    multiplicity: list[int] = field(default_factory=list)


def permutahedron_profiles(n: int, budget: SearchBudget | None = None) -> PermReport:
    budget = _default_budget(budget, 3)
    _gate(n, budget, "permutahedron")
    graph = permutahedron_graph(n)
    tally: Counter[tuple[int, ...]] = Counter()
    by_vec: dict[tuple[int, ...], PairWeighting] = {}
    total = 0
    for picked in perfect_matchings(graph, budget):
        total += 1
        pw = PairWeighting.from_counts(n + 1, label_counts(graph, picked))
        tally[pw.vector()] += 1
        by_vec.setdefault(pw.vector(), pw)
    ordered = _sorted_weightings(by_vec.values())
    return PermReport(n, total, ordered, [tally[pw.vector()] for pw in ordered])


# Pairs of position pairs that split {0,1,2,3} into two disjoint pairs.
PERM3_ORTHOGONAL = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def perm3_violations(pw: PairWeighting) -> list[str]:
    problems = []
    for a, b in PERM3_ORTHOGONAL:
        if pw[a] + pw[b] != 4:
            problems.append(f"w{a[0] + 1}{a[1] + 1} + w{b[0] + 1}{b[1] + 1} = {pw[a] + pw[b]} != 4")
    for (i, j), v in pw.w:
        if v % 2:
            problems.append(f"w{i + 1}{j + 1} = {v} is odd")
    return problems


def perm3_polytope_points(strict: bool) -> list[tuple[int, ...]]:
    """Even lattice points of {w >= 0, orthogonal pair sums = 4}, as vectors over pairs of range(4).

    With ``strict`` only points with every w > 0 (the relative interior) are kept.
    """
    pairs = list(itertools.combinations(range(4), 2))
    low = 2 if strict else 0
    points = []
    for choice in itertools.product(range(low, 5 - low, 2), repeat=3):
        w = {}
        for (a, b), v in zip(PERM3_ORTHOGONAL, choice):
            w[a], w[b] = v, 4 - v
        points.append(tuple(w[p] for p in pairs))
    return sorted(points)
