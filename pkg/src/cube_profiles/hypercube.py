"""Vertices, edges and matchings of the hypercube Q^n.

Vertices are n-bit integers. Direction ``d`` (0-indexed) flips bit ``d``, so
the 1-indexed coordinate ``x_{d+1}`` counts edges in direction ``d``.
An edge is stored canonically as ``(base, dir)`` where ``base`` is the
endpoint with bit ``dir`` cleared.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import itemgetter
from typing import Iterable, NamedTuple, Sequence

MAX_DIMENSION = 62

Profile = tuple[int, ...]

_by_dir_then_base = itemgetter(1, 0)


class Edge(NamedTuple):
    base: int
    dir: int

    @property
    def tip(self) -> int:
        return self.base | (1 << self.dir)

    def endpoints(self) -> tuple[int, int]:
        return self.base, self.base | (1 << self.dir)


def check_dimension(n: int) -> None:
    if not isinstance(n, int) or not 1 <= n <= MAX_DIMENSION:
        raise ValueError(f"dimension must be an integer in [1, {MAX_DIMENSION}], got {n!r}")


def make_edge(u: int, dir: int, n: int) -> Edge:
    """Canonical edge joining ``u`` and ``u ^ (1 << dir)`` in Q^n."""
    check_dimension(n)
    if not 0 <= dir < n:
        raise ValueError(f"direction {dir} out of range for Q^{n}")
    if not 0 <= u < (1 << n):
        raise ValueError(f"vertex {u} out of range for Q^{n}")
    return Edge(u & ~(1 << dir), dir)


def edge_between(u: int, v: int, n: int) -> Edge:
    """Canonical edge for the vertex pair ``{u, v}``; they must be adjacent."""
    diff = u ^ v
    if diff == 0 or diff & (diff - 1):
        raise ValueError(f"vertices {u} and {v} are not adjacent in Q^{n}")
    return make_edge(u, diff.bit_length() - 1, n)


@dataclass(frozen=True)
class Matching:
    """An edge set of Q^n, kept sorted by (dir, base).

    Construction does not check disjointness so that malformed input can
    still be handed to :func:`verify` for a structured rejection.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        check_dimension(self.n)
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", tuple(sorted(edges, key=_by_dir_then_base)))

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def is_perfect(self) -> bool:
        return len(self.edges) == 1 << (self.n - 1)

    def vertex_pairs(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted ascending."""
        return sorted(e.endpoints() for e in self.edges)


def _trusted(n: int, edges: list[Edge]) -> Matching:
    # Edges already sorted by (dir, base); skip the re-sort in __post_init__.
    m = object.__new__(Matching)
    object.__setattr__(m, "n", n)
    object.__setattr__(m, "edges", tuple(edges))
    return m


def profile_of(m: Matching) -> Profile:
    counts = [0] * m.n
    for _, d in m.edges:
        counts[d] += 1
    return tuple(counts)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    invariant: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "accept"
        return f"reject: {self.invariant}: {self.detail}"


def verify(m: Matching, x: Sequence[int], require_perfect: bool = False) -> VerifyResult:
    """Check that ``m`` is a matching of Q^n with profile ``x``.

    Invariants are checked in a fixed order and the first failure is
    reported: profile length, edge range, canonical form, vertex
    disjointness, profile equality, perfection.
    """
    n = m.n
    if len(x) != n:
        return VerifyResult(False, "profile-length", f"profile has {len(x)} entries, Q^{n} needs {n}")
    size = 1 << n
    seen: set[int] = set()
    counts = [0] * n
    for base, d in m.edges:
        if not 0 <= d < n:
            return VerifyResult(False, "edge-in-range", f"direction {d} out of range")
        if not 0 <= base < size:
            return VerifyResult(False, "edge-in-range", f"vertex {base} out of range")
        if base >> d & 1:
            return VerifyResult(False, "canonical-edge", f"edge ({base}, dir {d}) has bit {d} set in its base")
        tip = base | (1 << d)
        for v in (base, tip):
            if v in seen:
                return VerifyResult(False, "vertex-disjoint", f"vertex {v} is covered twice")
            seen.add(v)
        counts[d] += 1
    if tuple(counts) != tuple(x):
        return VerifyResult(False, "profile", f"profile is {tuple(counts)}, expected {tuple(x)}")
    if require_perfect and len(seen) != size:
        return VerifyResult(False, "perfect", f"{size - len(seen)} vertices uncovered")
    return VerifyResult(True)


def _coverage(m: Matching) -> bytearray:
    covered = bytearray(1 << m.n)
    for base, d in m.edges:
        covered[base] = 1
        covered[base | (1 << d)] = 1
    return covered


def uncovered(m: Matching) -> list[int]:
    """Vertices of Q^n missed by ``m``, in increasing order."""
    covered = _coverage(m)
    return [v for v, c in enumerate(covered) if not c]


def double_and_extend(m: Matching) -> Matching:
    """Two copies of ``m`` in Q^(n+1) joined along the new top direction.

    Every vertex left uncovered by ``m`` is matched to its twin, so the
    result is perfect with profile ``(2x_1, ..., 2x_n, 2^n - 2|x|)``.
    """
    n = m.n
    if n + 1 > MAX_DIMENSION:
        raise OverflowError(f"cannot extend Q^{n}: dimension cap is {MAX_DIMENSION}")
    top = 1 << n
    # Within a direction every lower-copy base is below every upper-copy
    # base, so concatenating per-direction runs keeps (dir, base) order.
    edges: list[Edge] = []
    start = 0
    for d, count in enumerate(profile_of(m)):
        run = m.edges[start:start + count]
        edges.extend(run)
        edges.extend(Edge(b | top, d) for b, _ in run)
        start += count
    edges.extend(Edge(v, n) for v in uncovered(m))
    return _trusted(n + 1, edges)


class DominationError(ValueError):
    pass


def delete_down(m: Matching, y: Sequence[int]) -> Matching:
    """Sub-matching with profile ``y``, keeping the smallest bases per direction."""
    x = profile_of(m)
    if len(y) != m.n:
        raise ValueError(f"profile has {len(y)} entries, Q^{m.n} needs {m.n}")
    for i, (want, have) in enumerate(zip(y, x)):
        if not 0 <= want <= have:
            raise DominationError(f"coordinate {i + 1}: requested {want} but matching has {have}")
    if tuple(y) == x:
        return m
    kept: list[Edge] = []
    start = 0
    for d, have in enumerate(x):
        kept.extend(m.edges[start:start + y[d]])
        start += have
    return _trusted(m.n, kept)


def _bit_permuter(perm: Sequence[int], n: int):
    # One lookup table per byte of the input word.
    tables = []
    for lo in range(0, n, 8):
        width = min(8, n - lo)
        table = [0] * (1 << width)
        for chunk in range(1 << width):
            out = 0
            for b in range(width):
                if chunk >> b & 1:
                    out |= 1 << perm[lo + b]
            table[chunk] = out
        tables.append((lo, (1 << width) - 1, table))

    def apply(v: int) -> int:
        out = 0
        for lo, mask, table in tables:
            out |= table[(v >> lo) & mask]
        return out

    return apply


def check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    perm = tuple(perm)
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of range({n})")
    return perm


def permute_coordinates(m: Matching, perm: Sequence[int]) -> Matching:
    """Relabel directions: old direction ``d`` becomes ``perm[d]``."""
    perm = check_permutation(perm, m.n)
    if perm == tuple(range(m.n)):
        return m
    move = _bit_permuter(perm, m.n)
    return Matching(m.n, tuple(Edge(move(b), perm[d]) for b, d in m.edges))


def permute_profile(x: Sequence[int], perm: Sequence[int]) -> Profile:
    out = [0] * len(x)
    for d, p in enumerate(perm):
        out[p] = x[d]
    return tuple(out)


def direction_class(n: int, d: int) -> Matching:
    """All 2^(n-1) edges in direction ``d``."""
    bit = 1 << d
    return Matching(n, tuple(Edge(v, d) for v in range(1 << n) if not v & bit))
