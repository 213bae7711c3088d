import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cube_profiles.hypercube import (
    Edge,
    Matching,
    DominationError,
    delete_down,
    direction_class,
    double_and_extend,
    edge_between,
    make_edge,
    permute_coordinates,
    permute_profile,
    profile_of,
    uncovered,
    verify,
)

# A (1,1,1) matching in Q^3: 010-011, 100-110, 001-101.
ONES3 = Matching(3, (Edge(0b010, 0), Edge(0b100, 1), Edge(0b001, 2)))


def test_make_edge_keeps_canonical_base():
    assert make_edge(0b101, 1, 3) == Edge(0b101, 1)


def test_make_edge_clears_direction_bit():
    assert make_edge(0b111, 1, 3) == Edge(0b101, 1)


@pytest.mark.parametrize("u, d, n", [(0b100, 3, 3), (8, 0, 3), (0, -1, 3), (0, 0, 63)])
def test_make_edge_rejects_out_of_range(u, d, n):
    with pytest.raises(ValueError):
        make_edge(u, d, n)


def test_edge_between_requires_adjacency():
    assert edge_between(6, 2, 3) == Edge(2, 2)
    with pytest.raises(ValueError):
        edge_between(0, 3, 3)


def test_profile_of_empty():
    assert profile_of(Matching(3)) == (0, 0, 0)


def test_profile_of_one_per_direction_matching():
    assert profile_of(ONES3) == (1, 1, 1)
    assert verify(ONES3, (1, 1, 1))


def test_listed_edge_set_is_not_one_per_direction():
    # {000-100, 001-011, 101-111}: two of these edges flip the middle bit.
    m = Matching(3, (edge_between(0b000, 0b100, 3), edge_between(0b001, 0b011, 3), edge_between(0b101, 0b111, 3)))
    assert profile_of(m) == (0, 2, 1)
    assert uncovered(m) == [0b010, 0b110]


def test_profile_of_perfect_q2_sums_to_two():
    for d in range(2):
        assert sum(profile_of(direction_class(2, d))) == 2


def test_verify_rejects_repeated_edge():
    m = Matching(3, (Edge(0, 0), Edge(0, 0)))
    res = verify(m, (2, 0, 0))
    assert not res and res.invariant == "vertex-disjoint"


def test_verify_accepts_partial_and_rejects_when_perfect_required():
    assert verify(ONES3, (1, 1, 1), require_perfect=False)
    res = verify(ONES3, (1, 1, 1), require_perfect=True)
    assert not res and res.invariant == "perfect" and "2 vertices" in res.detail


@pytest.mark.parametrize(
    "edges, invariant",
    [
        ((Edge(0, 3),), "edge-in-range"),
        ((Edge(8, 0),), "edge-in-range"),
        ((Edge(1, 0),), "canonical-edge"),
        ((Edge(0, 0), Edge(1, 1)), "vertex-disjoint"),
    ],
)
def test_verify_names_first_violation(edges, invariant):
    res = verify(Matching(3, edges), (1, 1, 0))
    assert res.invariant == invariant


def test_verify_rejects_wrong_profile_and_length():
    assert verify(ONES3, (1, 1, 0)).invariant == "profile"
    assert verify(ONES3, (1, 1)).invariant == "profile-length"


def test_uncovered():
    assert uncovered(direction_class(3, 2)) == []
    assert uncovered(Matching(2)) == [0, 1, 2, 3]
    assert uncovered(ONES3) == [0b000, 0b111]


def test_double_and_extend_ones3():
    m = double_and_extend(ONES3)
    assert m.n == 4
    assert profile_of(m) == (2, 2, 2, 2)
    assert verify(m, (2, 2, 2, 2), require_perfect=True)
    # the new-direction edges sit at the formerly uncovered corners
    assert sorted(e.base for e in m.edges if e.dir == 3) == [0b000, 0b111]


def test_double_and_extend_small():
    assert profile_of(double_and_extend(Matching(1))) == (0, 2)
    assert profile_of(double_and_extend(Matching(1, (Edge(0, 0),)))) == (2, 0)


def test_double_and_extend_dimension_cap():
    with pytest.raises(OverflowError):
        double_and_extend(Matching(62))


def test_delete_down():
    m = double_and_extend(ONES3)
    assert delete_down(m, profile_of(m)) is m
    sub = delete_down(m, (0, 1, 2, 2))
    assert len(sub) == 5 and profile_of(sub) == (0, 1, 2, 2)
    assert set(sub.edges) <= set(m.edges)
    # largest bases are removed first
    kept = [e.base for e in sub.edges if e.dir == 1]
    assert kept == [min(e.base for e in m.edges if e.dir == 1)]
    with pytest.raises(DominationError, match="coordinate 1"):
        delete_down(m, (3, 0, 0, 0))


def test_permute_coordinates():
    assert permute_coordinates(ONES3, (0, 1, 2)) is ONES3
    swapped = permute_coordinates(ONES3, (2, 1, 0))
    assert profile_of(swapped) == (1, 1, 1) and verify(swapped, (1, 1, 1))
    q2 = direction_class(2, 0)
    assert profile_of(permute_coordinates(q2, (1, 0))) == (0, 2)
    with pytest.raises(ValueError):
        permute_coordinates(ONES3, (0, 0, 1))


def test_matching_sorted_by_direction_then_base():
    m = Matching(3, (Edge(4, 1), Edge(0, 2), Edge(0, 1)))
    assert m.edges == (Edge(0, 1), Edge(4, 1), Edge(0, 2))


# properties


@st.composite
def matchings(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    order = draw(st.permutations(range(1 << n)))
    free = set(range(1 << n))
    edges = []
    for v in order:
        if v not in free:
            continue
        options = [d for d in range(n) if v ^ (1 << d) in free]
        if not options or not draw(st.booleans()):
            continue
        d = draw(st.sampled_from(options))
        free -= {v, v ^ (1 << d)}
        edges.append(make_edge(v, d, n))
    return Matching(n, tuple(edges))


@settings(max_examples=150, deadline=None)
@given(matchings())
def test_counting_identities(m):
    x = profile_of(m)
    assert sum(x) == len(m)
    assert 2 * len(m) + len(uncovered(m)) == 1 << m.n
    assert verify(m, x, require_perfect=m.is_perfect)


@settings(max_examples=150, deadline=None)
@given(matchings(max_n=7))
def test_double_and_extend_is_perfect_with_doubled_profile(m):
    x = profile_of(m)
    big = double_and_extend(m)
    assert profile_of(big) == tuple(2 * v for v in x) + ((1 << m.n) - 2 * sum(x),)
    assert verify(big, profile_of(big), require_perfect=True)
    assert uncovered(big) == []


@settings(max_examples=150, deadline=None)
@given(matchings(), st.data())
def test_delete_down_hits_target(m, data):
    y = tuple(data.draw(st.integers(0, v)) for v in profile_of(m))
    sub = delete_down(m, y)
    assert profile_of(sub) == y
    assert verify(sub, y)


@settings(max_examples=150, deadline=None)
@given(matchings(max_n=9), st.data())
def test_permutation_group_action(m, data):
    pi = data.draw(st.permutations(range(m.n)))
    sigma = data.draw(st.permutations(range(m.n)))
    composed = tuple(pi[sigma[d]] for d in range(m.n))
    once = permute_coordinates(m, composed)
    twice = permute_coordinates(permute_coordinates(m, sigma), pi)
    assert once == twice
    assert profile_of(once) == permute_profile(profile_of(m), composed)
    assert verify(once, profile_of(once), require_perfect=m.is_perfect)


def test_permute_matches_naive_bit_shuffle():
    n = 11
    m = double_and_extend(direction_class(10, 3))
    for pi in [tuple(reversed(range(n))), tuple(range(1, n)) + (0,)]:
        out = permute_coordinates(m, pi)
        expected = set()
        for b, d in m.edges:
            nb = sum(1 << pi[k] for k in range(n) if b >> k & 1)
            expected.add(Edge(nb, pi[d]))
        assert set(out.edges) == expected


def test_all_permutations_of_q3_direction_class():
    m = direction_class(3, 0)
    images = {profile_of(permute_coordinates(m, p)) for p in itertools.permutations(range(3))}
    assert images == {(4, 0, 0), (0, 4, 0), (0, 0, 4)}
