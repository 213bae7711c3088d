import random

import pytest

from cube_profiles.hypercube import permute_profile, verify
from cube_profiles.oracle import (
    LabeledGraph,
    SearchBudget,
    SearchBudgetExceeded,
    Status,
    bounded_tuples,
    count_with_profile,
    enumerate_admissible,
    exact_covers,
    exists_with_profile,
    perfect_matchings,
)

from helpers import hypercube_perfect_matching_count


def test_exists_one_per_direction_in_q3():
    res = exists_with_profile(3, (1, 1, 1))
    assert res.status is Status.FOUND
    assert verify(res.witness, (1, 1, 1))


def test_q2_has_no_one_one_matching():
    # Frozen from an oracle run; by hand, the only perfect matchings of Q^2
    # are the two direction classes.
    assert exists_with_profile(2, (1, 1)).status is Status.EXHAUSTED


def test_direction_class_is_found():
    res = exists_with_profile(3, (4, 0, 0))
    assert res.found and verify(res.witness, (4, 0, 0), require_perfect=True)


@pytest.mark.parametrize("n, x, count", [(1, (1,), 1), (2, (2, 0), 1), (3, (0, 0, 4), 1), (2, (1, 0), 2), (3, (0, 0, 0), 1)])
def test_small_counts(n, x, count):
    assert count_with_profile(n, x).count == count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_perfect_matching_totals_match_permanent(n):
    half = 1 << (n - 1)
    total = sum(count_with_profile(n, x).count for x in bounded_tuples(n, half) if sum(x) == half)
    assert total == hypercube_perfect_matching_count(n)


def test_known_totals():
    assert hypercube_perfect_matching_count(3) == 9
    assert hypercube_perfect_matching_count(4) == 272


def test_enumerate_admissible_q2():
    assert enumerate_admissible(2, 2) == {(0, 0), (1, 0), (0, 1), (2, 0), (0, 2)}


def test_enumerate_admissible_q3_contains_ones():
    assert (1, 1, 1) in enumerate_admissible(3, 3)


def test_every_small_tuple_admissible_in_q4():
    found = enumerate_admissible(4, 7)
    assert found == set(bounded_tuples(4, 7))


def test_budget_exceeded_is_a_status():
    res = count_with_profile(5, (4, 4, 4, 2, 2), SearchBudget(node_limit=50))
    assert res.status is Status.BUDGET_EXCEEDED and res.nodes_explored == 51
    with pytest.raises(SearchBudgetExceeded):
        enumerate_admissible(3, 4, SearchBudget(node_limit=1))


def test_dimension_gate():
    with pytest.raises(ValueError):
        exists_with_profile(6, (0,) * 6)
    assert exists_with_profile(6, (0,) * 5 + (2,), SearchBudget(max_dimension=6)).found


def test_oracle_symmetry():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 4)
        x = tuple(rng.randint(0, 1 << (n - 1)) for _ in range(n))
        perm = list(range(n))
        rng.shuffle(perm)
        assert exists_with_profile(n, x).status == exists_with_profile(n, permute_profile(x, perm)).status


def test_oracle_determinism():
    a = exists_with_profile(5, (3, 3, 3, 3, 3))
    b = exists_with_profile(5, (3, 3, 3, 3, 3))
    assert a == b


def test_exact_covers_small():
    # items {0,1,2,3}; options {0,1},{2,3},{0,2},{1,3},{0,1,2,3}
    covers = sorted(exact_covers(4, [0b0011, 0b1100, 0b0101, 0b1010, 0b1111]))
    assert covers == [(0, 1), (2, 3), (4,)]


def test_perfect_matchings_of_hexagon():
    verts = list(range(6))
    g = LabeledGraph(verts, [(i, (i + 1) % 6, i % 3) for i in range(6)])
    assert len(list(perfect_matchings(g))) == 2


def test_labeled_graph_rejects_parallel_edges():
    with pytest.raises(ValueError):
        LabeledGraph([0, 1], [(0, 1, "a"), (1, 0, "b")])
