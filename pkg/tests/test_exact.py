import random

import pytest
from hypothesis import given, settings, strategies as st

from burnkit.enumeration import enumerate_free_trees
from burnkit.exact import (
    BurningSchedule,
    burning_number_bruteforce,
    burning_number_exact,
    burns_within,
    is_well_burnable,
    spanning_tree_oracle,
    spanning_trees,
    verify_schedule,
)
from burnkit.graph import (
    DisconnectedGraphError,
    Graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from burnkit.intmath import ceil_sqrt
from helpers import random_connected, to_nx

K1 = Graph(1, ((),))


def test_verify_schedule_examples():
    p9 = path_graph(9)
    assert verify_schedule(p9, BurningSchedule((2, 6, 8)))
    assert not verify_schedule(p9, BurningSchedule((4, 1, 7)))
    assert verify_schedule(K1, [0])
    with pytest.raises(IndexError):
        verify_schedule(p9, [9])


def test_exact_small_examples():
    assert burning_number_exact(path_graph(9)).burning_number == 3
    assert burning_number_exact(K1).burning_number == 1
    assert burning_number_exact(star_graph(5)).burning_number == 2
    assert burning_number_bruteforce(star_graph(5)) == 2


def test_bruteforce_examples():
    assert burning_number_bruteforce(path_graph(4)) == ceil_sqrt(4) == 2
    assert burning_number_bruteforce(K1) == 1
    # N_1 plus N_0 reach at most 4 of the 5 cycle vertices
    assert burning_number_bruteforce(cycle_graph(5)) == 3
    with pytest.raises(ValueError):
        burning_number_bruteforce(path_graph(11))


def test_exact_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError):
        burning_number_exact(Graph.from_edges(3, [(0, 1)]))


def test_budget_gives_explicit_unknown():
    res = burning_number_exact(path_graph(10), budget=3)
    assert not res.known and res.burning_number is None and res.witness is None
    assert res.lower_bound == 4
    res = burning_number_exact(path_graph(16), budget=2)
    assert not res.known and res.lower_bound == 4
    assert burning_number_exact(path_graph(16), budget=4).burning_number == 4


def test_lower_bound_proof_tags():
    res = burning_number_exact(path_graph(10))
    assert res.burning_number == 4 and "cover fewer than 10" in res.lower_bound_proof
    res = burning_number_exact(cycle_graph(5))
    assert res.burning_number == 3 and res.lower_bound == 3
    assert burning_number_exact(K1).lower_bound_proof.startswith("trivial")


def test_decision_monotone():
    g = random_connected(12, random.Random(2))
    b = burning_number_exact(g).burning_number
    assert burns_within(g, b - 1) is None
    for k in range(b, b + 4):
        s = burns_within(g, k)
        assert s is not None and s.rounds == k and verify_schedule(g, s)


def test_well_burnable_examples():
    ok, res = is_well_burnable(path_graph(9))
    assert ok and res.burning_number == 3
    assert is_well_burnable(K1)[0]
    for n in range(1, 8):
        for t in enumerate_free_trees(n):
            assert is_well_burnable(t)[0]


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6))
def test_exact_matches_bruteforce_random(n, seed):
    g = random_connected(n, random.Random(seed))
    res = burning_number_exact(g)
    assert res.burning_number == burning_number_bruteforce(g)
    assert verify_schedule(g, res.witness)


def test_spanning_tree_enumeration_counts():
    import networkx as nx

    rng = random.Random(8)
    for _ in range(20):
        g = random_connected(rng.randint(1, 7), rng)
        trees = list(spanning_trees(g))
        expected = round(nx.number_of_spanning_trees(to_nx(g))) if g.n > 1 else 1
        assert len(trees) == expected
        assert len({tuple(sorted(t)) for t in trees}) == expected


def test_spanning_tree_oracle_examples():
    assert spanning_tree_oracle(cycle_graph(4)) == 2 == burning_number_exact(cycle_graph(4)).burning_number
    assert spanning_tree_oracle(complete_graph(4)) == 2
    t = path_graph(7)
    assert spanning_tree_oracle(t) == burning_number_exact(t).burning_number
    with pytest.raises(ValueError):
        spanning_tree_oracle(path_graph(11))
