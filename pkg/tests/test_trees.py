from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from csdgame import (Graph, Tree, check_tree_defense_optimal, gen_path, gen_random_tree,
                     gen_three_partition_tree, is_connected_subset, optimal_tree_strategy, solve_maxmin)
from csdgame.trees import tree_pstar

from conftest import star


def test_path_blocks():
    part = check_tree_defense_optimal(gen_path(6), 3)
    assert part.blocks == ((0, 1, 2), (3, 4, 5))
    q = optimal_tree_strategy(part)
    assert sorted(p for _, p in q.items()) == [Fraction(1, 2)] * 2
    assert q.vertex_probabilities().p == (Fraction(1, 2),) * 6


def test_star_not_optimal():
    assert check_tree_defense_optimal(star(3), 2) is None


def test_lambda_one_singletons():
    g = gen_random_tree(9, 2)
    part = check_tree_defense_optimal(g, 1)
    assert sorted(part.blocks) == [(v,) for v in range(9)]


def test_lambda_n():
    g = gen_random_tree(7, 5)
    part = check_tree_defense_optimal(g, 7)
    assert part.blocks == (tuple(range(7)),)
    assert optimal_tree_strategy(part).items() == [(tuple(range(7)), 1)]


def test_indivisible_lambda():
    assert check_tree_defense_optimal(gen_path(5), 2) is None


def test_three_partition_tree_has_no_partition():
    inst = gen_three_partition_tree([1, 2, 3] * 3, 3)
    assert check_tree_defense_optimal(inst.graph, inst.lam) is None


def test_path12_lambda4():
    part = check_tree_defense_optimal(gen_path(12), 4)
    assert len(part.blocks) == 3
    assert tree_pstar(part) == Fraction(1, 3)


def test_rejects_non_tree():
    with pytest.raises(ValueError):
        check_tree_defense_optimal(Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)]), 1)


def test_block_closes_mid_branch():
    # leg 1-2-3 fills a block on its own while the hub's other leg is still open
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5)])
    part = check_tree_defense_optimal(g, 3)
    assert sorted(part.blocks) == [(0, 4, 5), (1, 2, 3)]


def test_spider_without_partition():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])
    assert check_tree_defense_optimal(g, 3) is None
    assert solve_maxmin(g, 3).pstar < Fraction(1, 2)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10_000), st.data())
def test_agrees_with_lp(n, seed, data):
    g = gen_random_tree(n, seed)
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    lam = data.draw(st.sampled_from(divisors))
    part = check_tree_defense_optimal(g, lam)
    optimal = solve_maxmin(g, lam).pstar == Fraction(lam, n)
    assert (part is not None) == optimal
    if part is None:
        return
    flat = [v for b in part.blocks for v in b]
    assert sorted(flat) == list(range(n))
    assert all(len(b) == lam and is_connected_subset(g, b) for b in part.blocks)
    q = optimal_tree_strategy(part)
    assert len(q.support) == n // lam
    assert all(q.probs[j] == Fraction(lam, n) for j in q.support)
    assert q.vertex_probabilities().pmin == Fraction(lam, n)


def test_tree_object_and_root_choice():
    g = gen_random_tree(8, 11)
    for root in range(8):
        assert (check_tree_defense_optimal(Tree.from_graph(g, root), 2) is None) == \
               (check_tree_defense_optimal(g, 2) is None)
