from fractions import Fraction
from math import floor

from hypothesis import given, settings, strategies as st

from csdgame import (Tree, approx_defense_strategy, approximation_factor, cover_size_bound, cover_tree,
                     gen_cycle, gen_path, gen_random_connected, gen_random_tree, gen_star_of_lines,
                     guaranteed_catch_fraction, is_connected_subset, solve_maxmin, spanning_tree)

from conftest import star


def test_path5_trace():
    cover = cover_tree(Tree.from_graph(gen_path(5)), 2)
    assert cover.subgraphs == ((0, 1), (2, 3), (3, 4))
    assert len(cover) <= cover_size_bound(5, 2) == Fraction(9, 2)


def test_path_equal_lambda():
    cover = cover_tree(Tree.from_graph(gen_path(4)), 4)
    assert cover.subgraphs == ((0, 1, 2, 3),)
    assert guaranteed_catch_fraction(gen_path(4), 4) == 1


def test_star_trace():
    cover = cover_tree(Tree.from_graph(star(3)), 2)
    assert cover.subgraphs == ((0, 1), (0, 2), (0, 3))
    assert cover.coverage()[0] == 3 == cover.source_tree.degree(0)


def test_c6_lambda3():
    g = gen_cycle(6)
    cover = cover_tree(spanning_tree(g), 3)
    assert cover.subgraphs == ((0, 1, 2), (1, 2, 3), (0, 4, 5))
    assert Fraction(1, len(cover)) >= Fraction(1, 4)
    assert approximation_factor(6, 3) == 2


def test_path5_guarantee():
    g = gen_path(5)
    share = guaranteed_catch_fraction(g, 2)
    assert share == Fraction(1, 3)
    pstar = solve_maxmin(g, 2).pstar
    assert pstar == Fraction(1, 3)
    assert share * approximation_factor(5, 2) >= pstar


def test_star_of_lines_15_6():
    inst = gen_star_of_lines(15, 6)
    assert guaranteed_catch_fraction(inst.graph, 6) >= Fraction(2, 11)


def test_single_vertex():
    # both bounds degenerate at n = 1 (they evaluate to 0); the cover is just {0}
    cover = cover_tree(Tree.from_graph(gen_path(1)), 1)
    assert cover.subgraphs == ((0,),)
    assert cover_size_bound(1, 1) == 0 and approximation_factor(1, 1) == 0


def test_strategy_is_uniform_over_cover():
    g = gen_random_connected(9, 13, 2)
    q = approx_defense_strategy(g, 3)
    cover = cover_tree(spanning_tree(g), 3)
    assert sorted(q.items()) == sorted((s, Fraction(1, len(cover))) for s in cover.subgraphs)
    assert q.vertex_probabilities().pmin >= Fraction(1, len(cover))


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 25), st.integers(0, 10_000), st.data())
def test_cover_invariants(n, seed, data):
    t = Tree.from_graph(gen_random_tree(n, seed), root=data.draw(st.integers(0, n - 1)))
    lam = data.draw(st.integers(1, n))
    cover = cover_tree(t, lam)
    cov = cover.coverage()
    assert all(len(s) == lam and is_connected_subset(t.graph, s) for s in cover.subgraphs)
    assert len(set(cover.subgraphs)) == len(cover)
    assert min(cov) >= 1
    assert sum(cov) == len(cover) * lam
    assert any(cov[v] == 1 for v in t.leaves())
    assert len(cover) <= cover_size_bound(n, lam)
    assert len(cover) <= floor(cover_size_bound(n, lam))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 10), st.integers(0, 10), st.integers(0, 10_000), st.data())
def test_guarantee_against_exact(n, extra, seed, data):
    g = gen_random_connected(n, min(n - 1 + extra, n * (n - 1) // 2), seed)
    lam = data.draw(st.integers(1, n))
    share = guaranteed_catch_fraction(g, lam)
    assert share * approximation_factor(n, lam) >= solve_maxmin(g, lam).pstar
