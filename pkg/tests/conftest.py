from itertools import combinations

import pytest

from csdgame import Graph, gen_cycle, gen_fig1_graph, gen_path, is_connected_subset

def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))

def brute_subgraphs(g: Graph, lam: int) -> list[tuple[int, ...]]:
    return [s for s in combinations(range(g.n), lam) if is_connected_subset(g, s)]

def brute_three_partition(a, m) -> bool:
    """Exhaustive search for a split of `a` into m triples of equal sum."""
    a = sorted(a)
    target = sum(a) // m

    def split(rest):
        if not rest:
            return True
        first, others = rest[0], rest[1:]
        for i, j in combinations(range(len(others)), 2):
            if first + others[i] + others[j] == target:
                left = [x for k, x in enumerate(others) if k not in (i, j)]
                if split(left):
                    return True
        return False

    return sum(a) % m == 0 and split(a)

def brute_equal_groups(a, m) -> bool:
    """Can `a` be split into m groups (any sizes) of equal sum?"""
    if sum(a) % m:
        return False
    target = sum(a) // m
    items = sorted(a, reverse=True)
    bins = [0] * m

    def place(i):
        if i == len(items):
            return True
        for b in range(m):
            if bins[b] + items[i] <= target:
                bins[b] += items[i]
                if place(i + 1):
                    return True
                bins[b] -= items[i]
            if bins[b] == 0:
                break
        return False

    return place(0)


FIXTURES = {
    "path8": (gen_path(8), 4),
    "path5": (gen_path(5), 2),
    "star3": (star(3), 2),
    "cycle6": (gen_cycle(6), 2),
    "cycle7": (gen_cycle(7), 3),
    "k4": (complete(4), 3),
    "fig1": (gen_fig1_graph().graph, 3),
    # triangle with three pendant leaves on one corner: uniform-on-V* fails here
    "tri_leaves": (Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (1, 3), (1, 4), (1, 5)]), 2),
}

@pytest.fixture(params=sorted(FIXTURES))
def fixture_instance(request):
    return FIXTURES[request.param]
