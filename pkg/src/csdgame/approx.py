"""Covering a graph with few connected lambda-subgraphs, and the uniform strategy over them.

The cover walks a depth-first traversal of a spanning tree, filling one
block of `lam` vertices at a time. Every new block starts on a vertex no
earlier block contains, so blocks are pairwise distinct, and every vertex
ends up covered at most deg_T(v) times except for at most lam-1 vertices
(covered deg_T(v)+1 times) topped up in a final patch-up walk. Hence
``|cover| <= (2n-3)/lam + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, Tree, spanning_tree
from .solver import DefenseStrategy
from .subgraphs import ActionSet, enumerate_action_set


@dataclass(frozen=True)
class CoverCollection:
    """Distinct connected lambda-subgraphs of `source_tree` covering every vertex."""

    subgraphs: tuple[tuple[int, ...], ...]
    source_tree: Tree
    lam: int

    def __len__(self) -> int:
        return len(self.subgraphs)

    def coverage(self) -> list[int]:
        counts = [0] * self.source_tree.n
        for s in self.subgraphs:
            for v in s:
                counts[v] += 1
        return counts

    def to_lines(self) -> str:
        return "".join(" ".join(map(str, s)) + "\n" for s in self.subgraphs)


class _Walk:
    """DFS cursor over a tree that prefers an unvisited child, else goes up."""

    def __init__(self, tree: Tree, root: int):
        # re-rooting: neighbors other than the parent-in-this-rooting are children
        self.adj = tree.graph.adjacency
        self.parent: dict[int, int | None] = {root: None}
        self.vertex: int | None = root
        self.seen: set[int] = set()

    def step(self) -> None:
        v = self.vertex
        for u in self.adj[v]:
            if u != self.parent[v] and u not in self.seen:
                self.parent[u] = v
                self.vertex = u
                return
        self.vertex = self.parent[v]


def cover_tree(t: Tree, lam: int) -> CoverCollection:
    """Build the cover collection for tree `t` rooted at ``t.root``.

    Children are explored in ascending label order. When the first walk
    covers every vertex while the last block is still short, a second walk
    rooted at that block's smallest vertex tops it up to exactly `lam`.
    """
    n = t.n
    if not 1 <= lam <= n:
        raise ValueError(f"lambda must be in 1..{n}, got {lam}")
    walk = _Walk(t, t.root)
    blocks: list[list[int]] = []
    current: list[int] = []
    members: set[int] = set()
    covered = walk.seen

    while len(covered) < n:
        # a new block must start on an uncovered vertex
        while walk.vertex in covered:
            walk.step()
        while len(current) < lam and walk.vertex is not None:
            v = walk.vertex
            if v not in members:
                current.append(v)
                members.add(v)
            covered.add(v)
            walk.step()
        blocks.append(current)
        current, members = [], set()

    last = blocks[-1]
    if len(last) < lam:
        members = set(last)
        patch = _Walk(t, min(last))
        while len(last) < lam:
            v = patch.vertex
            patch.seen.add(v)
            if v not in members:
                last.append(v)
                members.add(v)
            patch.step()

    return CoverCollection(tuple(tuple(sorted(b)) for b in blocks), t, lam)


def approx_defense_strategy(g: Graph, lam: int, actions: ActionSet | None = None) -> DefenseStrategy:
    """Uniform strategy over the cover of the breadth-first spanning tree of `g`."""
    cover = cover_tree(spanning_tree(g), lam)
    if actions is None:
        actions = enumerate_action_set(g, lam)
    return DefenseStrategy.uniform(actions, [actions.index_of(s) for s in cover.subgraphs])


def guaranteed_catch_fraction(g: Graph, lam: int) -> Fraction:
    """1/|cover|: the expected fraction of attackers the uniform cover strategy always catches."""
    return Fraction(1, len(cover_tree(spanning_tree(g), lam)))


def approximation_factor(n: int, lam: int) -> Fraction:
    """2 + (lam - 3)/n. Meaningful for n >= 2; it degenerates to 0 at n = 1."""
    return 2 + Fraction(lam - 3, n)


def cover_size_bound(n: int, lam: int) -> Fraction:
    """(2n - 3)/lam + 1. Meaningful for n >= 2; it degenerates to 0 at n = 1."""
    return Fraction(2 * n - 3, lam) + 1
