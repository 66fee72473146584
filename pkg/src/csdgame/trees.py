"""Deciding defense-optimality of trees by partition into equal connected blocks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, Tree
from .solver import DefenseStrategy
from .subgraphs import ActionSet, enumerate_action_set


@dataclass(frozen=True)
class TreePartition:
    """n/lambda vertex-disjoint connected blocks of size lambda covering the tree."""

    tree: Tree
    lam: int
    blocks: tuple[tuple[int, ...], ...]

    def to_lines(self) -> str:
        return "".join(" ".join(map(str, b)) + "\n" for b in self.blocks)


def check_tree_defense_optimal(t: Tree | Graph, lam: int) -> TreePartition | None:
    """Partition `t` into connected blocks of exactly `lam` vertices, if possible.

    A tree is defense-optimal exactly when such a partition exists. Vertices
    are processed children-first; each carries the size of its not-yet-cut
    subtree. A vertex whose residual reaches `lam` closes a block; one that
    exceeds `lam` proves no partition exists. Returns ``None`` in that case
    or when `lam` does not divide n.
    """
    if isinstance(t, Graph):
        t = Tree.from_graph(t)
    n = t.n
    if not 1 <= lam <= n:
        raise ValueError(f"lambda must be in 1..{n}, got {lam}")
    if n % lam:
        return None

    pending: list[list[int]] = [[] for _ in range(n)]
    blocks = []
    for v in t.postorder():
        members = [v]
        for c in t.children[v]:
            members.extend(pending[c])
            pending[c] = []
        if len(members) > lam:
            return None
        if len(members) == lam:
            blocks.append(tuple(sorted(members)))
        else:
            pending[v] = members
    if pending[t.root]:
        return None
    blocks.sort()
    return TreePartition(t, lam, tuple(blocks))


def optimal_tree_strategy(partition: TreePartition, actions: ActionSet | None = None) -> DefenseStrategy:
    """Uniform strategy over the partition's blocks: every vertex covered w.p. lambda/n."""
    if actions is None:
        actions = enumerate_action_set(partition.tree.graph, partition.lam)
    return DefenseStrategy.uniform(actions, [actions.index_of(b) for b in partition.blocks])


def tree_pstar(partition: TreePartition) -> Fraction:
    return Fraction(partition.lam, partition.tree.n)
