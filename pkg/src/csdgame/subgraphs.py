"""Enumeration of the defender's action set: connected induced lambda-subgraphs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

DEFAULT_THETA_CAP = 5_000_000

Subgraph = tuple[int, ...]


class ActionSetTooLarge(RuntimeError):
    """The number of lambda-subgraphs exceeds the configured cap."""


@dataclass(frozen=True)
class ActionSet:
    """All connected induced subgraphs of size `lam`, sorted lexicographically.

    Each subgraph is a strictly ascending vertex tuple. ``member_index[v]``
    lists the indices of the subgraphs containing vertex `v`.
    """

    graph: Graph
    lam: int
    subgraphs: tuple[Subgraph, ...]
    member_index: tuple[tuple[int, ...], ...]

    @property
    def theta(self) -> int:
        return len(self.subgraphs)

    @property
    def n(self) -> int:
        return self.graph.n

    def index_of(self, subgraph: Iterable[int]) -> int:
        key = tuple(sorted(subgraph))
        try:
            return self._lookup[key]
        except KeyError:
            raise KeyError(f"{list(key)} is not a connected {self.lam}-subgraph") from None

    @property
    def _lookup(self) -> dict[Subgraph, int]:
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {s: j for j, s in enumerate(self.subgraphs)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def to_lines(self) -> str:
        """One subgraph per line, vertices space-separated."""
        return "".join(" ".join(map(str, s)) + "\n" for s in self.subgraphs)


def enumerate_action_set(g: Graph, lam: int, theta_cap: int = DEFAULT_THETA_CAP) -> ActionSet:
    """Enumerate every vertex set of size `lam` inducing a connected subgraph.

    Each set is generated exactly once by growing it from its smallest
    vertex; extensions come from the exclusive neighborhood of the newly
    added vertex, so no deduplication pass is needed.
    """
    if not 1 <= lam <= g.n:
        raise ValueError(f"lambda must be in 1..{g.n}, got {lam}")
    found: list[Subgraph] = []
    adj = g.adjacency

    def extend(sub: list[int], blocked: set[int], ext: list[int], root: int) -> None:
        if len(sub) == lam:
            found.append(tuple(sorted(sub)))
            if len(found) > theta_cap:
                raise ActionSetTooLarge(
                    f"more than {theta_cap} connected {lam}-subgraphs; raise theta_cap to proceed")
            return
        ext = list(ext)
        while ext:
            w = ext.pop()
            fresh = [u for u in adj[w] if u > root and u not in blocked]
            sub.append(w)
            blocked.update(fresh)
            extend(sub, blocked, ext + fresh, root)
            blocked.difference_update(fresh)
            sub.pop()

    for v in range(g.n):
        blocked = {v, *adj[v]}
        extend([v], blocked, [u for u in adj[v] if u > v], v)

    found.sort()
    members: list[list[int]] = [[] for _ in range(g.n)]
    for j, s in enumerate(found):
        for v in s:
            members[v].append(j)
    return ActionSet(g, lam, tuple(found), tuple(tuple(m) for m in members))


def coverage_counts(actions: ActionSet, collection: Sequence[int]) -> list[int]:
    """Number of listed subgraphs (by index, repeats counted) containing each vertex."""
    counts = [0] * actions.n
    for j in collection:
        if not 0 <= j < actions.theta:
            raise IndexError(f"subgraph index {j} out of range 0..{actions.theta - 1}")
        for v in actions.subgraphs[j]:
            counts[v] += 1
    return counts
