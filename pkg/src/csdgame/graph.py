"""Simple undirected connected graphs, the edge-list format, and traversals."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    """Raised for malformed graph documents or invalid graph structure."""


@dataclass(frozen=True)
class Graph:
    """A simple, undirected, connected graph on vertices ``0..n-1``.

    Construct through :meth:`from_edges` (or :func:`parse_graph`); both
    validate that the graph is simple and connected.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        g = cls(n, frozenset(seen), tuple(tuple(sorted(a)) for a in nbrs))
        if len(g.reachable_from(0)) != n:
            raise GraphError("graph is disconnected")
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def reachable_from(self, start: int, within: frozenset[int] | set[int] | None = None) -> set[int]:
        """Vertices reachable from `start`, optionally restricted to `within`."""
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen and (within is None or w in within):
                    seen.add(w)
                    stack.append(w)
        return seen

    def is_tree(self) -> bool:
        return self.m == self.n - 1


@dataclass(frozen=True)
class Tree:
    """A spanning tree of `graph`, rooted at `root`.

    ``parent[root]`` is ``None``; ``children[v]`` is sorted ascending.
    """

    graph: Graph
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]

    @classmethod
    def from_graph(cls, g: Graph, root: int = 0) -> "Tree":
        if not g.is_tree():
            raise GraphError(f"not a tree: {g.m} edges on {g.n} vertices")
        if not 0 <= root < g.n:
            raise GraphError(f"root {root} out of range")
        parent: list[int | None] = [None] * g.n
        children: list[list[int]] = [[] for _ in range(g.n)]
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    parent[w] = v
                    children[v].append(w)
                    queue.append(w)
        return cls(g, root, tuple(parent), tuple(tuple(c) for c in children))

    @property
    def n(self) -> int:
        return self.graph.n

    def degree(self, v: int) -> int:
        return self.graph.degree(v)

    def postorder(self) -> list[int]:
        """Vertices with every child listed before its parent."""
        order: list[int] = []
        stack = [(self.root, False)]
        while stack:
            v, expanded = stack.pop()
            if expanded:
                order.append(v)
                continue
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))
        return order

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.degree(v) <= 1]


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` / ``u v`` edge-list document into a :class:`Graph`.

    Blank lines are ignored. Raises :class:`GraphError` on any malformed line,
    edge-count mismatch, out-of-range vertex, self-loop, duplicate edge or
    disconnected graph.
    """
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("empty graph document")
    header = lines[0]
    if len(header) != 2:
        raise GraphError(f"line 1: expected 'n m', got {' '.join(header)!r}")
    n, m = _ints(header, 1)
    if m != len(lines) - 1:
        raise GraphError(f"header declares {m} edges but {len(lines) - 1} edge lines follow")
    edges = []
    for lineno, parts in enumerate(lines[1:], start=2):
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {' '.join(parts)!r}")
        edges.append(tuple(_ints(parts, lineno)))
    return Graph.from_edges(n, edges)


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise GraphError(f"line {lineno}: non-integer token in {' '.join(parts)!r}") from None


def serialize_graph(g: Graph) -> str:
    """Canonical edge-list document (edges in lexicographic order)."""
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def is_connected_subset(g: Graph, s: Iterable[int]) -> bool:
    """True iff the subgraph of `g` induced on `s` is connected."""
    verts = frozenset(s)
    if not verts:
        raise GraphError("vertex set is empty")
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    start = next(iter(verts))
    return len(g.reachable_from(start, within=verts)) == len(verts)


def spanning_tree(g: Graph) -> Tree:
    """Breadth-first spanning tree from vertex 0, neighbors in ascending order."""
    seen = {0}
    queue = deque([0])
    edges = []
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                edges.append((v, w))
                queue.append(w)
    return Tree.from_graph(Graph.from_edges(g.n, edges), root=0)
