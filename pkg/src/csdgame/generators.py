"""Graph families and extremal constructions with their predicted p*."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Any, Sequence

from .graph import Graph


@dataclass(frozen=True)
class GeneratedInstance:
    graph: Graph
    lam: int
    predicted_pstar: Fraction | None
    construction: str
    parameters: dict[str, Any] = field(default_factory=dict)
    threshold: Fraction | None = None
    note: str | None = None


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_instance(n: int, lam: int) -> GeneratedInstance:
    predicted = Fraction(lam, n) if n % lam == 0 else None
    return GeneratedInstance(gen_path(n), lam, predicted, "path", {"n": n, "lambda": lam})


def cycle_instance(n: int, lam: int) -> GeneratedInstance:
    if not 1 <= lam <= n:
        raise ValueError(f"lambda must be in 1..{n}, got {lam}")
    return GeneratedInstance(gen_cycle(n), lam, Fraction(lam, n), "cycle", {"n": n, "lambda": lam})


def star_of_lines_shape(n: int, lam: int) -> tuple[int, int, int]:
    """(sigma, b, r): line length, number of complete lines, incomplete-line length."""
    sigma = ceil(lam / 2)
    b = (n - 1) // sigma
    return sigma, b, n - 1 - b * sigma


def gen_star_of_lines(n: int, lam: int) -> GeneratedInstance:
    """Central vertex 0 with b lines of ceil(lam/2) vertices and one shorter line.

    Lines occupy consecutive labels; each line's lowest label is joined to 0.
    Predicted p* is 1/b, or 1/(b+1) when lam is odd and the shorter line has
    exactly sigma - 1 vertices (then it cannot share a block with a full line).
    """
    if not 2 <= lam <= n - 1:
        raise ValueError(f"star-of-lines needs 2 <= lambda <= n-1, got n={n}, lambda={lam}")
    sigma, b, r = star_of_lines_shape(n, lam)
    if b < 1:
        raise ValueError(f"n={n} too small for one line of {sigma} vertices")
    edges = []
    lengths = [sigma] * b + ([r] if r else [])
    start = 1
    for length in lengths:
        edges.append((0, start))
        edges.extend((v, v + 1) for v in range(start, start + length - 1))
        start += length
    if lam % 2 == 1 and sigma - r == 1:
        predicted, case = Fraction(1, b + 1), "2b"
    else:
        predicted, case = Fraction(1, b), ("1" if lam % 2 == 0 else "2a")
    return GeneratedInstance(Graph.from_edges(n, edges), lam, predicted, "star-of-lines",
                             {"n": n, "lambda": lam, "sigma": sigma, "b": b, "remainder": r, "case": case})


def pod_lower_bound(n: int, lam: int) -> int:
    """floor(2(n-1)/lam) for even lam, floor(2(n-1)/(lam+1)) for odd lam."""
    return (2 * (n - 1)) // (lam if lam % 2 == 0 else lam + 1)


def pod_upper_bound(n: int, lam: int) -> Fraction:
    """(2(n-1) + lam - 1) / lam."""
    return Fraction(2 * (n - 1) + lam - 1, lam)


def gen_three_partition_tree(a: Sequence[int], m: int) -> GeneratedInstance:
    """Spider tree for a 3-Partition instance.

    Vertex 0 is the hub; integer a_i becomes a path of a_i vertices whose
    first vertex is adjacent to the hub. lambda = s/m + 1.

    p* >= 1/m exactly when the integers split into m groups of equal sum
    (groups of any size). That coincides with a split into triples only
    under the usual bounds s/(4m) < a_i < s/(2m), recorded in
    ``parameters["strong_bounds"]``; e.g. (1,1,1,2,2,5) has no equal-sum
    triples yet p* = 1/2 via {5,1}, {1,1,2,2}.
    """
    a = list(a)
    if m < 1 or len(a) != 3 * m:
        raise ValueError(f"need exactly 3m = {3 * m} integers, got {len(a)}")
    if any(x < 1 for x in a):
        raise ValueError("integers must be positive")
    s = sum(a)
    if s % m:
        raise ValueError(f"sum {s} is not divisible by m={m}")
    target = s // m
    if any(x >= target for x in a):
        raise ValueError(f"every integer must be < s/m = {target}")
    strong = all(s < 4 * m * x and 2 * m * x < s for x in a)
    edges = []
    start = 1
    for x in a:
        edges.append((0, start))
        edges.extend((v, v + 1) for v in range(start, start + x - 1))
        start += x
    return GeneratedInstance(Graph.from_edges(s + 1, edges), target + 1, None, "three-partition",
                             {"a": a, "m": m, "s": s, "strong_bounds": strong}, threshold=Fraction(1, m))


def gen_fig1_graph() -> GeneratedInstance:
    """Path 0-1-2 bridged by edge 2-3 to the clique on {3, 4, 5, 6}; lambda = 3.

    Defense-optimal with p* = 3/7 but no uniform best-defense strategy.
    """
    clique = [(u, v) for u in range(3, 7) for v in range(u + 1, 7)]
    g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3)] + clique)
    return GeneratedInstance(g, 3, Fraction(3, 7), "fig1", {},
                             note="3-path bridged to a 4-clique; p* checked by LP")


def fig1_reference_strategy() -> dict[tuple[int, ...], Fraction]:
    """3/7 on the path block, 1/7 on each triple of the clique."""
    strat = {(0, 1, 2): Fraction(3, 7)}
    for drop in range(3, 7):
        strat[tuple(v for v in range(3, 7) if v != drop)] = Fraction(1, 7)
    return strat


def gen_random_tree(n: int, seed: int) -> Graph:
    """Uniform-attachment random tree: vertex v joins a random earlier vertex."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = random.Random(seed)
    return Graph.from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])


def gen_random_connected(n: int, m: int, seed: int) -> Graph:
    """Random tree plus ``m - (n-1)`` extra edges drawn uniformly without repeats."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    max_m = n * (n - 1) // 2
    if not n - 1 <= m <= max_m:
        raise ValueError(f"m must be in {n - 1}..{max_m} for n={n}, got {m}")
    rng = random.Random(seed)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    edges.update(rng.sample(missing, m - (n - 1)))
    return Graph.from_edges(n, sorted(edges))
