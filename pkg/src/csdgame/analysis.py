"""Payoffs, equilibrium verification and a fictitious-play value oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from .graph import Graph
from .solver import ExactSolution, StrategyProfile, solve_maxmin
from .subgraphs import ActionSet, enumerate_action_set


def expected_attackers(profile: StrategyProfile) -> list[Fraction]:
    """E[N_i]: expected number of attackers on each vertex."""
    n = profile.actions.n
    return [sum((t[i] for t in profile.attackers), Fraction(0)) for i in range(n)]


def defense_value(profile: StrategyProfile) -> Fraction:
    """Expected number of attackers caught by the defender."""
    p = profile.defense.vertex_probabilities().p
    return sum((pi * ni for pi, ni in zip(p, expected_attackers(profile))), Fraction(0))


def defense_ratio(profile: StrategyProfile) -> Fraction | None:
    """k over the defense value; ``None`` when nobody is caught (infinite ratio)."""
    value = defense_value(profile)
    return Fraction(profile.k) / value if value > 0 else None


def attacker_payoff(attacker_index: int, profile: StrategyProfile) -> Fraction:
    """Probability that the given attacker escapes: sum_i t_i (1 - p_i)."""
    if not 0 <= attacker_index < profile.k:
        raise IndexError(f"attacker index {attacker_index} out of range 0..{profile.k - 1}")
    t = profile.attackers[attacker_index]
    p = profile.defense.vertex_probabilities().p
    return sum((ti * (1 - pi) for ti, pi in zip(t, p)), Fraction(0))


def subgraph_masses(profile: StrategyProfile) -> list[Fraction]:
    """Expected attacker count on the vertices of every pure defense strategy."""
    load = expected_attackers(profile)
    return [sum((load[v] for v in s), Fraction(0)) for s in profile.actions.subgraphs]


@dataclass(frozen=True)
class EquilibriumReport:
    """Outcome of checking a profile against the three equilibrium conditions.

    Witness fields are ``None`` when the corresponding condition holds.
    `defense_ratio` is ``None`` when the defense value is zero.
    """

    is_equilibrium: bool
    condition1_ok: bool
    condition2_ok: bool
    condition3_ok: bool
    pstar: Fraction
    vstar: frozenset[int]
    defense_value: Fraction
    defense_ratio: Fraction | None
    min_vertex_probability: Fraction
    condition1_witness: dict[str, Any] | None = None
    condition2_witness: dict[str, Any] | None = None
    condition3_witness: dict[str, Any] | None = None


def verify_equilibrium(g: Graph, lam: int, profile: StrategyProfile,
                       solution: ExactSolution | None = None) -> EquilibriumReport:
    """Check `profile` against the equilibrium characterization.

    1. the defender's minimum vertex probability equals p*;
    2. every attacker's support lies inside V*;
    3. every subgraph in the defender's support carries the maximum expected
       number of attackers among all subgraphs.

    p* and V* are recomputed from `g` unless `solution` is passed.
    """
    actions = profile.actions
    if actions.graph != g or actions.lam != lam:
        raise ValueError("profile's action set does not belong to this graph and lambda")
    sol = solution if solution is not None else solve_maxmin(g, lam, actions=actions)
    probs = profile.defense.vertex_probabilities()

    c1 = probs.pmin == sol.pstar
    w1 = None
    if not c1:
        w1 = {"vertex": min(probs.argmin_set), "probability": probs.pmin, "pstar": sol.pstar}

    w2 = None
    for a, t in enumerate(profile.attackers):
        outside = [i for i, x in enumerate(t) if x > 0 and i not in sol.vstar]
        if outside:
            w2 = {"attacker": a, "vertex": outside[0]}
            break
    c2 = w2 is None

    masses = subgraph_masses(profile)
    best = max(masses)
    w3 = None
    for j in profile.defense.support:
        if masses[j] < best:
            better = masses.index(best)
            w3 = {"support_subgraph": list(actions.subgraphs[j]), "mass": masses[j],
                  "better_subgraph": list(actions.subgraphs[better]), "better_mass": best}
            break
    c3 = w3 is None

    value = defense_value(profile)
    return EquilibriumReport(
        is_equilibrium=c1 and c2 and c3,
        condition1_ok=c1, condition2_ok=c2, condition3_ok=c3,
        pstar=sol.pstar, vstar=sol.vstar,
        defense_value=value,
        defense_ratio=Fraction(profile.k) / value if value > 0 else None,
        min_vertex_probability=probs.pmin,
        condition1_witness=w1, condition2_witness=w2, condition3_witness=w3,
    )


def pure_deviation_check(profile: StrategyProfile) -> tuple[bool, dict[str, Any] | None]:
    """Definition-level equilibrium test by unilateral pure deviations.

    Payoffs are linear in each player's own mixed strategy, so checking
    pure deviations suffices. Returns ``(True, None)`` or ``(False, witness)``
    where the witness names the deviating player and the better pure strategy.
    """
    p = profile.defense.vertex_probabilities().p
    best_escape = 1 - min(p)
    for a, t in enumerate(profile.attackers):
        payoff = sum((ti * (1 - pi) for ti, pi in zip(t, p)), Fraction(0))
        if payoff < best_escape:
            target = p.index(min(p))
            return False, {"player": "attacker", "attacker": a, "payoff": payoff,
                           "deviation_vertex": target, "deviation_payoff": best_escape}
    masses = subgraph_masses(profile)
    current = sum((profile.defense.probs[j] * masses[j] for j in profile.defense.support), Fraction(0))
    best = max(masses)
    if current < best:
        j = masses.index(best)
        return False, {"player": "defender", "payoff": current,
                       "deviation_subgraph": list(profile.actions.subgraphs[j]), "deviation_payoff": best}
    return True, None


@dataclass(frozen=True)
class FictitiousPlayResult:
    """Empirical strategies after fictitious play and the value bracket.

    ``lower <= p* <= upper`` always holds; `value` is their midpoint.
    """

    value: float
    lower: float
    upper: float
    iterations: int
    defender: np.ndarray = field(repr=False)
    attacker: np.ndarray = field(repr=False)


def fictitious_play_value(g: Graph, lam: int, iterations: int, tol: float = 0.0,
                          actions: ActionSet | None = None) -> FictitiousPlayResult:
    """Approximate p*(G) by fictitious play in the defender-vs-one-attacker game.

    Payoff to the defender is 1 when the attacked vertex lies in the chosen
    subgraph. Updates alternate: the defender best-responds to the attacker's
    empirical play, then the attacker to the defender's, ties going to the
    lowest index. Stops early once ``upper - lower <= 2*tol`` so the midpoint
    is within `tol` of the true value.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if actions is None:
        actions = enumerate_action_set(g, lam)
    theta, n = actions.theta, actions.n
    hits = np.zeros((theta, n), dtype=np.int64)
    for j, s in enumerate(actions.subgraphs):
        hits[j, list(s)] = 1
    hits_by_vertex = np.ascontiguousarray(hits.T)
    # row_gain[j]: catches of subgraph j against the attacker history
    # col_cover[i]: times vertex i was covered by the defender history
    row_gain = np.zeros(theta, dtype=np.int64)
    col_cover = np.zeros(n, dtype=np.int64)
    d_count = np.zeros(theta, dtype=np.int64)
    a_count = np.zeros(n, dtype=np.int64)
    lower, upper = 0.0, 1.0
    t = 0
    for t in range(1, iterations + 1):
        row = int(np.argmax(row_gain))
        d_count[row] += 1
        col_cover += hits[row]
        col = int(np.argmin(col_cover))
        a_count[col] += 1
        row_gain += hits_by_vertex[col]
        lower = col_cover.min() / t
        upper = row_gain.max() / t
        if upper - lower <= 2 * tol:
            break
    return FictitiousPlayResult((lower + upper) / 2, lower, upper, t, d_count / t, a_count / t)
