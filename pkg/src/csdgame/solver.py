"""Exact MaxMin probability, best-defense strategies and Nash equilibria.

The defender's problem is the linear program

    maximize p'  subject to  sum_{j : i in j} q_j >= p'  for every vertex i,
                              sum_j q_j = 1,  q >= 0,  p' >= 0,

solved exactly with :mod:`csdgame.lp`. Its optimal duals on the covering
rows form an attacker distribution that certifies optimality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Sequence

from .graph import Graph
from .lp import solve_lp
from .subgraphs import DEFAULT_THETA_CAP, ActionSet, enumerate_action_set


class CertificateError(AssertionError):
    """An exact optimality or equilibrium certificate failed to check."""


@dataclass(frozen=True)
class DefenseStrategy:
    """A probability distribution over the subgraphs of an action set."""

    actions: ActionSet
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.probs) != self.actions.theta:
            raise ValueError(f"expected {self.actions.theta} probabilities, got {len(self.probs)}")
        if any(p < 0 for p in self.probs):
            raise ValueError("negative probability in defense strategy")
        if sum(self.probs) != 1:
            raise ValueError(f"defense probabilities sum to {sum(self.probs)}, not 1")

    @classmethod
    def from_weights(cls, actions: ActionSet, weights: dict[int, Fraction]) -> "DefenseStrategy":
        probs = [Fraction(0)] * actions.theta
        for j, w in weights.items():
            probs[j] += Fraction(w)
        return cls(actions, tuple(probs))

    @classmethod
    def uniform(cls, actions: ActionSet, indices: Sequence[int]) -> "DefenseStrategy":
        share = Fraction(1, len(indices))
        return cls.from_weights(actions, {j: share for j in indices})

    @property
    def support(self) -> list[int]:
        return [j for j, p in enumerate(self.probs) if p > 0]

    def items(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """``(subgraph, probability)`` pairs over the support."""
        return [(self.actions.subgraphs[j], self.probs[j]) for j in self.support]

    def vertex_probabilities(self) -> "VertexProbabilities":
        p = [Fraction(0)] * self.actions.n
        for j in self.support:
            q = self.probs[j]
            for v in self.actions.subgraphs[j]:
                p[v] += q
        return VertexProbabilities(tuple(p))


@dataclass(frozen=True)
class VertexProbabilities:
    """Probability that each vertex lies in the sampled subgraph."""

    p: tuple[Fraction, ...]

    @property
    def pmin(self) -> Fraction:
        return min(self.p)

    @property
    def argmin_set(self) -> frozenset[int]:
        lo = self.pmin
        return frozenset(i for i, x in enumerate(self.p) if x == lo)

    def __getitem__(self, i: int) -> Fraction:
        return self.p[i]

    def __len__(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class ExactSolution:
    """p*(G) with a maximin strategy, V*, and the dual attacker certificate.

    `certificate` is an attacker distribution under which no subgraph is
    hit with probability above `pstar`; together with ``qstar`` attaining
    `pstar` on every vertex it proves optimality.
    """

    actions: ActionSet
    pstar: Fraction
    qstar: DefenseStrategy
    certificate: tuple[Fraction, ...]

    @cached_property
    def vstar(self) -> frozenset[int]:
        """Vertices covered with probability exactly p* by every maximin strategy."""
        if self.lam in (1, self.actions.n):
            return frozenset(range(self.actions.n))
        tight = {i for i, x in enumerate(self.qstar.vertex_probabilities().p) if x == self.pstar}
        return _always_tight(self.actions, self.pstar, tight)

    @property
    def graph(self) -> Graph:
        return self.actions.graph

    @property
    def lam(self) -> int:
        return self.actions.lam


@dataclass(frozen=True)
class StrategyProfile:
    """A defense strategy and one vertex distribution per attacker."""

    defense: DefenseStrategy
    attackers: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if not self.attackers:
            raise ValueError("a profile needs at least one attacker")
        n = self.defense.actions.n
        for a, t in enumerate(self.attackers):
            if len(t) != n:
                raise ValueError(f"attacker {a}: expected {n} vertex probabilities, got {len(t)}")
            if any(x < 0 for x in t):
                raise ValueError(f"attacker {a}: negative probability")
            if sum(t) != 1:
                raise ValueError(f"attacker {a}: probabilities sum to {sum(t)}, not 1")

    @property
    def k(self) -> int:
        return len(self.attackers)

    @property
    def actions(self) -> ActionSet:
        return self.defense.actions


def _maxmin_lp(actions: ActionSet):
    # variable 0 is p', variables 1..theta are q_j, then one slack per vertex
    n, theta = actions.n, actions.theta
    columns: list[dict[int, int]] = [{i: -1 for i in range(n)}]
    for s in actions.subgraphs:
        col = {v: 1 for v in s}
        col[n] = 1
        columns.append(col)
    columns.extend({i: -1} for i in range(n))
    c = [1] + [0] * (theta + n)
    b = [0] * n + [1]
    return solve_lp(c, columns, b)


def _always_tight(actions: ActionSet, pstar: Fraction, candidates: set[int]) -> frozenset[int]:
    """Vertices of `candidates` at probability exactly `pstar` in every optimum.

    Repeatedly maximizes the total surplus over the remaining candidates
    among all maximin strategies; any candidate showing positive surplus is
    not always tight. Stops once the maximum surplus is zero.
    """
    n, theta = actions.n, actions.theta
    columns: list[dict[int, int]] = []
    for s in actions.subgraphs:
        col = {v: 1 for v in s}
        col[n] = 1
        columns.append(col)
    columns.extend({i: -1} for i in range(n))
    b = [pstar] * n + [1]
    remaining = set(candidates)
    while remaining:
        c = [0] * theta + [int(i in remaining) for i in range(n)]
        res = solve_lp(c, columns, b)
        if res.value == 0:
            break
        loose = {i for i in remaining if res.x[theta + i] > 0}
        remaining -= loose
    return frozenset(remaining)


def solve_maxmin(g: Graph, lam: int, theta_cap: int = DEFAULT_THETA_CAP,
                 actions: ActionSet | None = None) -> ExactSolution:
    """Compute p*(G) exactly and a maximin defense strategy.

    ``lam == 1`` and ``lam == n`` are answered directly (uniform over
    singletons, and the whole vertex set). The returned solution carries a
    checked dual certificate; a failed check raises :class:`CertificateError`.
    V* is computed on first access of ``vstar`` (it needs extra LP solves).
    """
    if actions is None:
        actions = enumerate_action_set(g, lam, theta_cap=theta_cap)
    n = g.n
    if lam == n:
        pstar = Fraction(1)
        qstar = DefenseStrategy(actions, (Fraction(1),))
        cert = tuple(Fraction(1, n) for _ in range(n))
        return ExactSolution(actions, pstar, qstar, cert)
    if lam == 1:
        pstar = Fraction(1, n)
        qstar = DefenseStrategy(actions, tuple(Fraction(1, n) for _ in range(n)))
        return ExactSolution(actions, pstar, qstar, qstar.probs)

    res = _maxmin_lp(actions)
    pstar = res.value
    qstar = DefenseStrategy(actions, tuple(res.x[1:1 + actions.theta]))
    cert = tuple(-y for y in res.y[:n])
    _check_certificate(actions, pstar, qstar, cert)
    return ExactSolution(actions, pstar, qstar, cert)


def _check_certificate(actions: ActionSet, pstar: Fraction, qstar: DefenseStrategy,
                       cert: Sequence[Fraction]) -> None:
    probs = qstar.vertex_probabilities()
    if sum(probs.p) != actions.lam:
        raise CertificateError(f"vertex probabilities sum to {sum(probs.p)}, not {actions.lam}")
    if probs.pmin != pstar:
        raise CertificateError(f"strategy attains {probs.pmin}, LP reports {pstar}")
    if any(t < 0 for t in cert) or sum(cert) != 1:
        raise CertificateError("dual attacker certificate is not a distribution")
    worst = max(sum(cert[v] for v in s) for s in actions.subgraphs)
    if worst > pstar:
        raise CertificateError(f"dual certificate allows {worst} > {pstar}")


class UniformAttackWarning(UserWarning):
    """Attackers uniform on V* do not form an equilibrium with the returned strategy."""


def build_equilibrium(sol: ExactSolution, k: int) -> StrategyProfile:
    """Equilibrium profile: the defender plays ``qstar``, all k attackers play alike.

    Attackers are first made uniform on V*. That is not always an
    equilibrium (a subgraph off the defender's support may hold more of V*
    than the support subgraphs do); when the pure-deviation check rejects
    it, a :class:`UniformAttackWarning` is issued and every attacker plays
    the LP's dual distribution instead, which always completes ``qstar`` to
    an equilibrium.
    """
    from .analysis import pure_deviation_check

    if k < 1:
        raise ValueError(f"need at least one attacker, got k={k}")
    share = Fraction(1, len(sol.vstar))
    t = tuple(share if i in sol.vstar else Fraction(0) for i in range(sol.actions.n))
    profile = StrategyProfile(sol.qstar, (t,) * k)
    ok, witness = pure_deviation_check(profile)
    if ok:
        return profile
    warnings.warn(f"uniform attack on V* is not an equilibrium ({witness}); "
                  "using the dual attacker distribution", UniformAttackWarning, stacklevel=2)
    profile = StrategyProfile(sol.qstar, (sol.certificate,) * k)
    ok, witness = pure_deviation_check(profile)
    if not ok:
        raise CertificateError(f"dual attacker distribution is not an equilibrium: {witness}")
    return profile


def equilibrium_defense_ratio(sol: ExactSolution) -> Fraction:
    """Defense ratio of any equilibrium: 1 / p*."""
    return 1 / sol.pstar


def is_defense_optimal(g: Graph, lam: int, theta_cap: int = DEFAULT_THETA_CAP) -> bool:
    """True iff p*(G) equals lambda/n."""
    return solve_maxmin(g, lam, theta_cap=theta_cap).pstar == Fraction(lam, g.n)
