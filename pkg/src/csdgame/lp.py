"""Exact linear programming over rationals: revised primal simplex, Bland's rule.

Problems are given in equality standard form::

    maximize    c . x
    subject to  A x = b,  x >= 0

with `A` supplied column by column as sparse ``{row: coefficient}`` maps.
Every quantity is a :class:`fractions.Fraction` or ``int``; nothing is
rounded. Bland's smallest-index rule on both the entering and leaving
choice guarantees termination on degenerate problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

Column = Mapping[int, "int | Fraction"]


class LPError(RuntimeError):
    pass


class Infeasible(LPError):
    pass


class Unbounded(LPError):
    pass


@dataclass(frozen=True)
class LPResult:
    """Optimal primal solution `x`, objective `value`, and row duals `y`.

    The duals satisfy ``c_j - y . A_j <= 0`` for every column, and
    ``y . b == value``.
    """

    x: tuple[Fraction, ...]
    value: Fraction
    y: tuple[Fraction, ...]
    basis: tuple[int, ...]
    pivots: int


class _Tableau:
    """Revised-simplex state: explicit basis inverse plus basic values."""

    def __init__(self, columns: list[dict[int, "int | Fraction"]], m: int, basis: list[int], xb: list[Fraction]):
        self.columns = columns
        self.m = m
        self.basis = basis
        self.xb = xb
        self.binv = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        self.pivots = 0
        self.where = {b: r for r, b in enumerate(basis)}

    def duals(self, cost: Sequence[Fraction]) -> list[Fraction]:
        y = [Fraction(0)] * self.m
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.binv[r]
                for i in range(self.m):
                    if row[i]:
                        y[i] += cb * row[i]
        return y

    def ftran(self, j: int) -> list[Fraction]:
        """B^-1 A_j."""
        u = [Fraction(0)] * self.m
        for i, a in self.columns[j].items():
            for r in range(self.m):
                bri = self.binv[r][i]
                if bri:
                    u[r] += bri * a
        return u

    def pivot(self, r: int, j: int, u: list[Fraction]) -> None:
        piv = u[r]
        row_r = [v / piv for v in self.binv[r]]
        self.binv[r] = row_r
        step = self.xb[r] / piv
        for k in range(self.m):
            if k != r and u[k]:
                f = u[k]
                row_k = self.binv[k]
                for i in range(self.m):
                    if row_r[i]:
                        row_k[i] -= f * row_r[i]
                self.xb[k] -= f * step
        self.xb[r] = step
        del self.where[self.basis[r]]
        self.basis[r] = j
        self.where[j] = r
        self.pivots += 1

    def run(self, cost: Sequence[Fraction], allowed: int) -> None:
        """Iterate to optimality over columns ``0..allowed-1`` (plus basics)."""
        while True:
            y = self.duals(cost)
            scale = lcm(*(v.denominator for v in y)) if y else 1
            yi = [int(v * scale) for v in y]
            entering = -1
            for j in range(allowed):
                if j in self.where:
                    continue
                col = self.columns[j]
                d = cost[j] * scale - sum(yi[i] * a for i, a in col.items())
                if d > 0:
                    entering = j
                    break
            if entering < 0:
                return
            u = self.ftran(entering)
            leave = -1
            best: tuple[Fraction, int] | None = None
            for r in range(self.m):
                if u[r] > 0:
                    key = (self.xb[r] / u[r], self.basis[r])
                    if best is None or key < best:
                        best, leave = key, r
            if leave < 0:
                raise Unbounded(f"objective unbounded along column {entering}")
            self.pivot(leave, entering, u)


def _num(a: "int | Fraction") -> "int | Fraction":
    # integral data stays int: pricing then runs in plain int arithmetic
    a = Fraction(a)
    return a.numerator if a.denominator == 1 else a


def solve_lp(
    c: Sequence["int | Fraction"],
    columns: Sequence[Column],
    b: Sequence["int | Fraction"],
) -> LPResult:
    """Maximize ``c . x`` subject to ``A x = b``, ``x >= 0`` exactly.

    Two-phase method: phase one starts from an artificial identity basis and
    minimizes total artificial mass; artificials left basic at zero are
    pivoted out where possible (rows where they cannot be are redundant and
    their artificial stays pinned at zero).

    Raises :class:`Infeasible` or :class:`Unbounded`.
    """
    m = len(b)
    nvar = len(columns)
    if len(c) != nvar:
        raise ValueError("cost vector and column list differ in length")
    sign = [(-1 if Fraction(bi) < 0 else 1) for bi in b]
    cols: list[dict[int, int | Fraction]] = []
    for col in columns:
        d = {}
        for i, a in col.items():
            if not 0 <= i < m:
                raise ValueError(f"row index {i} out of range")
            if a:
                d[i] = _num(a) * sign[i]
        cols.append(d)
    for i in range(m):
        cols.append({i: 1})
    bb = [Fraction(bi) * sign[i] for i, bi in enumerate(b)]

    tab = _Tableau(cols, m, list(range(nvar, nvar + m)), list(bb))
    phase1 = [0] * nvar + [-1] * m
    tab.run(phase1, nvar)
    if any(tab.xb[r] != 0 for r in range(m) if tab.basis[r] >= nvar):
        raise Infeasible("no feasible point")

    for r in range(m):
        if tab.basis[r] < nvar:
            continue
        row = tab.binv[r]
        for j in range(nvar):
            if j in tab.where:
                continue
            if sum(row[i] * a for i, a in cols[j].items()) != 0:
                tab.pivot(r, j, tab.ftran(j))
                break

    cost = [_num(v) for v in c] + [0] * m
    tab.run(cost, nvar)

    x = [Fraction(0)] * nvar
    for r, bv in enumerate(tab.basis):
        if bv < nvar:
            x[bv] = tab.xb[r]
    y = tab.duals(cost)
    y = [yi * s for yi, s in zip(y, sign)]
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(tuple(x), value, tuple(y), tuple(tab.basis), tab.pivots)
