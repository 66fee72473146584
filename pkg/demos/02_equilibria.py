# # Equilibria with k attackers
#
# The defender's maximin strategy plus a suitable attacker mix is an
# equilibrium for any number of attackers. The value scales as k * p*.

# %%
import warnings
from fractions import Fraction

from csdgame import (Graph, build_equilibrium, gen_path, pure_deviation_check,
                     solve_maxmin, verify_equilibrium)

star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
sol = solve_maxmin(star, 2)
print("star p* =", sol.pstar, " V* =", sorted(sol.vstar))

# %%
for k in (1, 2, 5):
    prof = build_equilibrium(sol, k)
    rep = verify_equilibrium(star, 2, prof, solution=sol)
    print(f"k={k}: equilibrium={rep.is_equilibrium} value={rep.defense_value} ratio={rep.defense_ratio}")

# %% [markdown]
# Attackers spread uniformly over V* do not always work. On a triangle with
# three pendant leaves the defender would rather guard the two triangle
# corners; build_equilibrium notices and switches to the LP's dual mix.

# %%
g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (1, 3), (1, 4), (1, 5)])
sol = solve_maxmin(g, 2)
print("p* =", sol.pstar, " V* =", sorted(sol.vstar))
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    prof = build_equilibrium(sol, 1)
print("warned:", [w.category.__name__ for w in caught])
print("attacker mix:", [str(x) for x in prof.attackers[0]])
print("checks:", verify_equilibrium(g, 2, prof, solution=sol).is_equilibrium, pure_deviation_check(prof)[0])

# %% [markdown]
# A profile that fails: the defender splits over the two halves of a path but
# the single attacker sits on vertex 0.

# %%
from csdgame import DefenseStrategy, StrategyProfile, enumerate_action_set

a = enumerate_action_set(gen_path(4), 2)
q = DefenseStrategy.from_weights(a, {a.index_of([0, 1]): Fraction(1, 2), a.index_of([2, 3]): Fraction(1, 2)})
bad = StrategyProfile(q, ((1, 0, 0, 0),))
rep = verify_equilibrium(gen_path(4), 2, bad)
print(rep.condition1_ok, rep.condition2_ok, rep.condition3_ok, rep.condition3_witness)
