# # Exact maximin coverage
#
# A defender guards a connected block of `lam` vertices; an attacker picks one
# vertex. p*(G) is the best probability the defender can guarantee on every
# vertex. Everything below is an exact rational.

# %%
from csdgame import gen_cycle, gen_fig1_graph, gen_path, is_defense_optimal, solve_maxmin

# %%
sol = solve_maxmin(gen_path(8), 4)
print("path(8), lam=4:", sol.pstar)
for block, p in sol.qstar.items():
    print("  ", block, p)

# %% [markdown]
# Cycles are always defense-optimal: p* = lam/n.

# %%
for lam in range(1, 8):
    print(f"C7 lam={lam}: p* = {solve_maxmin(gen_cycle(7), lam).pstar}")

# %%
fig1 = gen_fig1_graph()
sol = solve_maxmin(fig1.graph, fig1.lam)
print("fig1:", sol.pstar, "optimal:", is_defense_optimal(fig1.graph, fig1.lam))
print("dual certificate (attacker mix):", [str(t) for t in sol.certificate])
