# # Fictitious play as an independent check
#
# Fictitious play on the defender-vs-attacker matrix game brackets p*
# from both sides; the bracket shrinks as play continues.

# %%
from csdgame import gen_cycle, gen_fig1_graph, solve_maxmin
from csdgame.analysis import fictitious_play_value

g = gen_fig1_graph().graph
exact = solve_maxmin(g, 3).pstar
for iters in (100, 1_000, 10_000, 100_000):
    r = fictitious_play_value(g, 3, iters)
    print(f"{iters:>7}: [{r.lower:.5f}, {r.upper:.5f}] mid {r.value:.5f}  exact {float(exact):.5f}")

# %%
r = fictitious_play_value(gen_cycle(6), 2, 100_000, tol=1e-4)
print("C6 lam=2:", r.value, "after", r.iterations, "iterations")
