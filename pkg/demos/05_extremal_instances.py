# # Extremal and hard instances
#
# Star-of-lines graphs push the defense ratio up to about 2(n-1)/lam.
# Spider trees encode 3-Partition.

# %%
from csdgame import gen_star_of_lines, gen_three_partition_tree, solve_maxmin
from csdgame.generators import pod_lower_bound, pod_upper_bound

for n, lam in [(15, 6), (19, 7), (20, 7)]:
    inst = gen_star_of_lines(n, lam)
    p = solve_maxmin(inst.graph, lam).pstar
    print(n, lam, inst.parameters["case"], "p* =", p, "predicted", inst.predicted_pstar,
          " ratio bounds:", pod_lower_bound(n, lam), "<=", 1 / p, "<=", pod_upper_bound(n, lam))

# %% [markdown]
# p* >= 1/m tracks equal-sum groups of the integers. With the usual
# s/(4m) < a_i < s/(2m) bounds those groups must be triples.

# %%
for a, m in [([1, 2, 3] * 3, 3), ([4, 4, 4, 4, 4, 6], 2), ([1, 1, 1, 2, 2, 5], 2)]:
    inst = gen_three_partition_tree(a, m)
    p = solve_maxmin(inst.graph, inst.lam).pstar
    print(a, "lam", inst.lam, "p* =", p, ">= 1/m:", p >= inst.threshold,
          " strong bounds:", inst.parameters["strong_bounds"])
