# # Defense-optimal trees
#
# A tree reaches p* = lam/n exactly when it splits into n/lam disjoint
# connected blocks of lam vertices. The check is one bottom-up pass.

# %%
from csdgame import Graph, check_tree_defense_optimal, gen_path, gen_random_tree, optimal_tree_strategy, solve_maxmin

part = check_tree_defense_optimal(gen_path(12), 4)
print(part.to_lines(), end="")
print({blk: str(p) for blk, p in optimal_tree_strategy(part).items()})

# %%
spider = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5)])
print(check_tree_defense_optimal(spider, 3).blocks)
print(check_tree_defense_optimal(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), 2))

# %% [markdown]
# Agreement with the LP on a batch of random trees.

# %%
hits = 0
for seed in range(40):
    t = gen_random_tree(12, seed)
    for lam in (2, 3, 4, 6):
        fast = check_tree_defense_optimal(t, lam) is not None
        exact = solve_maxmin(t, lam).pstar * 12 == lam
        assert fast == exact
        hits += fast
print("optimal (tree, lambda) pairs out of 160:", hits)
