# # Cover-based approximation
#
# Walk a spanning tree and cut it into at most (2n-3)/lam + 1 connected
# blocks. Playing them uniformly catches at least 1/|cover| of any attack,
# within a factor 2 + (lam-3)/n of the optimum.

# %%
from fractions import Fraction

from csdgame import approximation_factor, cover_tree, gen_random_connected, gen_star_of_lines, solve_maxmin, spanning_tree

inst = gen_star_of_lines(15, 6)
cover = cover_tree(spanning_tree(inst.graph), 6)
print(cover.to_lines(), end="")
print("coverage:", cover.coverage())
print("catch fraction:", Fraction(1, len(cover)), " exact p*:", solve_maxmin(inst.graph, 6).pstar)

# %%
worst = Fraction(0)
for seed in range(30):
    g = gen_random_connected(10, 15, seed)
    for lam in range(2, 10):
        share = Fraction(1, len(cover_tree(spanning_tree(g), lam)))
        ratio = solve_maxmin(g, lam).pstar / share
        assert ratio <= approximation_factor(10, lam)
        worst = max(worst, ratio / approximation_factor(10, lam))
print("largest fraction of the allowed factor actually used:", worst, float(worst))
