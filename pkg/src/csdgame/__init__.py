"""Exact and approximate solvers for connected-subgraph defense games.

A defender picks a connected induced subgraph of `lam` vertices; attackers
pick vertices and are caught when their vertex is covered. The toolkit
computes the maximin coverage probability p*(G) exactly, builds and
verifies Nash equilibria, decides defense-optimality of trees, runs the
cover-based approximation, and generates extremal instances.
"""

__version__ = "0.1.0"

from .analysis import (EquilibriumReport, FictitiousPlayResult, attacker_payoff, defense_ratio,
                       defense_value, fictitious_play_value, pure_deviation_check, verify_equilibrium)
from .approx import (CoverCollection, approx_defense_strategy, approximation_factor, cover_size_bound,
                     cover_tree, guaranteed_catch_fraction)
from .generators import (GeneratedInstance, gen_cycle, gen_fig1_graph, gen_path, gen_random_connected,
                         gen_random_tree, gen_star_of_lines, gen_three_partition_tree)
from .graph import Graph, GraphError, Tree, is_connected_subset, parse_graph, serialize_graph, spanning_tree
from .solver import (CertificateError, DefenseStrategy, ExactSolution, StrategyProfile, UniformAttackWarning,
                     VertexProbabilities, build_equilibrium, equilibrium_defense_ratio, is_defense_optimal,
                     solve_maxmin)
from .subgraphs import ActionSet, ActionSetTooLarge, coverage_counts, enumerate_action_set
from .trees import TreePartition, check_tree_defense_optimal, optimal_tree_strategy
