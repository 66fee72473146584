"""Command-line front end: ``csd {solve,tree-check,approx,verify,generate}``.

Every command prints one JSON document. ``--format report`` (default) wraps
the results with the command line, an input digest, timing and version;
``--format bare`` prints only the results.

Exit codes: 0 success; 1 verify found no equilibrium; 2 usage error;
3 invalid input (graph, profile or parameters); 4 action set over the
``--theta-cap`` guardrail.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .analysis import verify_equilibrium
from .approx import approximation_factor, cover_size_bound, cover_tree
from .generators import (cycle_instance, gen_fig1_graph, gen_random_connected, gen_random_tree,
                         gen_star_of_lines, gen_three_partition_tree, path_instance, GeneratedInstance)
from .graph import Graph, GraphError, Tree, parse_graph, spanning_tree
from .serialize import (SchemaError, cover_to_dict, frac, partition_to_dict, profile_from_dict,
                        profile_to_dict, report_to_dict, solution_to_dict, strategy_to_list,
                        write_instance, instance_metadata)
from .solver import UniformAttackWarning, build_equilibrium, solve_maxmin
from .subgraphs import DEFAULT_THETA_CAP, ActionSetTooLarge, enumerate_action_set
from .trees import check_tree_defense_optimal, optimal_tree_strategy

EXIT_OK = 0
EXIT_NOT_EQUILIBRIUM = 1
EXIT_INPUT = 3
EXIT_GUARDRAIL = 4

FAMILIES = ("path", "cycle", "star-of-lines", "three-partition", "fig1", "random-tree", "random-connected")


class InputError(ValueError):
    pass


def _read_graph(path: str) -> tuple[Graph, str]:
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    digest = "sha256:" + hashlib.sha256(data).hexdigest()
    return parse_graph(data.decode()), digest


def _check_lambda(g: Graph, lam: int) -> None:
    if not 1 <= lam <= g.n:
        raise InputError(f"--lambda must be in 1..{g.n}, got {lam}")


def cmd_solve(args) -> tuple[dict[str, Any], str, int]:
    g, digest = _read_graph(args.graph)
    _check_lambda(g, args.lam)
    if args.attackers < 1:
        raise InputError("--attackers must be >= 1")
    sol = solve_maxmin(g, args.lam, theta_cap=args.theta_cap)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", UniformAttackWarning)
        profile = build_equilibrium(sol, args.attackers)
    construction = "dual" if any(issubclass(w.category, UniformAttackWarning) for w in caught) else "uniform-vstar"
    report = verify_equilibrium(g, args.lam, profile, solution=sol)
    results = solution_to_dict(sol)
    results["equilibrium"] = {**profile_to_dict(profile), "attacker_construction": construction}
    results["verification"] = report_to_dict(report)
    return results, digest, EXIT_OK


def cmd_tree_check(args) -> tuple[dict[str, Any], str, int]:
    g, digest = _read_graph(args.graph)
    _check_lambda(g, args.lam)
    if not g.is_tree():
        raise InputError(f"input is not a tree ({g.m} edges on {g.n} vertices)")
    part = check_tree_defense_optimal(Tree.from_graph(g), args.lam)
    if part is None:
        return {"lambda": args.lam, "n": g.n, "defense_optimal": False}, digest, EXIT_OK
    q = optimal_tree_strategy(part, enumerate_action_set(g, args.lam, theta_cap=args.theta_cap))
    results = {"lambda": args.lam, "n": g.n, "defense_optimal": True,
               "pstar": frac(q.vertex_probabilities().pmin), **partition_to_dict(part),
               "strategy": strategy_to_list(q)}
    return results, digest, EXIT_OK


def cmd_approx(args) -> tuple[dict[str, Any], str, int]:
    g, digest = _read_graph(args.graph)
    _check_lambda(g, args.lam)
    cover = cover_tree(spanning_tree(g), args.lam)
    share = Fraction(1, len(cover))
    results = {
        "lambda": args.lam, "n": g.n,
        "cover": cover_to_dict(cover),
        "strategy": [{"subgraph": list(s), "prob": frac(share)} for s in cover.subgraphs],
        "guaranteed_catch_fraction": frac(share),
        "cover_size_bound": frac(cover_size_bound(g.n, args.lam)),
        "approximation_factor": frac(approximation_factor(g.n, args.lam)),
    }
    if args.with_exact:
        sol = solve_maxmin(g, args.lam, theta_cap=args.theta_cap)
        results["pstar"] = frac(sol.pstar)
        results["realized_factor"] = frac(share * approximation_factor(g.n, args.lam) / sol.pstar)
    return results, digest, EXIT_OK


def cmd_verify(args) -> tuple[dict[str, Any], str, int]:
    g, digest = _read_graph(args.graph)
    _check_lambda(g, args.lam)
    try:
        doc = json.loads(Path(args.profile).read_text())
    except OSError as e:
        raise InputError(f"cannot read {args.profile}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"profile is not valid JSON: {e}") from None
    actions = enumerate_action_set(g, args.lam, theta_cap=args.theta_cap)
    profile = profile_from_dict(doc, actions)
    report = verify_equilibrium(g, args.lam, profile)
    code = EXIT_OK if report.is_equilibrium else EXIT_NOT_EQUILIBRIUM
    return report_to_dict(report), digest, code


def _instance(args) -> GeneratedInstance:
    fam = args.family
    need = {"path": ("n", "lam"), "cycle": ("n", "lam"), "star-of-lines": ("n", "lam"),
            "three-partition": ("a", "groups"), "fig1": (),
            "random-tree": ("n", "lam"), "random-connected": ("n", "edges", "lam")}[fam]
    missing = [name for name in need if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + {"lam": "lambda"}.get(m, m) for m in missing)
        raise InputError(f"{fam} needs {flags}")
    if fam == "path":
        return path_instance(args.n, args.lam)
    if fam == "cycle":
        return cycle_instance(args.n, args.lam)
    if fam == "star-of-lines":
        return gen_star_of_lines(args.n, args.lam)
    if fam == "three-partition":
        try:
            a = [int(x) for x in args.a.split(",")]
        except ValueError:
            raise InputError(f"--a must be comma-separated integers, got {args.a!r}") from None
        return gen_three_partition_tree(a, args.groups)
    if fam == "fig1":
        return gen_fig1_graph()
    if fam == "random-tree":
        g = gen_random_tree(args.n, args.seed)
        return GeneratedInstance(g, args.lam, None, fam, {"n": args.n, "seed": args.seed})
    g = gen_random_connected(args.n, args.edges, args.seed)
    return GeneratedInstance(g, args.lam, None, fam, {"n": args.n, "m": args.edges, "seed": args.seed})


def cmd_generate(args) -> tuple[dict[str, Any], str, int]:
    inst = _instance(args)
    if not 1 <= inst.lam <= inst.graph.n:
        raise InputError(f"--lambda must be in 1..{inst.graph.n}, got {inst.lam}")
    graph_path, meta_path = write_instance(inst, args.out)
    results = {"graph_file": str(graph_path), "metadata_file": str(meta_path), **instance_metadata(inst)}
    digest = "sha256:" + hashlib.sha256(graph_path.read_bytes()).hexdigest()
    return results, digest, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="csd", description="Connected-subgraph defense game solver.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True, lam_required=True):
        if graph:
            p.add_argument("graph", help="edge-list file")
        p.add_argument("--lambda", dest="lam", type=int, required=lam_required,
                       help="defended subgraph size")
        p.add_argument("--theta-cap", type=int, default=DEFAULT_THETA_CAP,
                       help="maximum number of lambda-subgraphs to enumerate")
        p.add_argument("--format", choices=("report", "bare"), default="report")

    p = sub.add_parser("solve", help="exact p*, best defense, V* and an equilibrium")
    common(p)
    p.add_argument("--attackers", "-k", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("tree-check", help="decide defense-optimality of a tree")
    common(p)
    p.set_defaults(func=cmd_tree_check)

    p = sub.add_parser("approx", help="cover-based approximate defense strategy")
    common(p)
    p.add_argument("--with-exact", action="store_true", help="also solve exactly and report the realized factor")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("verify", help="check a strategy profile for equilibrium")
    common(p)
    p.add_argument("profile", help="profile JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a generated instance and its metadata sidecar")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("out", help="output edge-list path; metadata goes to <out>.meta.json")
    p.add_argument("--n", type=int)
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--edges", type=int, help="edge count (random-connected)")
    p.add_argument("--a", help="comma-separated integers (three-partition)")
    p.add_argument("--groups", type=int, help="number of triples m (three-partition)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("report", "bare"), default="report")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        results, digest, code = args.func(args)
    except ActionSetTooLarge as e:
        print(f"csd: {e}", file=sys.stderr)
        return EXIT_GUARDRAIL
    except (InputError, GraphError, SchemaError, ValueError) as e:
        print(f"csd: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.format == "bare":
        doc = results
    else:
        doc = {"command": ["csd", *argv], "input_digest": digest, "results": results,
               "timing_seconds": round(time.perf_counter() - start, 6), "version": __version__}
    print(json.dumps(doc, indent=2, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())
