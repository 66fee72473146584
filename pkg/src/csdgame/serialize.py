"""JSON documents for solutions, profiles, reports, partitions, covers and instances.

Every probability crosses this boundary as an exact ``"num/den"`` string.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .analysis import EquilibriumReport
from .approx import CoverCollection
from .generators import GeneratedInstance
from .graph import parse_graph, serialize_graph
from .solver import DefenseStrategy, ExactSolution, StrategyProfile
from .subgraphs import ActionSet
from .trees import TreePartition


class SchemaError(ValueError):
    """A JSON document does not match the expected layout."""


def frac(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str | int) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise SchemaError(f"expected a 'num/den' string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise SchemaError(f"not a rational: {s!r}") from None


def strategy_to_list(q: DefenseStrategy) -> list[dict[str, Any]]:
    return [{"subgraph": list(s), "prob": frac(p)} for s, p in q.items()]


def solution_to_dict(sol: ExactSolution, with_vstar: bool = True) -> dict[str, Any]:
    doc = {
        "lambda": sol.lam,
        "n": sol.actions.n,
        "theta": sol.actions.theta,
        "pstar": frac(sol.pstar),
        "defense_ratio": frac(1 / sol.pstar),
        "strategy": strategy_to_list(sol.qstar),
        "certificate": [frac(t) for t in sol.certificate],
    }
    if with_vstar:
        doc["vstar"] = sorted(sol.vstar)
    return doc


def attacker_to_dict(t: tuple[Fraction, ...]) -> dict[str, str]:
    return {str(i): frac(x) for i, x in enumerate(t) if x}


def profile_to_dict(profile: StrategyProfile) -> dict[str, Any]:
    return {
        "lambda": profile.actions.lam,
        "defense": strategy_to_list(profile.defense),
        "attackers": [attacker_to_dict(t) for t in profile.attackers],
    }


def profile_from_dict(doc: Any, actions: ActionSet) -> StrategyProfile:
    """Build a profile from its JSON form.

    ``defense`` is either a list of ``{"subgraph": [...], "prob": "a/b"}``
    entries or an object keyed by comma-separated sorted vertex lists.
    ``attackers`` is a list of objects mapping vertex labels to probabilities.
    """
    if not isinstance(doc, dict):
        raise SchemaError("profile must be a JSON object")
    if "lambda" in doc and doc["lambda"] != actions.lam:
        raise SchemaError(f"profile is for lambda={doc['lambda']}, solving with lambda={actions.lam}")
    defense = doc.get("defense")
    if isinstance(defense, dict):
        try:
            entries = [([int(v) for v in key.split(",")], p) for key, p in defense.items()]
        except ValueError:
            raise SchemaError("defense keys must be comma-separated vertex lists") from None
    elif isinstance(defense, list):
        try:
            entries = [(e["subgraph"], e["prob"]) for e in defense]
        except (TypeError, KeyError):
            raise SchemaError("defense entries need 'subgraph' and 'prob'") from None
    else:
        raise SchemaError("profile needs a 'defense' list or object")
    weights: dict[int, Fraction] = {}
    for verts, p in entries:
        try:
            j = actions.index_of(verts)
        except KeyError as e:
            raise SchemaError(str(e.args[0])) from None
        weights[j] = weights.get(j, Fraction(0)) + parse_frac(p)

    attackers = doc.get("attackers")
    if not isinstance(attackers, list) or not attackers:
        raise SchemaError("profile needs a non-empty 'attackers' list")
    dists = []
    for a, entry in enumerate(attackers):
        if not isinstance(entry, dict):
            raise SchemaError(f"attacker {a} must map vertices to probabilities")
        t = [Fraction(0)] * actions.n
        for v, p in entry.items():
            try:
                i = int(v)
            except ValueError:
                raise SchemaError(f"attacker {a}: bad vertex label {v!r}") from None
            if not 0 <= i < actions.n:
                raise SchemaError(f"attacker {a}: vertex {i} out of range")
            t[i] += parse_frac(p)
        dists.append(tuple(t))
    try:
        return StrategyProfile(DefenseStrategy.from_weights(actions, weights), tuple(dists))
    except ValueError as e:
        raise SchemaError(str(e)) from None


def _witness(w: dict[str, Any] | None) -> dict[str, Any] | None:
    if w is None:
        return None
    return {k: (frac(v) if isinstance(v, Fraction) else v) for k, v in w.items()}


def report_to_dict(report: EquilibriumReport) -> dict[str, Any]:
    return {
        "is_equilibrium": report.is_equilibrium,
        "condition1_ok": report.condition1_ok,
        "condition2_ok": report.condition2_ok,
        "condition3_ok": report.condition3_ok,
        "condition1_witness": _witness(report.condition1_witness),
        "condition2_witness": _witness(report.condition2_witness),
        "condition3_witness": _witness(report.condition3_witness),
        "pstar": frac(report.pstar),
        "vstar": sorted(report.vstar),
        "min_vertex_probability": frac(report.min_vertex_probability),
        "defense_value": frac(report.defense_value),
        "defense_ratio": "infinite" if report.defense_ratio is None else frac(report.defense_ratio),
    }


def partition_to_dict(part: TreePartition) -> dict[str, Any]:
    return {"blocks": [list(b) for b in part.blocks]}


def cover_to_dict(cover: CoverCollection) -> dict[str, Any]:
    return {
        "subgraphs": [list(s) for s in cover.subgraphs],
        "size": len(cover),
        "coverage": cover.coverage(),
        "tree_degree": [cover.source_tree.degree(v) for v in range(cover.source_tree.n)],
    }


def instance_metadata(inst: GeneratedInstance) -> dict[str, Any]:
    doc = {
        "construction": inst.construction,
        "parameters": inst.parameters,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "lambda": inst.lam,
        "predicted_pstar": "none" if inst.predicted_pstar is None else frac(inst.predicted_pstar),
    }
    if inst.threshold is not None:
        doc["threshold"] = frac(inst.threshold)
    if inst.note:
        doc["note"] = inst.note
    return doc


def sidecar_path(graph_path: str | Path) -> Path:
    p = Path(graph_path)
    return p.with_name(p.name + ".meta.json")


def write_instance(inst: GeneratedInstance, path: str | Path) -> tuple[Path, Path]:
    """Write the edge list to `path` and the metadata to ``<path>.meta.json``."""
    path = Path(path)
    path.write_text(serialize_graph(inst.graph))
    meta = sidecar_path(path)
    meta.write_text(json.dumps(instance_metadata(inst), indent=2, sort_keys=True) + "\n")
    return path, meta


def read_instance(path: str | Path) -> GeneratedInstance:
    path = Path(path)
    g = parse_graph(path.read_text())
    meta = json.loads(sidecar_path(path).read_text())
    pred = meta.get("predicted_pstar", "none")
    thr = meta.get("threshold")
    return GeneratedInstance(
        g, meta["lambda"], None if pred == "none" else parse_frac(pred), meta["construction"],
        meta.get("parameters", {}), threshold=None if thr is None else parse_frac(thr),
        note=meta.get("note"))
