"""Deterministic JSON reports."""
from __future__ import annotations

import json
import time
from fractions import Fraction

from .analysis import classify_g0, structure_verdict
from .arith import rat, rat_str
from .model import (
    Model,
    balance_info,
    diagonal_condition,
    holomorphic_nondegeneracy,
    levi_form,
    pseudoconvexity,
)
from .solver import full_grading

SCHEMA = 1


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def model_echo(model: Model) -> dict:
    out = {"name": model.name, "provenance": model.provenance}
    out.update(model.to_json())
    return out


def levi_section(model: Model, sample_budget: int, seed: int) -> dict:
    verdict = pseudoconvexity(model, sample_budget, seed)
    return {
        "form": [[entry.to_text() for entry in row] for row in levi_form(model.P)],
        "verdict": verdict.to_json(),
    }, verdict


def nondegeneracy_section(model: Model, degree_cap) -> tuple:
    witness = holomorphic_nondegeneracy(model, degree_cap)
    cap = rat_str(rat(degree_cap))
    return {
        "status": "nondegenerate" if witness is None else "degenerate",
        "degree_cap": cap,
        "label": f"up to weighted degree {cap}",
        "witness": None if witness is None else witness.to_text(),
    }, witness is None


def build_report(model: Model, command: str = "symmetries", *, sample_budget=64, seed=0,
                 degree_cap="1", debug_extended_menu=False, timings=False) -> dict:
    clock = {}
    t0 = time.perf_counter()
    report = {
        "schema": SCHEMA,
        "command": command,
        "model": model_echo(model),
        "options": {
            "sample_budget": sample_budget,
            "seed": seed,
            "degree_cap": rat_str(rat(degree_cap)),
            "debug_extended_menu": debug_extended_menu,
        },
        "validation": {"valid": True, "violations": []},
    }
    levi, verdict = levi_section(model, sample_budget, seed)
    report["levi"] = levi
    clock["levi"] = time.perf_counter() - t0
    if command == "levi":
        return _finish(report, clock, timings)

    t = time.perf_counter()
    nondeg, nondegenerate = nondegeneracy_section(model, degree_cap)
    report["nondegeneracy"] = nondeg
    clock["nondegeneracy"] = time.perf_counter() - t
    report["balance"] = balance_info(model).to_json()
    bad = diagonal_condition(model)
    report["diagonal_condition"] = {"holds": bad is None, "first_bad": None if bad is None else bad + 1}

    t = time.perf_counter()
    grading = full_grading(model, debug_extended_menu=debug_extended_menu)
    clock["grading"] = time.perf_counter() - t
    g0 = classify_g0(grading.components[Fraction(0)].basis, model)
    verdicts = structure_verdict(grading, model, verdict, nondegenerate)
    if command == "symmetries":
        report["grading"] = grading.to_json()
        report["g0"] = {
            "euler_coords": [rat_str(c) for c in g0.euler_coords],
            "rotations": [r.to_text() for r in g0.rotations],
            "rotation_checks": [
                {"field": label, "verdict": None if v is None else v.to_json()} for label, v in g0.verdicts
            ],
            "violations": g0.violations,
            "unsupported": g0.unsupported,
        }
    else:
        report["dims"] = {rat_str(d): k for d, k in grading.dims().items()}
        report["total_dim"] = grading.total_dim
    report["verdicts"] = verdicts.to_json()
    return _finish(report, clock, timings)


def _finish(report, clock, timings):
    if timings:
        report["timings"] = {k: round(v, 6) for k, v in clock.items()}
    return report
