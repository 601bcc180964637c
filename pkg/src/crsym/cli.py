"""Command-line front end.

Exit codes: 0 ok, 1 assertion failure (invalid model, failed check,
golden drift), 2 usage error (unparsable input, unknown zoo name).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arith import rat
from .report import SCHEMA, build_report, dumps
from .spec import ModelSpec, SpecError, resolve, split_list

VALIDATION_KINDS = {"weights", "dimension", "zero", "pluriharmonic", "reality", "inhomogeneous"}
COMMANDS = ("validate", "levi", "symmetries", "verdicts", "zoo-list", "zoo-run-all")


def _add_model_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--expr", help='model polynomial, e.g. "abs2(z1) + abs2(z2^2)"')
    src.add_argument("--sos", help='holomorphic squares Q_j, e.g. "z1, z2^2" (model is sum |Q_j|^2)')
    src.add_argument("--zoo", help="name of a built-in model")
    src.add_argument("--json", help="model JSON, inline or @path")
    p.add_argument("--mu", help='weights, e.g. "1/2,1/4" (required with --expr and --sos)')
    p.add_argument("--name", help="label echoed in the report")


def _add_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample-budget", type=int, default=64)
    p.add_argument("--degree-cap", default="1")
    p.add_argument("--debug-extended-menu", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (not deterministic)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crsym", description="Infinitesimal symmetries of weighted homogeneous model hypersurfaces.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("validate", "levi", "symmetries", "verdicts"):
        p = sub.add_parser(name)
        _add_model_args(p)
        _add_options(p)
    sub.add_parser("zoo-list")
    p = sub.add_parser("zoo-run-all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--text", action="store_true", help="one line per check instead of JSON")
    p.add_argument("--update-golden", action="store_true", help="rewrite the golden reports")
    p.add_argument("--golden-dir", type=Path, default=None)
    return parser


class UsageError(Exception):
    pass


def _mu(text):
    if text is None:
        return None
    try:
        return tuple(rat(x) for x in split_list(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad --mu {text!r}: {exc}") from None


def spec_from_args(args) -> ModelSpec:
    opts = dict(
        sample_budget=args.sample_budget,
        seed=args.seed,
        degree_cap=args.degree_cap,
        debug_extended_menu=args.debug_extended_menu,
        name=args.name,
    )
    mu = _mu(args.mu)
    if args.zoo is not None:
        return ModelSpec("zoo", args.zoo, **opts)
    if args.json is not None:
        text = args.json
        if text.startswith("@"):
            try:
                text = Path(text[1:]).read_text()
            except OSError as exc:
                raise UsageError(str(exc)) from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad --json: {exc}") from None
        return ModelSpec("json", doc, **opts)
    if mu is None:
        raise UsageError("--mu is required with --expr and --sos")
    if args.sos is not None:
        return ModelSpec("json", {"sos": {"mu": [str(m) for m in mu], "Q": split_list(args.sos)}}, **opts)
    return ModelSpec("expr", args.expr, mu=mu, **opts)


def _diag(obj) -> None:
    sys.stderr.write(json.dumps(obj, sort_keys=True) + "\n")


def run_model_command(args, out) -> int:
    try:
        spec = spec_from_args(args)
        rat(spec.degree_cap)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        _diag({"error": "usage", "detail": str(exc)})
        return 2
    try:
        model = resolve(spec)
    except SpecError as exc:
        invalid = exc.diagnostics and all(d.get("kind") in VALIDATION_KINDS for d in exc.diagnostics)
        _diag({"error": "invalid_model" if invalid else "usage", "diagnostics": exc.diagnostics})
        if invalid and args.command == "validate":
            out.write(dumps({
                "schema": SCHEMA,
                "command": "validate",
                "validation": {"valid": False, "violations": exc.diagnostics},
            }))
        return 1 if invalid else 2
    if args.command == "validate":
        from .report import model_echo

        out.write(dumps({
            "schema": SCHEMA,
            "command": "validate",
            "model": model_echo(model),
            "validation": {"valid": True, "violations": []},
        }))
        return 0
    report = build_report(
        model,
        args.command,
        sample_budget=spec.sample_budget,
        seed=spec.seed,
        degree_cap=spec.degree_cap,
        debug_extended_menu=spec.debug_extended_menu,
        timings=args.timings,
    )
    out.write(dumps(report))
    return 0


def zoo_list(out) -> int:
    from .zoo import ZOO

    out.write(dumps({
        "schema": SCHEMA,
        "command": "zoo-list",
        "models": [{"name": z.name, "description": z.description, "source": z.source, "expect": z.expect} for z in ZOO],
    }))
    return 0


def golden_report(entry, seed: int = 0) -> dict:
    return build_report(entry.model(), "symmetries", seed=seed)


def zoo_run_all(seed: int = 0, golden_dir: Path | None = None, update_golden: bool = False) -> dict:
    """Run every zoo model against its golden report and expectations, then the acceptance criteria."""
    from .acceptance import GOLDEN_DIR, run_criteria, zoo_expectations
    from .zoo import ZOO

    golden_dir = Path(golden_dir or GOLDEN_DIR)
    models = []
    for z in ZOO:
        text = dumps(golden_report(z, seed))
        path = golden_dir / f"{z.name}.json"
        if update_golden:
            golden_dir.mkdir(parents=True, exist_ok=True)
            path.write_text(text)
        if not path.exists():
            status = "missing"
        else:
            status = "match" if path.read_text() == text else "mismatch"
        checks = zoo_expectations(z.name)
        models.append({
            "name": z.name,
            "golden": status,
            "expectations": checks,
            "ok": status == "match" and all(c["ok"] for c in checks),
        })
    criteria = [r.to_json() for r in run_criteria(seed)]
    return {
        "schema": SCHEMA,
        "command": "zoo-run-all",
        "seed": seed,
        "models": models,
        "acceptance": criteria,
        "ok": all(m["ok"] for m in models) and all(c["ok"] for c in criteria),
    }


def zoo_text(result: dict) -> str:
    lines = []
    for m in result["models"]:
        lines.append(f"[{'PASS' if m['ok'] else 'FAIL'}] model {m['name']}: golden {m['golden']}")
        for c in m["expectations"]:
            if not c["ok"]:
                lines.append(f"    {c['check']}: expected {c['expected']!r}, got {c['actual']!r}")
    for c in result["acceptance"]:
        lines.append(f"[{'PASS' if c['ok'] else 'FAIL'}] criterion {c['criterion']:>2}: {c['title']} -- {c['detail']}")
    lines.append("OK" if result["ok"] else "FAILED")
    return "\n".join(lines) + "\n"


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "zoo-list":
        return zoo_list(out)
    if args.command == "zoo-run-all":
        result = zoo_run_all(args.seed, args.golden_dir, args.update_golden)
        out.write(zoo_text(result) if args.text else dumps(result))
        if not result["ok"]:
            failed = [m["name"] for m in result["models"] if not m["ok"]]
            failed += [f"criterion {c['criterion']}" for c in result["acceptance"] if not c["ok"]]
            _diag({"error": "assertion_failure", "failed": failed})
        return 0 if result["ok"] else 1
    return run_model_command(args, out)


if __name__ == "__main__":
    sys.exit(main())
