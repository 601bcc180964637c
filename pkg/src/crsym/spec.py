"""Model specifications: JSON documents, expression strings, zoo names."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .arith import GaussRat, rat
from .model import Model, ModelValidationError, build_sos, validate
from .parser import ParseError, parse_expression
from .ring import MixedPoly


class SpecError(ValueError):
    """The specification cannot be turned into a model."""

    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.get("detail", str(d)) for d in self.diagnostics))


@dataclass
class ModelSpec:
    kind: str  # json | expr | zoo
    value: object
    mu: tuple | None = None
    name: str | None = None
    sample_budget: int = 64
    seed: int = 0
    degree_cap: str = "1"
    debug_extended_menu: bool = False

    def options(self) -> dict:
        return {
            "sample_budget": self.sample_budget,
            "seed": self.seed,
            "degree_cap": str(self.degree_cap),
            "debug_extended_menu": self.debug_extended_menu,
        }


def split_list(text: str) -> list:
    """Split on ';' or on commas outside parentheses."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in ";," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return [s for s in out if s]


def _parse_diag(exc: ParseError) -> dict:
    return {"kind": "syntax", "detail": str(exc), "position": exc.pos}


def model_from_json(doc, name=None) -> Model:
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        if "sos" in doc:
            sos = doc["sos"]
            mu = [rat(m) for m in sos["mu"]]
            n = len(mu)
            Q = sos["Q"]
            if isinstance(Q, str):
                Q = split_list(Q)
            return build_sos(mu, [parse_expression(q, n=n, kind="holo") for q in Q], name=name)
        mu = [rat(m) for m in doc["mu"]]
        n = int(doc.get("n", len(mu)))
        if "expr" in doc:
            P = parse_expression(doc["expr"], n=n, kind="mixed")
        elif isinstance(doc.get("P"), str):
            P = parse_expression(doc["P"], n=n, kind="mixed")
        else:
            terms = {}
            for t in doc["P"]["terms"]:
                key = (tuple(t["alpha"]), tuple(t.get("beta", [0] * n)), 0)
                terms[key] = terms.get(key, GaussRat()) + GaussRat(rat(t.get("re", "0")), rat(t.get("im", "0")))
            P = MixedPoly.from_terms(n, terms)
        if any(k[2 * n] for k, _ in P.items()):
            raise SpecError([{"kind": "syntax", "detail": "model polynomial must not involve w"}])
        return validate(mu, P, name=name)
    except ParseError as exc:
        raise SpecError([_parse_diag(exc)]) from None
    except ModelValidationError as exc:
        raise SpecError([v.to_json() for v in exc.violations]) from None
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise SpecError([{"kind": "schema", "detail": f"malformed model JSON: {exc}"}]) from None


def resolve(spec: ModelSpec) -> Model:
    if spec.kind == "zoo":
        from .zoo import get

        try:
            entry = get(spec.value)
        except KeyError as exc:
            raise SpecError([{"kind": "zoo", "detail": str(exc.args[0])}]) from None
        return model_from_json(entry.source, name=entry.name)
    if spec.kind == "json":
        return model_from_json(spec.value, name=spec.name)
    if spec.kind == "expr":
        if spec.mu is None:
            raise SpecError([{"kind": "usage", "detail": "--expr needs --mu"}])
        return model_from_json({"mu": list(spec.mu), "expr": spec.value}, name=spec.name)
    raise SpecError([{"kind": "usage", "detail": f"unknown model source {spec.kind!r}"}])
