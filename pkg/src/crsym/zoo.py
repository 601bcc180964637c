"""Built-in models with the verdicts expected of them."""
from __future__ import annotations

from dataclasses import dataclass, field

from .spec import ModelSpec, resolve


@dataclass(frozen=True)
class ZooEntry:
    name: str
    description: str
    source: dict  # model JSON
    expect: dict = field(default_factory=dict)

    def spec(self, **options) -> ModelSpec:
        return ModelSpec("json", self.source, name=self.name, **options)

    def model(self):
        return resolve(self.spec())


def _sos(mu, Q):
    return {"sos": {"mu": list(mu), "Q": list(Q)}}


def _expr(mu, expr):
    return {"mu": list(mu), "expr": expr}


ZOO = [
    ZooEntry(
        "hyperquadric1",
        "strongly pseudoconvex hyperquadric Im w = |z1|^2",
        _sos(["1/2"], ["z1"]),
        {
            "levi": "psd_certified",
            "nondegenerate": True,
            "balanced": True,
            "jet_order": 2,
            "shape": "thm_1_1",
            "dims": {"-1": 1, "-1/2": 2, "0": 2, "1/2": 2, "1": 1},
        },
    ),
    ZooEntry(
        "hyperquadric2",
        "hyperquadric Im w = |z1|^2 + |z2|^2",
        _sos(["1/2", "1/2"], ["z1", "z2"]),
        {
            "levi": "psd_certified",
            "nondegenerate": True,
            "balanced": True,
            "jet_order": 2,
            "shape": "thm_1_1",
            "dims": {"-1": 1, "-1/2": 4, "0": 5, "1/2": 4, "1": 1},
        },
    ),
    ZooEntry(
        "sos_quartic_1var",
        "homogeneous sum of squares Im w = |z1|^4",
        _sos(["1/4"], ["z1^2"]),
        {
            "levi": "psd_certified",
            "nondegenerate": True,
            "balanced": True,
            "jet_order": 2,
            "shape": "thm_5_3",
            "dims": {"-1": 1, "0": 2, "1": 1},
        },
    ),
    ZooEntry(
        "sos_quartic_2var",
        "homogeneous sum of squares Im w = |z1^2|^2 + |z1 z2|^2 + |z2^2|^2",
        _sos(["1/4", "1/4"], ["z1^2", "z1 z2", "z2^2"]),
        {
            "levi": "psd_certified",
            "nondegenerate": True,
            "balanced": True,
            "jet_order": 2,
            "shape": "thm_5_3",
            "dims": {"-1": 1, "0": 3, "1": 1},
        },
    ),
    ZooEntry(
        "sos_1_4",
        "weighted sum of squares Im w = |z1|^2 + |z2|^4",
        _sos(["1/2", "1/4"], ["z1", "z2^2"]),
        {
            "levi": "psd_certified",
            "nondegenerate": True,
            "balanced": True,
            "jet_order": 2,
            "shape": "thm_5_4",
            "dims": {"-1": 1, "-1/2": 2, "0": 3, "1/2": 2, "1": 1},
        },
    ),
    ZooEntry(
        "nonbalanced_quartic",
        "pseudoconvex, not a sum of squares, not balanced: Im w = |z1|^4 + Re(z1^3 zb1)/2",
        _expr(["1/4"], "abs2(z1)^2 + Re(z1^3 zb1)/2"),
        {
            "levi": "psd_sampled",
            "nondegenerate": True,
            "balanced": False,
            "jet_order": 1,
            "shape": "thm_1_1",
            "dims": {"-1": 1, "0": 1},
        },
    ),
    ZooEntry(
        "tube_x1z2",
        "non-pseudoconvex control Im w = Re(z1) |z2|^2",
        _expr(["1/2", "1/4"], "Re(z1)*abs2(z2)"),
        {
            "levi": "not_psd",
            "nondegenerate": True,
            "balanced": False,
            "jet_order": 1,
            "shape": "other",
            "dichotomy": ["form_6_4", "none"],
        },
    ),
    ZooEntry(
        "degenerate_hq1_n2",
        "holomorphically degenerate Im w = |z1|^2 in C^3",
        _sos(["1/2", "1/2"], ["z1"]),
        {
            "levi": "psd_certified",
            "nondegenerate": False,
            "balanced": True,
            "jet_order": 2,
        },
    ),
]

BY_NAME = {z.name: z for z in ZOO}


def get(name: str) -> ZooEntry:
    try:
        return BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown zoo model {name!r}; known: {', '.join(BY_NAME)}") from None
