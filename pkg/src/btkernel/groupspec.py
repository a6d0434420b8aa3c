"""Group specifications and the factor-wise kernel pipeline.

A spec document looks like::

    {"mode": "stabilizer",
     "factors": [{"family": "A", "rank": 3, "twist": "2A",
                  "splitting": "unramified", "weil_restriction": null,
                  "facet_type": [[0, 2]]}]}

The kernel of a product is the product of the factor kernels, and a Weil
restriction has the same kernel as the group it restricts.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import jsonschema

from .closedform import dispatch, has_closed_form
from .dynkin import FAMILIES
from .errors import (ConsistencyError, DomainError, InvalidRankError, SpecParseError,
                     SpecSemanticError)
from .kernel import MultiType, kernel_size, offending_element, quasi_split_problem, vertex_orbits
from .permgroups import TWISTS, TwistedForm, preset_galois

MODES = ("stabilizer", "parahoric")
SPLITTINGS = ("unramified", "ramified")
RULES = ("oracle", "closedform", "ramified-trivial", "parahoric-trivial", "weil-delegated")

SPEC_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["mode", "factors"],
    "properties": {
        "mode": {"enum": list(MODES)},
        "factors": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["family", "rank", "twist", "splitting",
                             "weil_restriction", "facet_type"],
                "properties": {
                    "family": {"enum": list(FAMILIES)},
                    "rank": {"type": "integer", "minimum": 1},
                    "twist": {"enum": list(TWISTS)},
                    "splitting": {"enum": list(SPLITTINGS)},
                    "weil_restriction": {
                        "oneOf": [
                            {"type": "null"},
                            {"type": "object",
                             "additionalProperties": False,
                             "required": ["label"],
                             "properties": {"label": {"type": "string"}}},
                        ]
                    },
                    "facet_type": {
                        "type": "array",
                        "items": {"type": "array",
                                  "items": {"type": "integer", "minimum": 0}},
                    },
                },
            },
        },
    },
}


@dataclass(frozen=True)
class FactorSpec:
    family: str
    rank: int
    twist: str = "split"
    splitting: str = "unramified"
    weil_label: str | None = None
    facet_type: MultiType = MultiType()

    @property
    def form(self) -> TwistedForm:
        return TwistedForm(self.family, self.rank, self.twist)

    @property
    def weil_restriction(self) -> bool:
        return self.weil_label is not None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "twist": self.twist,
            "splitting": self.splitting,
            "weil_restriction": None if self.weil_label is None else {"label": self.weil_label},
            "facet_type": self.facet_type.to_json(),
        }


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple
    mode: str = "stabilizer"

    def __post_init__(self):
        if not self.factors:
            raise SpecSemanticError("a group spec needs at least one factor")
        if self.mode not in MODES:
            raise SpecSemanticError("unknown mode %r" % (self.mode,))
        object.__setattr__(self, "factors", tuple(self.factors))

    def to_json(self) -> dict:
        return {"mode": self.mode, "factors": [f.to_json() for f in self.factors]}


@dataclass(frozen=True)
class FactorResult:
    factor: FactorSpec
    fixed_count: int
    quotient_count: int
    rule: str


@dataclass(frozen=True)
class Report:
    per_factor: tuple
    total_kernel: int
    k_exponent: int
    mode: str = "stabilizer"

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "per_factor": [
                {"factor": r.factor.to_json(), "fixed_count": r.fixed_count,
                 "quotient_count": r.quotient_count, "rule": r.rule}
                for r in self.per_factor
            ],
            "total_kernel": self.total_kernel,
            "k_exponent": self.k_exponent,
        }


def _check_factor(index: int, f: FactorSpec) -> None:
    try:
        form = f.form
    except (InvalidRankError, DomainError) as exc:
        raise SpecSemanticError("factor %d: %s" % (index, exc), factor=index) from None
    size = form.rank + 1
    for part in f.facet_type.parts:
        if any(v >= size for v in part):
            raise SpecSemanticError(
                "factor %d: facet type %s uses a vertex outside 0..%d"
                % (index, f.facet_type, size - 1), factor=index)
    if f.splitting == "unramified":
        gamma = preset_galois(form, form.diagram())
        bad = offending_element(f.facet_type, gamma)
        if bad is not None:
            raise SpecSemanticError(
                "factor %d: facet type %s is not invariant under sigma = %s"
                % (index, f.facet_type, bad), factor=index, sigma=bad)


def _factor_from_json(index: int, doc: dict) -> FactorSpec:
    parts = doc["facet_type"]
    for j, part in enumerate(parts):
        if len(set(part)) != len(part):
            raise SpecSemanticError(
                "factor %d: part %d of the facet type repeats a vertex" % (index, j),
                factor=index)
    try:
        facet_type = MultiType(tuple(tuple(p) for p in parts))
    except DomainError as exc:
        raise SpecSemanticError("factor %d: %s" % (index, exc), factor=index) from None
    weil = doc["weil_restriction"]
    return FactorSpec(
        family=doc["family"],
        rank=doc["rank"],
        twist=doc["twist"],
        splitting=doc["splitting"],
        weil_label=None if weil is None else weil["label"],
        facet_type=facet_type,
    )


def group_spec_from_json(doc) -> GroupSpec:
    """Validate an already-decoded spec document."""
    validator = jsonschema.Draft202012Validator(SPEC_SCHEMA)
    error = jsonschema.exceptions.best_match(validator.iter_errors(doc))
    if error is not None:
        raise SpecParseError(error.message, error.absolute_path)
    factors = [_factor_from_json(i, f) for i, f in enumerate(doc["factors"])]
    for i, f in enumerate(factors):
        _check_factor(i, f)
    return GroupSpec(tuple(factors), doc["mode"])


def parse_group_spec(text: str) -> GroupSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError("invalid JSON: %s" % exc) from None
    return group_spec_from_json(doc)


def factor_counts(f: FactorSpec):
    """(fixed_count, quotient_count, rule) for one factor in stabilizer mode."""
    if f.splitting == "ramified":
        return 1, 1, "ramified-trivial"
    report = kernel_size(quasi_split_problem(f.form, f.facet_type))
    counts = report.counts()
    rule = "oracle"
    if has_closed_form(f.facet_type):
        closed = dispatch(f.form, f.facet_type)
        if closed != counts:
            raise ConsistencyError(
                "%s, type %s: oracle gives %s but the closed form gives %s"
                % (f.form.label(), f.facet_type, counts, closed))
        rule = "closedform"
    if f.weil_restriction:
        rule = "weil-delegated"
    return counts[0], counts[1], rule


def compute_kernel(spec: GroupSpec) -> Report:
    results = []
    total = 1
    for f in spec.factors:
        if spec.mode == "parahoric":
            fixed, quotient, rule = 1, 1, "parahoric-trivial"
        else:
            fixed, quotient, rule = factor_counts(f)
        results.append(FactorResult(f, fixed, quotient, rule))
        total *= quotient
    if total & (total - 1):
        raise ConsistencyError("kernel order %d is not a power of two" % total)
    return Report(tuple(results), total, total.bit_length() - 1, spec.mode)


def k_bound(spec: GroupSpec) -> int:
    """Number of unramified factors of type 2D_n (n >= 4) or 2A_{4n+3}."""
    return sum(
        1 for f in spec.factors
        if f.splitting == "unramified"
        and (f.twist == "2D" or (f.twist == "2A" and f.rank % 4 == 3))
    )


# -- random specs ---------------------------------------------------------

_RANDOM_FORMS = (
    [("A", n, "2A") for n in range(1, 13)]
    + [("A", n, "split") for n in range(1, 9)]
    + [("D", n, "2D") for n in range(4, 11)]
    + [("D", n, "split") for n in range(4, 8)]
    + [("D", 4, "3D4"), ("D", 4, "6D4"), ("E6", 6, "2E6"), ("E6", 6, "split"),
       ("E7", 7, "split"), ("E8", 8, "split"), ("F4", 4, "split"), ("G2", 2, "split"),
       ("B", 3, "split"), ("C", 4, "split")]
)


def random_invariant_multitype(form: TwistedForm, rng: random.Random, max_parts=3) -> MultiType:
    """Random multitype whose parts are unions of galois orbits of vertices."""
    d = form.diagram()
    orbits = vertex_orbits(preset_galois(form, d), list(d.vertices))
    k = rng.randint(1, max_parts)
    parts = [[] for _ in range(k)]
    for orbit in orbits:
        slot = rng.randint(-1, k - 1)
        if slot >= 0:
            parts[slot].extend(orbit)
    parts = [p for p in parts if p] or [list(rng.choice(orbits))]
    return MultiType(tuple(tuple(p) for p in parts))


def random_group_spec(rng: random.Random, max_factors=4, mode=None) -> GroupSpec:
    factors = []
    for _ in range(rng.randint(1, max_factors)):
        family, rank, twist = rng.choice(_RANDOM_FORMS)
        form = TwistedForm(family, rank, twist)
        splitting = "ramified" if rng.random() < 0.2 else "unramified"
        weil = "L%d" % rng.randint(1, 9) if rng.random() < 0.25 else None
        factors.append(FactorSpec(family, rank, twist, splitting, weil,
                                  random_invariant_multitype(form, rng)))
    return GroupSpec(tuple(factors), mode or rng.choice(MODES))
