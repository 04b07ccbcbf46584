"""Canonical JSON forms for instances, causes, repairs, diagnoses and
solution families.

Every emitted collection is sorted canonically (relation name, then
constants, lexicographically), so identical inputs always serialize to
byte-identical output.  Facts appear as flat lists ``[relation, arg...]``
and responsibilities as exact rational strings such as ``"1/2"``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from .causality import CauseReport, CauseSet
from .diagnosis import Diagnosis
from .errors import ParseError
from .model import Fact, Instance, RelationSchema
from .repairs import Repair

__all__ = [
    "fact_key",
    "sort_facts",
    "sort_families",
    "fact_to_list",
    "fact_from_list",
    "family_to_list",
    "family_from_list",
    "instance_to_dict",
    "instance_from_dict",
    "cause_set_to_list",
    "cause_set_from_list",
    "repair_to_dict",
    "repair_from_dict",
    "diagnosis_to_dict",
    "diagnosis_from_dict",
    "dumps",
]


def fact_key(f: Fact) -> tuple[str, tuple[str, ...]]:
    return (f.relation, f.args)


def sort_facts(facts: Iterable[Fact]) -> list[Fact]:
    return sorted(facts, key=fact_key)


def sort_families(families: Iterable[Iterable[Fact]]) -> list[list[Fact]]:
    inner = [sort_facts(fs) for fs in families]
    return sorted(inner, key=lambda fs: [fact_key(f) for f in fs])


def fact_to_list(f: Fact) -> list[str]:
    return [f.relation, *f.args]


def fact_from_list(data: Any) -> Fact:
    if not isinstance(data, list) or not data or not all(isinstance(x, str) for x in data):
        raise ParseError(f"a fact must be a nonempty list of strings, got {data!r}")
    return Fact(data[0], tuple(data[1:]))


def family_to_list(families: Iterable[Iterable[Fact]]) -> list[list[list[str]]]:
    return [[fact_to_list(f) for f in fs] for fs in sort_families(families)]


def family_from_list(data: Any) -> frozenset[frozenset[Fact]]:
    if not isinstance(data, list):
        raise ParseError(f"expected a list of fact sets, got {data!r}")
    return frozenset(frozenset(fact_from_list(f) for f in fs) for fs in data)


def instance_to_dict(instance: Instance) -> dict[str, Any]:
    return {
        "schemas": [
            {"name": s.name, "arity": s.arity} for s in sorted(instance.schemas)
        ],
        "endogenous": [fact_to_list(f) for f in sort_facts(instance.endogenous)],
        "exogenous": [fact_to_list(f) for f in sort_facts(instance.exogenous)],
    }


def instance_from_dict(data: Any) -> Instance:
    if not isinstance(data, dict):
        raise ParseError("an instance must be a JSON object")
    try:
        raw_schemas = data["schemas"]
        raw_endo = data.get("endogenous", [])
        raw_exo = data.get("exogenous", [])
    except (TypeError, KeyError) as exc:
        raise ParseError(f"missing instance field: {exc}") from None
    schemas = set()
    for s in raw_schemas:
        if not isinstance(s, dict) or "name" not in s or "arity" not in s:
            raise ParseError(f"a schema needs 'name' and 'arity', got {s!r}")
        schemas.add(RelationSchema(str(s["name"]), int(s["arity"])))
    endo = frozenset(fact_from_list(f) for f in raw_endo)
    exo = frozenset(fact_from_list(f) for f in raw_exo)
    return Instance(frozenset(schemas), endo, exo)


def cause_set_to_list(cause_set: CauseSet) -> list[dict[str, Any]]:
    return [
        {
            "tuple": fact_to_list(report.cause),
            "responsibility": str(report.responsibility),
            "min_contingencies": family_to_list(report.minimal_contingencies),
        }
        for report in cause_set
    ]


def cause_set_from_list(data: Any) -> CauseSet:
    if not isinstance(data, list):
        raise ParseError("a cause set must be a JSON list")
    reports = []
    for entry in data:
        reports.append(
            CauseReport(
                cause=fact_from_list(entry["tuple"]),
                minimal_contingencies=family_from_list(entry["min_contingencies"]),
                responsibility=Fraction(entry["responsibility"]),
            )
        )
    return CauseSet(frozenset(reports))


def repair_to_dict(repair: Repair) -> dict[str, Any]:
    return {
        "kind": repair.kind,
        "removed": [fact_to_list(f) for f in sort_facts(repair.removed)],
    }


def repair_from_dict(data: Any, universe: Iterable[Fact]) -> Repair:
    removed = frozenset(fact_from_list(f) for f in data["removed"])
    return Repair(frozenset(universe) - removed, removed, str(data["kind"]))


def diagnosis_to_dict(diagnosis: Diagnosis) -> dict[str, Any]:
    return {"abnormal": [fact_to_list(f) for f in sort_facts(diagnosis.abnormal)]}


def diagnosis_from_dict(data: Any) -> Diagnosis:
    return Diagnosis(frozenset(fact_from_list(f) for f in data["abnormal"]))


def dumps(payload: Any) -> str:
    """The canonical JSON text for a payload: two-space indent, stable key
    order as constructed, trailing newline."""
    return json.dumps(payload, indent=2) + "\n"
