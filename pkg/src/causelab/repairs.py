"""Repairs of an instance with respect to denial constraints, and the
constructions connecting them to actual causes.

For denial constraints, deleting tuples is the only way to restore
consistency (the constraints are anti-monotone), so repairs are
consistent sub-instances.  S-repairs keep a subset-maximal consistent
set of facts; C-repairs additionally keep as many facts as possible.
Removal sets of S-repairs are exactly the minimal hitting sets of the
violation-view witnesses; multiple constraints pool their witnesses.

The *_from_causes constructions rebuild repairs out of the cause and
contingency classes of the violation view and must coincide with the
direct computation; the cross-check harness verifies this on random
instances.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TypeAlias

from .causality import CauseReport, CauseSet, actual_causes, most_responsible_causes
from .errors import DomainError
from .hitting import minimal_hitting_sets
from .model import (
    ConjunctiveQuery,
    DenialConstraint,
    Fact,
    Instance,
    dc_to_view,
    query_to_dc,
    witnesses,
)

__all__ = [
    "Repair",
    "RemovalSetClass",
    "s_repairs",
    "c_repairs",
    "removal_sets_containing",
    "causes_from_repairs",
    "s_repairs_from_causes",
    "c_repairs_from_most_responsible",
    "consistently_true",
    "endogenous_s_repairs",
]

#: Removal sets of S-repairs that contain a given tuple and stay inside
#: the endogenous part.
RemovalSetClass: TypeAlias = frozenset[frozenset[Fact]]


@dataclass(frozen=True)
class Repair:
    """A consistent sub-instance together with what was deleted."""

    kept: frozenset[Fact]
    removed: frozenset[Fact]
    kind: str  # "S" for subset-maximal, "C" for cardinality-maximal

    def __post_init__(self) -> None:
        object.__setattr__(self, "kept", frozenset(self.kept))
        object.__setattr__(self, "removed", frozenset(self.removed))
        if self.kind not in ("S", "C"):
            raise ValueError(f"repair kind must be 'S' or 'C', got {self.kind!r}")
        if self.kept & self.removed:
            raise ValueError("kept and removed facts must be disjoint")


def _pooled_witnesses(
    instance: Instance, constraints: Iterable[DenialConstraint], budget: int | None
) -> frozenset[frozenset[Fact]]:
    pooled: set[frozenset[Fact]] = set()
    for constraint in constraints:
        pooled |= witnesses(
            instance.facts, dc_to_view(constraint), instance.schemas, budget=budget
        )
    return frozenset(pooled)


def _removal_sets(
    instance: Instance, constraints: Iterable[DenialConstraint], budget: int | None
) -> frozenset[frozenset[Fact]]:
    return minimal_hitting_sets(_pooled_witnesses(instance, constraints, budget), budget=budget)


def s_repairs(
    instance: Instance,
    constraints: Iterable[DenialConstraint],
    *,
    budget: int | None = None,
) -> frozenset[Repair]:
    """All subset-maximal consistent sub-instances (deletions only)."""
    facts = instance.facts
    return frozenset(
        Repair(facts - removed, removed, "S")
        for removed in _removal_sets(instance, constraints, budget)
    )


def c_repairs(
    instance: Instance,
    constraints: Iterable[DenialConstraint],
    *,
    budget: int | None = None,
) -> frozenset[Repair]:
    """The S-repairs keeping the maximum number of facts."""
    removals = _removal_sets(instance, constraints, budget)
    best = min(len(r) for r in removals)
    facts = instance.facts
    return frozenset(
        Repair(facts - removed, removed, "C") for removed in removals if len(removed) == best
    )


def removal_sets_containing(
    instance: Instance,
    constraint: DenialConstraint,
    t: Fact,
    *,
    budget: int | None = None,
) -> RemovalSetClass:
    """S-repair removal sets that contain ``t`` and consist of endogenous
    facts only; nonempty exactly when ``t`` is an actual cause of the
    constraint's violation view."""
    if t not in instance.endogenous:
        raise DomainError(f"{t} is not an endogenous fact of the instance")
    removals = _removal_sets(instance, [constraint], budget)
    return frozenset(r for r in removals if t in r and r <= instance.endogenous)


def causes_from_repairs(
    instance: Instance,
    query: ConjunctiveQuery,
    *,
    budget: int | None = None,
) -> CauseSet:
    """Actual causes computed purely from repair removal sets.

    A tuple is a cause iff some S-repair of the query's denial constraint
    removes it using endogenous facts only, and its responsibility is the
    reciprocal of the smallest such removal set.
    """
    removals = _removal_sets(instance, [query_to_dc(query)], budget)
    eligible = [r for r in removals if r <= instance.endogenous]
    reports = []
    for t in sorted(instance.endogenous):
        containing = [r for r in eligible if t in r]
        if containing:
            reports.append(
                CauseReport(
                    cause=t,
                    minimal_contingencies=frozenset(r - {t} for r in containing),
                    responsibility=Fraction(1, min(len(r) for r in containing)),
                )
            )
    return CauseSet(frozenset(reports))


def _contingency_table(cause_set: CauseSet) -> dict[Fact, frozenset[frozenset[Fact]]]:
    return {r.cause: r.minimal_contingencies for r in cause_set.reports}


def s_repairs_from_causes(
    instance: Instance,
    constraint: DenialConstraint,
    *,
    budget: int | None = None,
) -> frozenset[Repair]:
    """S-repairs rebuilt from the cause and contingency classes of the
    violation view, with the whole instance treated as endogenous.

    A candidate removal set X qualifies iff every t in X is an actual
    cause whose contingency class contains X minus {t}.  A consistent
    instance has no causes and repairs to itself.
    """
    base = instance.all_endogenous()
    view = dc_to_view(constraint)
    cause_set = actual_causes(base, view, budget=budget)
    facts = instance.facts
    if not cause_set:
        return frozenset({Repair(facts, frozenset(), "S")})
    table = _contingency_table(cause_set)
    candidates = {
        gamma | {t} for t, gammas in table.items() for gamma in gammas
    }
    verified = [
        removed
        for removed in candidates
        if all(t in table and removed - {t} in table[t] for t in removed)
    ]
    return frozenset(Repair(facts - removed, removed, "S") for removed in verified)


def c_repairs_from_most_responsible(
    instance: Instance,
    constraint: DenialConstraint,
    *,
    budget: int | None = None,
) -> frozenset[Repair]:
    """C-repairs rebuilt from the most responsible causes of the violation
    view: every removed tuple must be maximally responsible and the rest
    of the removal set must be one of its minimal contingency sets."""
    base = instance.all_endogenous()
    view = dc_to_view(constraint)
    cause_set = actual_causes(base, view, budget=budget)
    facts = instance.facts
    if not cause_set:
        return frozenset({Repair(facts, frozenset(), "C")})
    top = most_responsible_causes(base, view, budget=budget)
    table = _contingency_table(cause_set)
    candidates = {
        gamma | {t} for t in top for gamma in table[t]
    }
    verified = [
        removed
        for removed in candidates
        if all(t in top and removed - {t} in table[t] for t in removed)
    ]
    return frozenset(Repair(facts - removed, removed, "C") for removed in verified)


def consistently_true(
    instance: Instance,
    constraint: DenialConstraint,
    a: Fact,
    *,
    budget: int | None = None,
) -> bool:
    """Consistent query answering for a ground atom of the instance: true
    iff ``a`` is not an actual cause of the violation view when the whole
    instance counts as endogenous, equivalently iff every S-repair keeps it."""
    if a not in instance.facts:
        raise DomainError(f"{a} is not a fact of the instance")
    cause_set = actual_causes(instance.all_endogenous(), dc_to_view(constraint), budget=budget)
    return a not in cause_set


def endogenous_s_repairs(
    instance: Instance,
    constraints: Iterable[DenialConstraint],
    *,
    budget: int | None = None,
) -> frozenset[Repair]:
    """S-repairs obtained by deleting endogenous facts only.

    May be empty; emptiness means no endogenous repair exists, it is not
    an error.
    """
    return frozenset(
        r for r in s_repairs(instance, constraints, budget=budget)
        if r.removed <= instance.endogenous
    )
