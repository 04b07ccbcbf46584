"""Actual causes for boolean conjunctive query answers.

A tuple t of the endogenous part is a counterfactual cause when deleting
it alone falsifies the query, and an actual cause when it becomes a
counterfactual cause after deleting some contingency set of endogenous
tuples.  Responsibility is the exact rational 1/(1 + k) where k is the
size of the smallest contingency set; non-causes get responsibility 0.

Two engines are provided.  The default reduces the problem to minimal
hitting sets of the endogenous parts of the query's witnesses: the
minimal contingency sets of t are exactly H minus {t} for the minimal
hitting sets H that contain t.  The brute-force engine enumerates
contingency candidates directly and is intended for small instances and
as an oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, TypeAlias

from .budget import Meter
from .errors import BudgetError, DomainError
from .hitting import minimal_hitting_sets, minimize_family, subsets_of
from .model import (
    BooleanQuery,
    Fact,
    Instance,
    eval_bcq,
    witnesses,
)

__all__ = [
    "ContingencySet",
    "CauseReport",
    "CauseSet",
    "BRUTEFORCE_CAP",
    "is_counterfactual_cause",
    "minimal_contingency_sets",
    "actual_causes",
    "responsibility",
    "most_responsible_causes",
]

#: A contingency set: endogenous tuples whose removal makes its cause
#: counterfactual.
ContingencySet: TypeAlias = frozenset[Fact]

#: Instances with more endogenous tuples than this refuse the
#: brute-force engine (override per call).
BRUTEFORCE_CAP = 16


@dataclass(frozen=True)
class CauseReport:
    """One actual cause, all its minimal contingency sets, and its responsibility."""

    cause: Fact
    minimal_contingencies: frozenset[ContingencySet]
    responsibility: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "minimal_contingencies",
            frozenset(frozenset(c) for c in self.minimal_contingencies),
        )
        if not self.minimal_contingencies:
            raise ValueError("a cause must carry at least one contingency set")
        expected = Fraction(1, 1 + min(len(c) for c in self.minimal_contingencies))
        if self.responsibility != expected:
            raise ValueError(
                f"responsibility {self.responsibility} does not match the "
                f"smallest contingency set (expected {expected})"
            )

    @property
    def is_counterfactual(self) -> bool:
        return frozenset() in self.minimal_contingencies


@dataclass(frozen=True)
class CauseSet:
    """All actual causes of one query over one instance."""

    reports: frozenset[CauseReport]

    def __post_init__(self) -> None:
        object.__setattr__(self, "reports", frozenset(self.reports))
        seen = [r.cause for r in self.reports]
        if len(seen) != len(set(seen)):
            raise ValueError("a tuple may appear in at most one cause report")

    def causes(self) -> tuple[Fact, ...]:
        return tuple(sorted(r.cause for r in self.reports))

    def report_for(self, t: Fact) -> CauseReport | None:
        for r in self.reports:
            if r.cause == t:
                return r
        return None

    def responsibility(self, t: Fact) -> Fraction:
        report = self.report_for(t)
        return report.responsibility if report is not None else Fraction(0)

    def __contains__(self, t: Fact) -> bool:
        return any(r.cause == t for r in self.reports)

    def __iter__(self) -> Iterator[CauseReport]:
        return iter(sorted(self.reports, key=lambda r: r.cause))

    def __len__(self) -> int:
        return len(self.reports)

    def __bool__(self) -> bool:
        return bool(self.reports)


def _require_endogenous(instance: Instance, t: Fact) -> None:
    if t in instance.endogenous:
        return
    if t in instance.exogenous:
        raise DomainError(f"{t} is exogenous; only endogenous tuples can be causes")
    raise DomainError(f"{t} is not in the instance")


def is_counterfactual_cause(instance: Instance, query: BooleanQuery, t: Fact) -> bool:
    """True iff the query holds and deleting ``t`` alone falsifies it."""
    _require_endogenous(instance, t)
    facts = instance.facts
    return eval_bcq(facts, query, instance.schemas) and not eval_bcq(
        facts - {t}, query, instance.schemas
    )


def _endogenous_hitting_sets(
    instance: Instance, query: BooleanQuery, budget: int | None
) -> frozenset[frozenset[Fact]]:
    family = {
        w & instance.endogenous
        for w in witnesses(instance.facts, query, instance.schemas, budget=budget)
    }
    return minimal_hitting_sets(family, budget=budget)


def _bruteforce_contingency_table(
    instance: Instance,
    query: BooleanQuery,
    budget: int | None,
    cap: int,
) -> dict[Fact, frozenset[ContingencySet]]:
    endo = instance.endogenous
    if len(endo) > cap:
        raise BudgetError(
            f"brute-force engine is capped at {cap} endogenous tuples, got {len(endo)}",
            budget=cap,
        )
    meter = Meter(budget, "contingency enumeration")
    cache: dict[frozenset[Fact], bool] = {}
    full = instance.facts

    def holds(fs: frozenset[Fact]) -> bool:
        got = cache.get(fs)
        if got is None:
            got = eval_bcq(fs, query, instance.schemas)
            cache[fs] = got
        return got

    table: dict[Fact, frozenset[ContingencySet]] = {}
    for t in sorted(endo):
        gammas = []
        for gamma in subsets_of(endo - {t}):
            meter.charge()
            if holds(full - gamma) and not holds(full - gamma - {t}):
                gammas.append(gamma)
        if gammas:
            table[t] = minimize_family(gammas)
    return table


def minimal_contingency_sets(
    instance: Instance,
    view: BooleanQuery,
    t: Fact,
    *,
    engine: str = "hitting",
    budget: int | None = None,
    bruteforce_cap: int = BRUTEFORCE_CAP,
) -> frozenset[ContingencySet]:
    """All subset-minimal contingency sets turning ``t`` into a counterfactual
    cause for the view; empty iff ``t`` is not an actual cause."""
    _require_endogenous(instance, t)
    if engine == "hitting":
        hs = _endogenous_hitting_sets(instance, view, budget)
        return frozenset(h - {t} for h in hs if t in h)
    if engine == "bruteforce":
        table = _bruteforce_contingency_table(instance, view, budget, bruteforce_cap)
        return table.get(t, frozenset())
    raise ValueError(f"unknown engine {engine!r}")


def actual_causes(
    instance: Instance,
    query: BooleanQuery,
    *,
    engine: str = "hitting",
    budget: int | None = None,
    bruteforce_cap: int = BRUTEFORCE_CAP,
) -> CauseSet:
    """Every actual cause of the query, with contingency sets and exact
    responsibility.  Empty when the query is false on the instance."""
    if engine == "hitting":
        hs = _endogenous_hitting_sets(instance, query, budget)
        reports = []
        for t in sorted(instance.endogenous):
            containing = [h for h in hs if t in h]
            if containing:
                reports.append(
                    CauseReport(
                        cause=t,
                        minimal_contingencies=frozenset(h - {t} for h in containing),
                        responsibility=Fraction(1, min(len(h) for h in containing)),
                    )
                )
        return CauseSet(frozenset(reports))
    if engine == "bruteforce":
        table = _bruteforce_contingency_table(instance, query, budget, bruteforce_cap)
        reports = [
            CauseReport(
                cause=t,
                minimal_contingencies=gammas,
                responsibility=Fraction(1, 1 + min(len(g) for g in gammas)),
            )
            for t, gammas in table.items()
        ]
        return CauseSet(frozenset(reports))
    raise ValueError(f"unknown engine {engine!r}")


def responsibility(
    instance: Instance,
    query: BooleanQuery,
    t: Fact,
    *,
    engine: str = "hitting",
    budget: int | None = None,
) -> Fraction:
    """1/(1 + k) for the smallest contingency set of size k, or 0 when
    ``t`` is not an actual cause (also when the query does not hold)."""
    gammas = minimal_contingency_sets(instance, query, t, engine=engine, budget=budget)
    if not gammas:
        return Fraction(0)
    return Fraction(1, 1 + min(len(g) for g in gammas))


def most_responsible_causes(
    instance: Instance,
    view: BooleanQuery,
    *,
    engine: str = "hitting",
    budget: int | None = None,
) -> frozenset[Fact]:
    """The actual causes with maximal responsibility; empty iff there are none."""
    cause_set = actual_causes(instance, view, engine=engine, budget=budget)
    if not cause_set:
        return frozenset()
    top = max(r.responsibility for r in cause_set.reports)
    return frozenset(r.cause for r in cause_set.reports if r.responsibility == top)
