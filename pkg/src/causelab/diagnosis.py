"""Causality cast as consistency-based diagnosis.

The unexpected truth of a query is the observation; endogenous tuples
are the components that may be abnormal.  A diagnosis is a set of
endogenous tuples whose removal falsifies the query, i.e. restores the
expected behaviour.  The first-order encoding with abnormality
predicates is represented semantically: flagging a set of tuples
abnormal is consistent with the observation exactly when deleting them
falsifies the query, so that is the test used here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from .causality import CauseReport, CauseSet
from .errors import DomainError
from .hitting import minimal_hitting_sets
from .model import ConjunctiveQuery, Fact, Instance, eval_bcq, witnesses

__all__ = [
    "DiagnosisProblem",
    "Diagnosis",
    "build_problem",
    "minimal_diagnoses",
    "diagnoses_containing",
    "smallest_diagnoses_containing",
    "causes_via_diagnosis",
]


@dataclass(frozen=True)
class Diagnosis:
    """Endogenous tuples flagged abnormal; deleting them falsifies the query."""

    abnormal: frozenset[Fact]

    def __post_init__(self) -> None:
        object.__setattr__(self, "abnormal", frozenset(self.abnormal))

    def __len__(self) -> int:
        return len(self.abnormal)


@dataclass(frozen=True)
class DiagnosisProblem:
    """A query observed to hold over an instance, with the endogenous part
    as the scope of possible abnormality.

    When the observation does not actually hold the problem is vacuous:
    the empty abnormality assumption already explains the behaviour and
    no tuple-specific diagnosis class is populated.
    """

    instance: Instance
    query: ConjunctiveQuery
    abnormal_scope: frozenset[Fact]
    vacuous: bool


def build_problem(instance: Instance, query: ConjunctiveQuery) -> DiagnosisProblem:
    """Set up the diagnosis problem for a query over an instance."""
    holds = eval_bcq(instance.facts, query, instance.schemas)
    return DiagnosisProblem(instance, query, instance.endogenous, vacuous=not holds)


def minimal_diagnoses(
    problem: DiagnosisProblem, *, budget: int | None = None
) -> frozenset[Diagnosis]:
    """All subset-minimal sets of endogenous tuples whose removal falsifies
    the query.

    These are exactly the minimal hitting sets of the endogenous parts of
    the query's witnesses: empty result iff some witness contains no
    endogenous tuple; the vacuous problem yields the empty diagnosis.
    """
    instance = problem.instance
    family = {
        w & problem.abnormal_scope
        for w in witnesses(instance.facts, problem.query, instance.schemas, budget=budget)
    }
    return frozenset(Diagnosis(h) for h in minimal_hitting_sets(family, budget=budget))


def _require_in_scope(problem: DiagnosisProblem, t: Fact) -> None:
    if t not in problem.abnormal_scope:
        raise DomainError(f"{t} is not an endogenous fact of the diagnosis problem")


def diagnoses_containing(
    problem: DiagnosisProblem, t: Fact, *, budget: int | None = None
) -> frozenset[Diagnosis]:
    """The subset-minimal diagnoses that contain ``t``."""
    _require_in_scope(problem, t)
    return frozenset(d for d in minimal_diagnoses(problem, budget=budget) if t in d.abnormal)


def smallest_diagnoses_containing(
    problem: DiagnosisProblem, t: Fact, *, budget: int | None = None
) -> frozenset[Diagnosis]:
    """Among the diagnoses containing ``t``, those of minimum cardinality."""
    containing = diagnoses_containing(problem, t, budget=budget)
    if not containing:
        return frozenset()
    best = min(len(d) for d in containing)
    return frozenset(d for d in containing if len(d) == best)


def causes_via_diagnosis(
    problem: DiagnosisProblem, *, budget: int | None = None
) -> CauseSet:
    """Actual causes computed solely from the diagnosis classes: a tuple is
    a cause iff some minimal diagnosis contains it, and its responsibility
    is the reciprocal of the smallest such diagnosis."""
    if problem.vacuous:
        return CauseSet(frozenset())
    diagnoses = minimal_diagnoses(problem, budget=budget)
    reports = []
    for t in sorted(problem.abnormal_scope):
        containing = [d for d in diagnoses if t in d.abnormal]
        if containing:
            reports.append(
                CauseReport(
                    cause=t,
                    minimal_contingencies=frozenset(d.abnormal - {t} for d in containing),
                    responsibility=Fraction(1, min(len(d) for d in containing)),
                )
            )
    return CauseSet(frozenset(reports))
