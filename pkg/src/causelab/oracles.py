"""Brute-force reference implementations.

These transcribe the definitions directly, walking subset lattices and
naive fixpoints, and exist so the optimized engines can be checked
against something that is obviously right.  They are deliberately
independent of the hitting-set and semi-naive code paths and only make
sense at small sizes.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .abduction import AbductionProblem
from .causality import CauseReport, CauseSet
from .diagnosis import DiagnosisProblem
from .errors import BudgetError
from .hitting import maximize_family, minimize_family, subsets_of
from .model import (
    BooleanQuery,
    ConjunctiveQuery,
    DenialConstraint,
    Fact,
    Instance,
    eval_bcq,
    ground_atom,
    satisfies_dc,
    valuations,
)
from .datalog import DatalogProgram

LATTICE_CAP = 12


def _guard(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise BudgetError(f"{what} oracle is capped at {cap} facts, got {n}", budget=cap)


def witnesses_by_enumeration(
    facts: Iterable[Fact], query: BooleanQuery, cap: int = LATTICE_CAP
) -> frozenset[frozenset[Fact]]:
    """Minimal support sets found by walking the subset lattice."""
    pool = frozenset(facts)
    _guard(len(pool), cap, "witness")
    return minimize_family(w for w in subsets_of(pool) if eval_bcq(w, query))


def causes_by_enumeration(
    instance: Instance, query: BooleanQuery, cap: int = LATTICE_CAP
) -> CauseSet:
    """Actual causes found by trying every contingency candidate."""
    _guard(len(instance.endogenous), cap, "cause")
    cache: dict[frozenset[Fact], bool] = {}
    full = instance.facts

    def holds(fs: frozenset[Fact]) -> bool:
        got = cache.get(fs)
        if got is None:
            got = eval_bcq(fs, query, instance.schemas)
            cache[fs] = got
        return got

    reports = []
    for t in sorted(instance.endogenous):
        gammas = [
            gamma
            for gamma in subsets_of(instance.endogenous - {t})
            if holds(full - gamma) and not holds(full - gamma - {t})
        ]
        if gammas:
            minimal = minimize_family(gammas)
            reports.append(
                CauseReport(
                    cause=t,
                    minimal_contingencies=minimal,
                    responsibility=Fraction(1, 1 + min(len(g) for g in minimal)),
                )
            )
    return CauseSet(frozenset(reports))


def s_repair_removals_by_enumeration(
    instance: Instance,
    constraints: Iterable[DenialConstraint],
    cap: int = LATTICE_CAP,
) -> frozenset[frozenset[Fact]]:
    """Removal sets of subset-maximal consistent sub-instances, by lattice walk."""
    facts = instance.facts
    _guard(len(facts), cap, "repair")
    constraint_list = list(constraints)
    consistent = [
        kept
        for kept in subsets_of(facts)
        if all(satisfies_dc(kept, c, instance.schemas) for c in constraint_list)
    ]
    return frozenset(facts - kept for kept in maximize_family(consistent))


def diagnoses_by_enumeration(
    problem: DiagnosisProblem, cap: int = LATTICE_CAP
) -> frozenset[frozenset[Fact]]:
    """Minimal falsifying deletion sets, by trying every endogenous subset."""
    instance = problem.instance
    _guard(len(problem.abnormal_scope), cap, "diagnosis")
    falsifying = [
        delta
        for delta in subsets_of(problem.abnormal_scope)
        if not eval_bcq(instance.facts - delta, problem.query, instance.schemas)
    ]
    return minimize_family(falsifying)


def minimal_hitting_sets_by_enumeration(
    family: Iterable[Iterable[Fact]], cap: int = 20
) -> frozenset[frozenset]:
    """Minimal hitting sets by trying every subset of the family's union."""
    sets = [frozenset(s) for s in family]
    universe = frozenset().union(*sets) if sets else frozenset()
    _guard(len(universe), cap, "hitting set")
    hitting = [h for h in subsets_of(universe) if all(h & s for s in sets)]
    return minimize_family(hitting)


def naive_datalog_model(program: DatalogProgram, facts: Iterable[Fact]) -> frozenset[Fact]:
    """Naive fixpoint: re-derive everything from the whole model each round."""
    model: set[Fact] = set(facts)
    while True:
        fresh: set[Fact] = set()
        for r in program.rules:
            body_query = ConjunctiveQuery(r.body)
            for val in valuations(model, body_query):
                head = ground_atom(r.head, val)
                if head not in model:
                    fresh.add(head)
        if not fresh:
            return frozenset(model)
        model |= fresh


def _naive_entails(program: DatalogProgram, facts: frozenset[Fact], obs: frozenset[Fact]) -> bool:
    return obs <= naive_datalog_model(program, facts)


def solutions_by_enumeration(
    problem: AbductionProblem, cap: int = 16
) -> frozenset[frozenset[Fact]]:
    """Abductive solutions by trying every subset of the abducibles."""
    _guard(len(problem.hyp), cap, "solution")
    cache: dict[frozenset[Fact], bool] = {}

    def explains(delta: frozenset[Fact]) -> bool:
        got = cache.get(delta)
        if got is None:
            got = _naive_entails(problem.program, problem.edb | delta, problem.obs)
            cache[delta] = got
        return got

    return minimize_family(d for d in subsets_of(problem.hyp) if explains(d))


def necessary_sets_by_enumeration(
    problem: AbductionProblem, cap: int = 16
) -> frozenset[frozenset[Fact]]:
    """Necessary hypothesis sets by the definition: remove the candidate
    set and check that no solution survives."""
    _guard(len(problem.hyp), cap, "necessary set")
    cache: dict[frozenset[Fact], bool] = {}

    def unexplainable(candidate: frozenset[Fact]) -> bool:
        remaining = problem.hyp - candidate
        got = cache.get(remaining)
        if got is None:
            got = not _naive_entails(problem.program, problem.edb | remaining, problem.obs)
            cache[remaining] = got
        return got

    return minimize_family(n for n in subsets_of(problem.hyp) if unexplainable(n))
