"""Datalog abduction: explaining observations from abducible facts.

A problem bundles a program, background facts (always available), a set
of hypothesis facts (the abducibles) and observed ground atoms that the
three together must entail.  A solution is a subset-minimal set of
abducibles that restores entailment of the observations over the
background alone.  Necessary hypothesis sets are the subset-minimal sets
of abducibles whose removal destroys every solution; the smallest one
containing a fact gives that fact's responsibility for the observation,
which extends cause/responsibility from conjunctive queries to
recursive Datalog queries.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, TypeAlias

from .budget import Meter
from .errors import BudgetError, DomainError
from .hitting import minimal_hitting_sets, minimize_family, subsets_of
from .model import Fact, Instance
from .datalog import DatalogProgram, entails, evaluate, minimal_supports

__all__ = [
    "AbductionProblem",
    "NecessarySet",
    "problem_for_instance",
    "abductive_solutions",
    "relevant_hypotheses",
    "necessary_sets",
    "datalog_actual_causes",
    "datalog_responsibility",
    "DATALOG_BRUTEFORCE_CAP",
]

#: A necessary hypothesis set: removing it from the abducibles leaves the
#: observations unexplainable, and it is subset-minimal with that property.
NecessarySet: TypeAlias = frozenset[Fact]

DATALOG_BRUTEFORCE_CAP = 16


@dataclass(frozen=True)
class AbductionProblem:
    """program + background + abducibles + observations.

    Rejected at construction when the observations are not entailed by
    program, background and all abducibles together, or when a rule head
    predicate occurs among the background or abducible facts.
    """

    program: DatalogProgram
    edb: frozenset[Fact]
    hyp: frozenset[Fact]
    obs: frozenset[Fact]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edb", frozenset(self.edb))
        object.__setattr__(self, "hyp", frozenset(self.hyp))
        object.__setattr__(self, "obs", frozenset(self.obs))
        heads = self.program.head_predicates()
        clashing = sorted({f.relation for f in self.edb | self.hyp} & heads)
        if clashing:
            raise ValueError(
                "rule head predicates may not occur among the facts: " + ", ".join(clashing)
            )
        if not entails(self.program, self.edb | self.hyp, self.obs):
            raise DomainError(
                "the observations are not entailed even with every hypothesis included"
            )


def problem_for_instance(
    program: DatalogProgram,
    instance: Instance,
    observations: Iterable[Fact] | None = None,
) -> AbductionProblem:
    """The canonical problem for a query program over a partitioned
    instance: exogenous facts form the background, endogenous facts are
    the abducibles, and the observation defaults to the answer atom."""
    obs = (
        frozenset(observations)
        if observations is not None
        else frozenset({program.answer_atom()})
    )
    return AbductionProblem(program, instance.exogenous, instance.endogenous, obs)


def abductive_solutions(
    problem: AbductionProblem, *, budget: int | None = None
) -> frozenset[frozenset[Fact]]:
    """All subset-minimal sets of abducibles that, with the background,
    entail the observations.

    Derived from the minimal supports of the observations over background
    plus abducibles: the background part of a support is free, so the
    solutions are the minimized abducible parts.  Observations entailed
    by the background alone yield the single empty solution.
    """
    supports = minimal_supports(
        problem.program, problem.edb | problem.hyp, problem.obs, budget=budget
    )
    return minimize_family(s - problem.edb for s in supports)


def relevant_hypotheses(
    problem: AbductionProblem, *, budget: int | None = None
) -> frozenset[Fact]:
    """The abducibles occurring in at least one solution."""
    out: frozenset[Fact] = frozenset()
    for solution in abductive_solutions(problem, budget=budget):
        out |= solution
    return out


def necessary_sets(
    problem: AbductionProblem, *, budget: int | None = None
) -> frozenset[NecessarySet]:
    """All subset-minimal sets of abducibles whose removal leaves no
    solution.

    By monotonicity of entailment these are exactly the minimal hitting
    sets of the solution family; the cross-check harness validates this
    against the definition-level search.  Empty when the background alone
    entails the observations, since then nothing can be made necessary.
    """
    return minimal_hitting_sets(abductive_solutions(problem, budget=budget), budget=budget)


def datalog_actual_causes(
    program: DatalogProgram,
    instance: Instance,
    *,
    engine: str = "hitting",
    budget: int | None = None,
    bruteforce_cap: int = DATALOG_BRUTEFORCE_CAP,
) -> frozenset[Fact]:
    """Actual causes for the answer atom, by the contingency definition
    generalized to Datalog entailment.

    Empty when the program does not derive the answer from the full
    instance.  The default engine reduces to minimal hitting sets of the
    endogenous parts of the answer's minimal supports; the brute-force
    engine searches contingency sets directly.  Agrees with the relevant
    hypotheses of the matching abduction problem.
    """
    goal = program.answer_atom()
    facts = instance.facts
    if not entails(program, facts, {goal}):
        return frozenset()
    if engine == "hitting":
        supports = minimal_supports(program, facts, {goal}, budget=budget)
        family = {s & instance.endogenous for s in supports}
        hitting = minimal_hitting_sets(family, budget=budget)
        return frozenset().union(*hitting) if hitting else frozenset()
    if engine == "bruteforce":
        endo = instance.endogenous
        if len(endo) > bruteforce_cap:
            raise BudgetError(
                f"brute-force engine is capped at {bruteforce_cap} endogenous facts, got {len(endo)}",
                budget=bruteforce_cap,
            )
        meter = Meter(budget, "contingency enumeration")
        cache: dict[frozenset[Fact], bool] = {}

        def derives(fs: frozenset[Fact]) -> bool:
            got = cache.get(fs)
            if got is None:
                got = goal in evaluate(program, fs)
                cache[fs] = got
            return got

        causes = set()
        for t in sorted(endo):
            for gamma in subsets_of(endo - {t}):
                meter.charge()
                if derives(facts - gamma) and not derives(facts - gamma - {t}):
                    causes.add(t)
                    break
        return frozenset(causes)
    raise ValueError(f"unknown engine {engine!r}")


def datalog_responsibility(
    program: DatalogProgram,
    instance: Instance,
    t: Fact,
    *,
    budget: int | None = None,
) -> Fraction:
    """1/|N| for the smallest necessary hypothesis set N containing ``t``
    in the instance's canonical abduction problem; 0 when ``t`` is in no
    necessary set or the answer is not derived at all."""
    if t not in instance.endogenous:
        raise DomainError(f"{t} is not an endogenous fact of the instance")
    if not entails(program, instance.facts, {program.answer_atom()}):
        return Fraction(0)
    problem = problem_for_instance(program, instance)
    sizes = [len(n) for n in necessary_sets(problem, budget=budget) if t in n]
    if not sizes:
        return Fraction(0)
    return Fraction(1, min(sizes))
