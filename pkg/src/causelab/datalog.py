"""Positive Datalog: rules, semi-naive bottom-up evaluation, ground
derivations and minimal support sets.

Rules have positive bodies only, which keeps entailment monotone; that
monotonicity is what the abduction layer exploits.  Evaluation is
semi-naive: each iteration joins the facts first derived in the previous
round against everything older, so no ground rule instance fires twice.
Derivations are recorded while evaluating and feed the minimal-support
computation, a fixpoint over antichains of base-fact sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .budget import Meter
from .hitting import minimize_family
from .model import Atom, Fact, Variable, ground_atom, match_atom

__all__ = [
    "DatalogRule",
    "DatalogProgram",
    "rule",
    "evaluate",
    "ground_derivations",
    "entails",
    "minimal_supports",
]


@dataclass(frozen=True)
class DatalogRule:
    """head :- body.  Safe: every head variable occurs in the body."""

    head: Atom
    body: tuple[Atom, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "body", tuple(self.body))
        if not self.body:
            raise ValueError(f"rule for {self.head} needs a nonempty body")
        body_vars = frozenset(v for a in self.body for v in a.variables())
        loose = self.head.variables() - body_vars
        if loose:
            names = ", ".join(sorted(v.name for v in loose))
            raise ValueError(f"unsafe rule: head variables {names} do not occur in the body")

    def __str__(self) -> str:
        return f"{self.head} :- {', '.join(str(a) for a in self.body)}."


def rule(head: Atom, *body: Atom) -> DatalogRule:
    return DatalogRule(head, tuple(body))


@dataclass(frozen=True)
class DatalogProgram:
    """A list of rules with a designated zero-ary answer predicate."""

    rules: tuple[DatalogRule, ...]
    answer_predicate: str = "ans"

    def __post_init__(self) -> None:
        object.__setattr__(self, "rules", tuple(self.rules))
        for r in self.rules:
            if r.head.relation == self.answer_predicate and r.head.terms:
                raise ValueError(
                    f"the answer predicate {self.answer_predicate!r} must be zero-ary"
                )

    def head_predicates(self) -> frozenset[str]:
        return frozenset(r.head.relation for r in self.rules)

    def answer_atom(self) -> Fact:
        return Fact(self.answer_predicate, ())

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)


def _join(
    body: tuple[Atom, ...],
    pools: list[Iterable[Fact]],
    meter: Meter,
) -> Iterator[dict[Variable, str]]:
    """Bindings mapping each body atom into the pool at its position."""

    def extend(i: int, binding: dict[Variable, str]) -> Iterator[dict[Variable, str]]:
        if i == len(body):
            yield binding
            return
        a = body[i]
        for f in pools[i]:
            if f.relation != a.relation:
                continue
            meter.charge()
            extended = match_atom(a, f, binding)
            if extended is not None:
                yield from extend(i + 1, extended)

    yield from extend(0, {})


def _seminaive(
    program: DatalogProgram, facts: Iterable[Fact], meter: Meter
) -> tuple[frozenset[Fact], dict[Fact, frozenset[frozenset[Fact]]]]:
    model: set[Fact] = set(facts)
    delta: set[Fact] = set(model)
    derivations: dict[Fact, set[frozenset[Fact]]] = {}
    while delta:
        old = model - delta
        fresh: set[Fact] = set()
        for r in program.rules:
            n = len(r.body)
            for i in range(n):
                pools: list[Iterable[Fact]] = [
                    old if j < i else (delta if j == i else model) for j in range(n)
                ]
                for binding in _join(r.body, pools, meter):
                    head = ground_atom(r.head, binding)
                    bodyset = frozenset(ground_atom(a, binding) for a in r.body)
                    derivations.setdefault(head, set()).add(bodyset)
                    if head not in model:
                        fresh.add(head)
        model |= fresh
        delta = fresh
    return frozenset(model), {h: frozenset(bs) for h, bs in derivations.items()}


def evaluate(
    program: DatalogProgram, facts: Iterable[Fact], *, budget: int | None = None
) -> frozenset[Fact]:
    """The least fixpoint of the program over the given facts: the facts
    themselves plus every derivable ground atom."""
    meter = Meter(budget, "fixpoint evaluation")
    model, _ = _seminaive(program, facts, meter)
    return model


def ground_derivations(
    program: DatalogProgram, facts: Iterable[Fact], *, budget: int | None = None
) -> tuple[frozenset[Fact], dict[Fact, frozenset[frozenset[Fact]]]]:
    """The model together with every ground rule instance that fires in it,
    keyed by derived head and valued by the set of instantiated bodies."""
    meter = Meter(budget, "fixpoint evaluation")
    return _seminaive(program, facts, meter)


def entails(program: DatalogProgram, facts: Iterable[Fact], goals: Iterable[Fact]) -> bool:
    """True iff every goal atom is in the least fixpoint."""
    return frozenset(goals) <= evaluate(program, facts)


def _combine(
    antichains: list[frozenset[frozenset[Fact]] | set[frozenset[Fact]]], meter: Meter
) -> Iterator[frozenset[Fact]]:
    """Unions of one support per factor; nothing when a factor is empty."""
    if any(not a for a in antichains):
        return

    def rec(i: int, acc: frozenset[Fact]) -> Iterator[frozenset[Fact]]:
        if i == len(antichains):
            meter.charge()
            yield acc
            return
        for s in antichains[i]:
            yield from rec(i + 1, acc | s)

    yield from rec(0, frozenset())


def _antichain_add(antichain: set[frozenset[Fact]], candidate: frozenset[Fact]) -> bool:
    """Insert keeping only subset-minimal members; True when it changed."""
    if any(member <= candidate for member in antichain):
        return False
    for member in [m for m in antichain if candidate < m]:
        antichain.remove(member)
    antichain.add(candidate)
    return True


def minimal_supports(
    program: DatalogProgram,
    facts: Iterable[Fact],
    goals: Iterable[Fact],
    *,
    budget: int | None = None,
) -> frozenset[frozenset[Fact]]:
    """All subset-minimal sets of base facts from which the program derives
    every goal atom.

    Computed over the recorded ground derivations: a base fact supports
    itself, a derived atom is supported by any union of supports of the
    atoms in one of its derivation bodies, and a fixpoint over these
    antichains handles recursion.  Empty when the goals are not entailed
    by the full fact set.
    """
    base = frozenset(facts)
    goal_set = frozenset(goals)
    meter = Meter(budget, "support enumeration")
    model, derivations = _seminaive(program, base, meter)
    if not goal_set <= model:
        return frozenset()

    supports: dict[Fact, set[frozenset[Fact]]] = {f: {frozenset({f})} for f in base}
    for head in derivations:
        supports.setdefault(head, set())

    changed = True
    while changed:
        changed = False
        for head, bodies in derivations.items():
            target = supports[head]
            for bodyset in bodies:
                factors = [supports[b] for b in sorted(bodyset)]
                for combo in _combine(factors, meter):
                    if _antichain_add(target, combo):
                        changed = True

    goal_factors = [supports.get(g, set()) for g in sorted(goal_set)]
    return minimize_family(_combine(goal_factors, meter))
