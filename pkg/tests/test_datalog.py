from __future__ import annotations

import pytest

from causelab import (
    DatalogProgram,
    DatalogRule,
    entails,
    evaluate,
    fact,
    ground_derivations,
    minimal_supports,
    rule,
)
from causelab.model import Atom, Variable, atom
from causelab.oracles import naive_datalog_model

EAB = fact("E", "a", "b")
EBC = fact("E", "b", "c")


def test_rules_must_have_a_body():
    with pytest.raises(ValueError):
        DatalogRule(atom("T", "X"), ())


def test_rules_must_be_safe():
    with pytest.raises(ValueError) as err:
        rule(atom("T", "X", "W"), atom("E", "X", "Y"))
    assert "unsafe" in str(err.value)


def test_answer_predicate_must_be_zero_ary():
    bad = rule(atom("ans", "X"), atom("E", "X", "Y"))
    with pytest.raises(ValueError):
        DatalogProgram((bad,))


def test_rule_rendering():
    r = rule(atom("T", "X", "Y"), atom("E", "X", "Z"), atom("T", "Z", "Y"))
    assert str(r) == "T(X, Y) :- E(X, Z), T(Z, Y)."


def test_closure_fixture_fixpoint(t0, t0_prog):
    model = evaluate(t0_prog, t0.facts)
    assert model - t0.facts == frozenset(
        {fact("T", "a", "b"), fact("T", "b", "c"), fact("T", "a", "c"), fact("ans")}
    )


def test_empty_facts_derive_nothing(t0_prog):
    assert evaluate(t0_prog, frozenset()) == frozenset()


def test_single_rule_program_on_demo(d0, prog0):
    model = evaluate(prog0, d0.facts)
    assert model - d0.facts == frozenset({fact("ans")})


def test_entails(t0, t0_prog):
    assert entails(t0_prog, t0.facts, {fact("ans")})
    assert not entails(t0_prog, {EAB}, {fact("ans")})


def test_seminaive_matches_naive_on_cyclic_graph(t0_prog):
    edges = frozenset(
        {EAB, EBC, fact("E", "c", "a"), fact("E", "c", "c"), fact("E", "b", "a")}
    )
    assert evaluate(t0_prog, edges) == naive_datalog_model(t0_prog, edges)


def test_entailment_is_monotone(t0_prog):
    small = frozenset({EAB})
    big = frozenset({EAB, EBC})
    assert evaluate(t0_prog, small) <= evaluate(t0_prog, big)


def test_ground_derivations_cover_every_firing(t0, t0_prog):
    model, derivations = ground_derivations(t0_prog, t0.facts)
    assert derivations[fact("T", "a", "b")] == frozenset({frozenset({EAB})})
    assert derivations[fact("T", "a", "c")] == frozenset(
        {frozenset({EAB, fact("T", "b", "c")})}
    )
    assert derivations[fact("ans")] == frozenset({frozenset({fact("T", "a", "c")})})
    assert set(derivations) == model - t0.facts


def test_minimal_supports_of_closure_answer(t0, t0_prog):
    assert minimal_supports(t0_prog, t0.facts, {fact("ans")}) == frozenset(
        {frozenset({EAB, EBC})}
    )


def test_minimal_supports_with_alternative_paths(t0_prog):
    # two ways from a to c: the direct edge and the two-step path
    edges = frozenset({EAB, EBC, fact("E", "a", "c")})
    direct = frozenset({fact("E", "a", "c")})
    two_step = frozenset({EAB, EBC})
    assert minimal_supports(t0_prog, edges, {fact("ans")}) == frozenset(
        {direct, two_step}
    )


def test_minimal_supports_of_unentailed_goal(t0_prog):
    assert minimal_supports(t0_prog, {EAB}, {fact("ans")}) == frozenset()


def test_minimal_supports_of_base_fact(t0_prog):
    assert minimal_supports(t0_prog, {EAB, EBC}, {EAB}) == frozenset(
        {frozenset({EAB})}
    )


def test_conjunctive_goals_combine_supports(t0_prog):
    got = minimal_supports(t0_prog, {EAB, EBC}, {fact("T", "a", "b"), fact("T", "b", "c")})
    assert got == frozenset({frozenset({EAB, EBC})})


def test_self_join_rule():
    program = DatalogProgram(
        (rule(Atom("ans", ()), atom("E", "X", "Y"), atom("E", "Y", "X")),)
    )
    assert fact("ans") not in evaluate(program, {EAB})
    assert fact("ans") in evaluate(program, {EAB, fact("E", "b", "a")})
    loop = fact("E", "c", "c")
    assert fact("ans") in evaluate(program, {loop})
    assert minimal_supports(program, {loop, EAB, fact("E", "b", "a")}, {fact("ans")}) == frozenset(
        {frozenset({loop}), frozenset({EAB, fact("E", "b", "a")})}
    )


def test_constants_in_rule_bodies():
    x = Variable("X")
    program = DatalogProgram((DatalogRule(Atom("ans", ()), (Atom("E", ("a", x)),)),))
    assert fact("ans") in evaluate(program, {EAB})
    assert fact("ans") not in evaluate(program, {EBC})
