from __future__ import annotations

from fractions import Fraction

import pytest

from causelab import (
    BudgetError,
    CauseReport,
    CauseSet,
    DomainError,
    Instance,
    actual_causes,
    dc_to_view,
    fact,
    is_counterfactual_cause,
    minimal_contingency_sets,
    most_responsible_causes,
    responsibility,
)
from causelab.checks import closure_instance, demo_instance
from causelab.model import ConjunctiveQuery, atom
from causelab.oracles import causes_by_enumeration

R21 = fact("R", "a2", "a1")
R33 = fact("R", "a3", "a3")
R14 = fact("R", "a1", "a4")
S1 = fact("S", "a1")
S2 = fact("S", "a2")
S3 = fact("S", "a3")

RS_SCHEMAS = demo_instance().schemas


def rs_instance(*endogenous) -> Instance:
    """An all-endogenous instance with the R/2 and S/1 schemas declared."""
    return Instance(RS_SCHEMAS, frozenset(endogenous))


@pytest.fixture
def v0(k0):
    return dc_to_view(k0)


def test_counterfactual_cause_needs_single_witness(d0, q0):
    # the other witness survives the removal
    assert not is_counterfactual_cause(d0, q0, R21)


def test_counterfactual_cause_single_witness(q0):
    inst = Instance.infer(endogenous=[fact("R", "a", "b"), fact("S", "b")])
    assert is_counterfactual_cause(inst, q0, fact("R", "a", "b"))


def test_non_witness_tuple_is_not_counterfactual(d0, q0):
    assert not is_counterfactual_cause(d0, q0, S2)


def test_counterfactual_rejects_exogenous(q0):
    inst = Instance.infer(endogenous=[fact("S", "b")], exogenous=[fact("R", "a", "b")])
    with pytest.raises(DomainError):
        is_counterfactual_cause(inst, q0, fact("R", "a", "b"))
    with pytest.raises(DomainError):
        is_counterfactual_cause(inst, q0, fact("S", "zzz"))


def test_actual_causes_on_demo_instance(d0, q0):
    causes = actual_causes(d0, q0)
    assert frozenset(causes.causes()) == frozenset({R21, R33, S1, S3})
    assert all(r.responsibility == Fraction(1, 2) for r in causes.reports)


def test_all_exogenous_instance_has_no_causes(d0, q0):
    inst = Instance(d0.schemas, frozenset(), d0.facts)
    assert not actual_causes(inst, q0)


def test_single_witness_chain_query():
    # both edge facts are counterfactual causes for the two-step pattern
    inst = closure_instance()
    q = ConjunctiveQuery((atom("E", "X", "Y"), atom("E", "Y", "Z")))
    causes = actual_causes(inst, q)
    assert frozenset(causes.causes()) == inst.endogenous
    assert all(r.responsibility == Fraction(1) for r in causes.reports)


def test_minimal_contingency_sets_on_demo(d0, v0):
    assert minimal_contingency_sets(d0, v0, R21) == frozenset(
        {frozenset({R33}), frozenset({S3})}
    )
    assert minimal_contingency_sets(d0, v0, S2) == frozenset()


def test_counterfactual_cause_has_empty_contingency(v0):
    inst = Instance.infer(endogenous=[fact("R", "a", "b"), fact("S", "b")])
    assert minimal_contingency_sets(inst, v0, fact("R", "a", "b")) == frozenset(
        {frozenset()}
    )


def test_responsibility_values(d0, q0):
    assert responsibility(d0, q0, S1) == Fraction(1, 2)
    assert responsibility(d0, q0, R14) == Fraction(0)
    inst = Instance.infer(endogenous=[fact("R", "a", "b"), fact("S", "b")])
    assert responsibility(inst, q0, fact("S", "b")) == Fraction(1)


def test_responsibility_rejects_non_endogenous(d0, q0):
    with pytest.raises(DomainError):
        responsibility(d0, q0, fact("S", "a9"))


def test_most_responsible_on_demo(d0, v0):
    assert most_responsible_causes(d0, v0) == frozenset({R21, R33, S1, S3})


def test_most_responsible_on_consistent_instance(v0):
    inst = rs_instance(fact("R", "a", "b"))
    assert most_responsible_causes(inst, v0) == frozenset()


def test_most_responsible_prefers_unique_witness(v0):
    inst = Instance.infer(
        endogenous=[fact("R", "a", "b"), fact("S", "b"), fact("R", "c", "d")]
    )
    assert most_responsible_causes(inst, v0) == frozenset(
        {fact("R", "a", "b"), fact("S", "b")}
    )


def test_engines_agree_on_demo(d0, q0):
    assert actual_causes(d0, q0) == actual_causes(d0, q0, engine="bruteforce")


def test_bruteforce_engine_matches_oracle(d0, q0):
    assert actual_causes(d0, q0, engine="bruteforce") == causes_by_enumeration(d0, q0)


def test_bruteforce_cap(d0, q0):
    with pytest.raises(BudgetError):
        actual_causes(d0, q0, engine="bruteforce", bruteforce_cap=3)


def test_unknown_engine_rejected(d0, q0):
    with pytest.raises(ValueError):
        actual_causes(d0, q0, engine="magic")


def test_monotonicity_when_endogenous_tuple_is_added(d0, q0):
    before = frozenset(actual_causes(d0, q0).causes())
    grown = d0.with_endogenous(fact("S", "a4"))
    after = frozenset(actual_causes(grown, q0).causes())
    assert before <= after


def test_antimonotonicity_when_exogenous_tuple_is_added(q0):
    inst = Instance.infer(endogenous=[fact("R", "a", "b"), fact("S", "b")])
    before = frozenset(actual_causes(inst, q0).causes())
    grown = inst.with_exogenous(fact("R", "z", "b"))
    after = frozenset(actual_causes(grown, q0).causes())
    assert after <= before
    # R(a,b) is lost: the exogenous witness keeps the query true without it,
    # while S(b) stays counterfactual because it appears in every witness
    assert after == frozenset({fact("S", "b")})


def test_cause_report_validates_responsibility():
    with pytest.raises(ValueError):
        CauseReport(S1, frozenset({frozenset()}), Fraction(1, 2))
    with pytest.raises(ValueError):
        CauseReport(S1, frozenset(), Fraction(1))


def test_cause_set_rejects_duplicate_tuples():
    a = CauseReport(S1, frozenset({frozenset()}), Fraction(1))
    b = CauseReport(S1, frozenset({frozenset({S3})}), Fraction(1, 2))
    with pytest.raises(ValueError):
        CauseSet(frozenset({a, b}))


def test_cause_set_lookup_helpers(d0, q0):
    causes = actual_causes(d0, q0)
    assert S1 in causes
    assert R14 not in causes
    assert causes.responsibility(R14) == Fraction(0)
    assert causes.report_for(S1).minimal_contingencies == frozenset(
        {frozenset({R33}), frozenset({S3})}
    )
    assert [r.cause for r in causes] == sorted(causes.causes())
