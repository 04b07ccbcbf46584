from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from causelab.errors import BudgetError
from causelab.hitting import (
    maximize_family,
    minimal_hitting_sets,
    minimize_family,
    subsets_of,
)


def fsets(*groups):
    return frozenset(frozenset(g) for g in groups)


def test_minimize_drops_supersets():
    assert minimize_family([{1, 2}, {1}, {2, 3}]) == fsets({1}, {2, 3})


def test_maximize_drops_subsets():
    assert maximize_family([{1, 2}, {1}, {2, 3}]) == fsets({1, 2}, {2, 3})


def test_subsets_are_size_ordered():
    got = list(subsets_of([2, 1]))
    assert got == [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]


def test_hitting_empty_family_is_empty_set():
    assert minimal_hitting_sets([]) == fsets(())


def test_hitting_with_empty_member_is_impossible():
    assert minimal_hitting_sets([{1}, set()]) == frozenset()


def test_hitting_basic():
    assert minimal_hitting_sets([{1, 2}, {1, 3}]) == fsets({1}, {2, 3})


def test_hitting_disjoint_sets():
    assert minimal_hitting_sets([{1}, {2}]) == fsets({1, 2})


def test_hitting_budget_is_enforced():
    family = [{i, i + 10} for i in range(8)]
    with pytest.raises(BudgetError):
        minimal_hitting_sets(family, budget=5)


def _oracle(family):
    sets = [frozenset(s) for s in family]
    universe = frozenset().union(*sets) if sets else frozenset()
    return minimize_family(
        h for h in subsets_of(universe) if all(h & s for s in sets)
    )


@given(
    st.lists(
        st.sets(st.integers(0, 6), min_size=0, max_size=4),
        max_size=6,
    )
)
def test_hitting_matches_lattice_enumeration(family):
    assert minimal_hitting_sets(family) == _oracle(family)


@given(
    st.lists(
        st.sets(st.integers(0, 6), min_size=1, max_size=4),
        min_size=1,
        max_size=6,
    )
)
def test_hitting_sets_hit_and_are_minimal(family):
    sets = [frozenset(s) for s in family]
    for h in minimal_hitting_sets(sets):
        assert all(h & s for s in sets)
        for e in h:
            assert not all((h - {e}) & s for s in sets)
