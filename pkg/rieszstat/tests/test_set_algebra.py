# test_set_algebra.py
# meant to be run with 'pytest'
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
############################################################################

from fractions import Fraction

import pytest

from hypothesis import given
from hypothesis import strategies as st

import rieszstat.core.predicates as predicates

from rieszstat.core.exceptions import NotPeriodicError
from rieszstat.core.periodic import EventuallyPeriodic, normalize, normalize_atoms
from rieszstat.core.set_algebra import (
    count_upto,
    equivalent,
    finite_members,
    first_member,
    is_empty,
    is_finite,
    members_list,
    simplify,
)
from rieszstat.core.set_expr import (
    EMPTY,
    FULL,
    ArithProg,
    CoListed,
    Complement,
    FiniteList,
    Intersection,
    Listed,
    PredicateSampled,
    Union,
)

SQUARES = PredicateSampled("squares")

periodic_sets = st.recursive(
    st.one_of(
        st.builds(ArithProg, st.integers(1, 6), st.integers(1, 6)),
        st.builds(
            lambda items: FiniteList(tuple(items)),
            st.lists(st.integers(1, 30), max_size=4),
        ),
    ),
    lambda children: st.one_of(
        st.builds(Union, children, children),
        st.builds(Intersection, children, children),
        st.builds(Complement, children),
    ),
    max_leaves=4,
)


class TestNormalForms:
    def test_progression(self):
        assert normalize(ArithProg(2, 2)) == EventuallyPeriodic(2, (0,))
        late_odds = normalize(ArithProg(5, 2))
        assert late_odds.minus == (1, 3)
        assert late_odds.count(10) == 3

    def test_union_collapses_period(self):
        form = normalize(Union(ArithProg(1, 2), ArithProg(2, 2)))
        assert form.period == 1
        assert equivalent(Union(ArithProg(1, 2), ArithProg(2, 2)), FULL)

    def test_simplify_reduces_period(self):
        assert simplify(Union(ArithProg(2, 4), ArithProg(4, 4))) == ArithProg(2, 2)

    def test_complement_density(self):
        assert normalize(Complement(ArithProg(1, 3))).density() == Fraction(2, 3)

    def test_predicates_are_not_periodic(self):
        with pytest.raises(NotPeriodicError):
            normalize(SQUARES)

    @given(periodic_sets)
    def test_count_agrees_with_membership(self, s):
        form = normalize(s)
        for k in (1, 7, 30, 61):
            assert form.count(k) == sum(1 for n in range(1, k + 1) if s.contains(n))

    @given(periodic_sets)
    def test_canonical_expression_has_same_members(self, s):
        canonical = normalize(s).to_set_expr()
        assert all(canonical.contains(n) == s.contains(n) for n in range(1, 80))

    @given(periodic_sets, periodic_sets)
    def test_density_is_additive(self, s, t):
        whole = normalize(s).density()
        split = normalize(Intersection(s, t)).density() + normalize(
            Intersection(s, Complement(t))
        ).density()
        assert whole == split


class TestAtoms:
    def test_union_with_cocountable(self):
        form = normalize_atoms(Union(Listed(("a", "b")), CoListed(("b",))))
        assert form.cofinite and not form.atoms

    def test_complement(self):
        assert equivalent(Complement(Listed(("a",))), CoListed(("a",)))
        assert normalize_atoms(Intersection(Listed(("a",)), CoListed(("a",)))).is_empty()


class TestDecisions:
    def test_emptiness(self):
        assert is_empty(Intersection(ArithProg(1, 2), ArithProg(2, 2))) is True
        assert is_empty(Intersection(SQUARES, ArithProg(2, 2))) is False

    def test_undecided_emptiness(self):
        # no square is 3 mod 4, which the finite probe cannot certify
        assert is_empty(Intersection(SQUARES, ArithProg(3, 4))) is None

    def test_finiteness(self):
        assert is_finite(FiniteList((1, 2))) is True
        assert is_finite(ArithProg(1, 5)) is False
        assert is_finite(SQUARES) is False
        assert is_finite(Intersection(SQUARES, FiniteList((4, 9, 10)))) is True
        assert is_finite(Complement(SQUARES)) is False

    def test_finite_members(self):
        assert finite_members(Intersection(SQUARES, FiniteList((4, 9, 10)))) == [4, 9]
        assert finite_members(ArithProg(1, 2)) is None

    def test_counts(self):
        assert count_upto(SQUARES, 100) == 10
        assert count_upto(Intersection(SQUARES, ArithProg(2, 2)), 100) == 5
        assert count_upto(Complement(PredicateSampled("primes")), 100) == 75
        assert count_upto(Union(SQUARES, ArithProg(2, 2)), 10) == 7

    def test_members(self):
        assert members_list(SQUARES, 30) == [1, 4, 9, 16, 25]
        assert first_member(ArithProg(3, 5), 9) == 13
        assert first_member(EMPTY, 1, cap=100) is None


class TestPredicates:
    @pytest.mark.parametrize("name", predicates.registered_names())
    def test_counter_matches_membership(self, name):
        predicate = predicates.get_predicate(name)
        for k in (1, 2, 15, 64, 200):
            assert predicate.count(k) == sum(1 for n in range(1, k + 1) if predicate.member(n))

    def test_known_counts(self):
        assert predicates.get_predicate("primes").count(100) == 25
        assert predicates.get_predicate("powers_of_two").count(100) == 7
        assert predicates.get_predicate("cubes").count(1000) == 10
        assert predicates.get_predicate("log_blocks").count(7) == 3

    def test_enumeration(self):
        squares = predicates.get_predicate("squares").members_from(10)
        assert [next(squares) for _ in range(3)] == [16, 25, 36]
        powers = predicates.get_predicate("powers_of_two").members_from(5)
        assert next(powers) == 8

    def test_unknown_predicate(self):
        with pytest.raises(KeyError):
            PredicateSampled("nope")

    def test_register(self, monkeypatch):
        monkeypatch.setattr(predicates, "PREDICATES", dict(predicates.PREDICATES))
        predicates.register(predicates.NamedPredicate("sevens", lambda n: n % 7 == 0))
        assert "sevens" in predicates.registered_names()
        assert count_upto(PredicateSampled("sevens"), 50) == 7

    def test_replacing_predicate_drops_cached_results(self, monkeypatch):
        monkeypatch.setattr(predicates, "PREDICATES", dict(predicates.PREDICATES))
        predicates.register(predicates.NamedPredicate("marked", lambda n: n % 5 == 0))
        assert count_upto(PredicateSampled("marked"), 50) == 10
        assert is_empty(PredicateSampled("marked")) is False
        predicates.register(predicates.NamedPredicate("marked", lambda n: False))
        assert count_upto(PredicateSampled("marked"), 50) == 0
        predicates.register(predicates.NamedPredicate("marked", lambda n: n % 10 == 0))
        assert count_upto(PredicateSampled("marked"), 50) == 5
