# test_density.py
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

from rieszstat.core.density import (
    Bounds,
    Exact,
    density,
    density_profile,
    evaluation_points,
    is_exactly,
    prefix_density,
)
from rieszstat.core.set_expr import (
    ArithProg,
    FiniteList,
    Listed,
    PredicateSampled,
    Union,
)
from rieszstat.core.verdicts import Undetermined

SQUARES = PredicateSampled("squares")


class TestExactDensity:
    def test_evens(self):
        value = density(ArithProg(2, 2))
        assert value == Exact(Fraction(1, 2))
        assert value.to_text() == "1/2 (exact)"

    def test_finite_set(self):
        assert density(FiniteList((1, 2, 3))).to_text() == "0 (exact)"

    def test_finite_exceptions_are_ignored(self):
        assert is_exactly(density(Union(ArithProg(1, 3), FiniteList((2,)))), Fraction(1, 3))

    def test_value_range(self):
        with pytest.raises(ValueError):
            Exact(Fraction(3, 2))


class TestPrefixBounds:
    def test_prefix_density(self):
        assert prefix_density(ArithProg(2, 2), 7) == Fraction(3, 7)
        with pytest.raises(ValueError):
            prefix_density(ArithProg(2, 2), 0)

    def test_evaluation_points(self):
        assert evaluation_points(100, [10, 50, 200]) == [10, 50, 100]
        assert evaluation_points(schedule=[4, 16]) == [4, 16]

    def test_squares_on_short_schedule(self):
        value = density(SQUARES, horizon=100, schedule=[25, 100])
        assert value == Bounds(Fraction(1, 15), Fraction(1, 10), 100)
        assert value.to_text() == "[1/15, 1/10] (bounds, horizon 100)"

    def test_squares_on_default_schedule(self):
        value = density(SQUARES)
        assert isinstance(value, Bounds)
        assert 0 < value.lo <= value.hi < Fraction(1, 500)

    def test_profile_is_monotone(self):
        profile = density_profile(PredicateSampled("log_blocks"), 4096, [16, 64, 256, 1024])
        lows = [lo for _, lo, _ in profile]
        highs = [hi for _, _, hi in profile]
        assert lows == sorted(lows)
        assert highs == sorted(highs, reverse=True)

    def test_single_point_is_undetermined(self):
        assert isinstance(density(SQUARES, horizon=10, schedule=[100]), Undetermined)

    def test_invalid_bounds(self):
        with pytest.raises(ValueError):
            Bounds(Fraction(1, 2), Fraction(1, 4), 10)
        assert Bounds(Fraction(1, 3), Fraction(1, 3), 8).collapsed


def test_atoms_have_no_density():
    with pytest.raises(ValueError):
        density(Listed(("a",)))
