# test_closed_forms.py
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

import rieszstat.settings as settings

from rieszstat.core.closed_forms import (
    ClosedForm,
    ScalarForm,
    UnitSweep,
    absolute_form,
    basis_limit,
    decreasing,
    decreasing_from,
    harmonic_envelope_factor,
    nonnegative,
    nonnegative_from,
    pick_extreme,
)
from rieszstat.core.lattice import RieszSpace, absolute, leq
from rieszstat.core.set_expr import ArithProg

HALF = Fraction(1, 2)
R = RieszSpace.rationals()


def scalar(value):
    return R.element(Fraction(value))


class TestScalarDecisions:
    def test_basis_limits(self):
        assert basis_limit(None) == 0
        assert basis_limit(HALF) == 0

    def test_envelope_factor(self):
        assert harmonic_envelope_factor(HALF) == HALF
        r = Fraction(9, 10)
        factor = harmonic_envelope_factor(r)
        assert all(r**n <= factor / n for n in range(1, 60))

    def test_nonnegative_threshold(self):
        decision = nonnegative_from(ScalarForm(Fraction(1), Fraction(-3)))
        assert (decision.holds, decision.threshold) == (True, 4)

    def test_eventually_negative(self):
        decision = nonnegative_from(ScalarForm(Fraction(-1), Fraction(5)))
        assert (decision.holds, decision.threshold) == (False, 6)

    def test_zero_form(self):
        assert nonnegative_from(ScalarForm(), start=3).threshold == 3

    def test_decreasing(self):
        assert decreasing_from(ScalarForm(harmonic=Fraction(1))).holds is True
        assert decreasing_from(ScalarForm(harmonic=Fraction(-1))).holds is False
        mixed = ScalarForm(harmonic=Fraction(1), geometric=((HALF, Fraction(-1)),))
        decision = decreasing_from(mixed)
        assert decision.holds is True
        assert all(
            mixed.value(n) >= mixed.value(n + 1) for n in range(decision.threshold, 40)
        )

    def test_search_cap_leaves_decision_open(self, monkeypatch):
        monkeypatch.setattr(settings, "MAX_THRESHOLD_SEARCH", 0)
        form = ScalarForm(harmonic=Fraction(1), geometric=((HALF, Fraction(-100)),))
        assert nonnegative_from(form).holds is None


class TestClosedForm:
    def test_ratio_range(self):
        with pytest.raises(ValueError):
            ClosedForm.geometric_form(scalar(1), Fraction(3, 2))
        with pytest.raises(ValueError):
            ClosedForm.geometric_form(scalar(1), Fraction(1))

    def test_equal_ratios_merge(self):
        form = ClosedForm(
            scalar(0), scalar(0), ((HALF, scalar(1)), (HALF, scalar(2)), (Fraction(3, 4), scalar(1)))
        )
        assert form.geometric == ((Fraction(3, 4), scalar(1)), (HALF, scalar(3)))

    def test_cancelling_terms_vanish(self):
        form = ClosedForm.geometric_form(scalar(1), HALF) + ClosedForm.geometric_form(
            scalar(-1), HALF
        )
        assert form.is_zero

    def test_value_and_limit(self):
        form = ClosedForm(scalar(3), scalar(2), ((HALF, scalar(4)),))
        assert form.value(2) == scalar(5)
        assert form.limit() == scalar(3)

    def test_dilate(self):
        form = ClosedForm(scalar(1), scalar(2), ((HALF, scalar(-1)),))
        dilated = form.dilate(3)
        assert all(dilated.value(n) == form.value(3 * n) for n in range(1, 12))

    def test_envelope(self):
        form = ClosedForm(scalar(1), scalar(2), ((HALF, scalar(-1)),))
        envelope = form.envelope()
        assert envelope == scalar(Fraction(5, 2))
        for n in range(1, 30):
            assert leq(absolute(form.value(n) - form.constant), envelope.scale(Fraction(1, n)))

    def test_text(self):
        assert ClosedForm.harmonic_form(scalar(1)).to_text() == "const(0) + harmonic(1)"
        assert ClosedForm.geometric_form(scalar(1), HALF).to_text() == "const(0) + geometric(1, 1/2)"


class TestFormDecisions:
    def test_pick_extreme(self):
        picked, threshold = pick_extreme(
            ClosedForm.harmonic_form(scalar(1)), ClosedForm.constant_form(scalar(HALF / 2))
        )
        assert picked == ClosedForm.constant_form(scalar(HALF / 2))
        assert threshold == 5

    def test_pick_extreme_coordinatewise(self):
        plane = RieszSpace.vector(2)
        left = ClosedForm.harmonic_form(plane.element([1, -1]))
        right = ClosedForm.zero(plane)
        picked, _ = pick_extreme(left, right)
        assert picked == ClosedForm.harmonic_form(plane.element([1, 0]))

    def test_absolute_form(self):
        form, threshold = absolute_form(ClosedForm.harmonic_form(scalar(-1)))
        assert form == ClosedForm.harmonic_form(scalar(1))
        assert threshold == 1

    def test_vector_decisions(self):
        plane = RieszSpace.vector(2)
        form = ClosedForm(plane.element([1, 0]), plane.element([-3, 1]))
        decision = nonnegative(form)
        assert (decision.holds, decision.threshold) == (True, 4)
        assert decreasing(form).holds is False


class TestUnitSweep:
    sweep = UnitSweep(1, 2, 1)

    def test_positions(self):
        assert self.sweep.unit_index(3) == 2
        assert self.sweep.unit_index(2) is None
        assert self.sweep.position_of(3) == 5
        assert self.sweep.support_set() == ArithProg(1, 2)

    def test_values(self):
        finsupp = RieszSpace.finsupp()
        assert self.sweep.value(3, finsupp) == finsupp.unit(2)
        assert self.sweep.value(4, finsupp).is_zero
        assert self.sweep.mapped(lambda c: -c).value(1, finsupp) == finsupp.unit(1).scale(-1)

    def test_text(self):
        assert self.sweep.to_text() == "units(1,2,1)"

    def test_invalid(self):
        with pytest.raises(ValueError):
            UnitSweep(0, 1, 1)
