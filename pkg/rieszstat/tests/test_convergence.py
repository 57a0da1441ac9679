# test_convergence.py
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

from rieszstat.core.convergence import (
    NotFound,
    Witness,
    check_classical_statistical,
    check_order_conv,
    check_st_decreasing,
    check_st_order_conv,
    exceptional_set,
    holds_almost_everywhere,
    infimum_on,
    is_decreasing_on,
    is_order_bounded,
    pointwise_leq,
    ru_check,
    witness_search,
)
from rieszstat.core.exceptions import (
    EmptyDeltaError,
    NotDecreasingError,
    NotPositiveError,
    OutsideFieldError,
)
from rieszstat.core.lattice import RieszSpace
from rieszstat.core.measures import PeriodicDensity, PrefixBoundsDensity
from rieszstat.core.nets import Net
from rieszstat.core.set_expr import (
    FULL,
    ArithProg,
    Complement,
    FiniteList,
    PredicateSampled,
)
from rieszstat.core.tail_rules import (
    EventuallyConstant,
    HarmonicScale,
    InterleavedUnits,
    SpikeOn,
)

R = RieszSpace.rationals()
SQUARES = PredicateSampled("squares")


def q(value):
    return R.element(Fraction(value))


ZERO = q(0)
HARMONIC = Net.from_tail(R, HarmonicScale(q(1)))
SQUARE_SPIKES = Net.from_tail(R, SpikeOn(SQUARES, q(1), HarmonicScale(q(1))))
EVEN_SPIKES = Net.from_tail(R, SpikeOn(ArithProg(2, 2), q(1), EventuallyConstant(ZERO)))


class TestOrderConvergence:
    def test_harmonic_sequence(self):
        verdict = check_order_conv(HARMONIC, ZERO, HARMONIC)
        assert verdict.accepted
        assert verdict.evidence["infimum"] == "0"

    def test_dominating_net_too_small(self):
        verdict = check_order_conv(HARMONIC, ZERO, Net.constant(ZERO))
        assert verdict.clause == "domination"
        assert verdict.evidence["index"] == 1
        assert verdict.evidence["order_bounded"] is True

    def test_dominating_net_not_null(self):
        verdict = check_order_conv(HARMONIC, ZERO, Net.constant(q(1)))
        assert verdict.clause == "infimum"
        assert verdict.evidence["infimum"] == "1"

    def test_dominating_net_increasing(self):
        verdict = check_order_conv(HARMONIC, ZERO, Net.from_tail(R, HarmonicScale(q(-1))))
        assert verdict.clause == "decreasing"
        assert verdict.evidence["pair"] == [1, 2]

    def test_spikes_break_order_convergence(self):
        verdict = check_order_conv(SQUARE_SPIKES, ZERO, HARMONIC)
        assert not verdict.accepted
        assert verdict.evidence["index"] == 4


class TestStatisticalOrderConvergence:
    witness = Witness(HARMONIC, Complement(SQUARES))

    def test_spikes_on_null_set(self):
        verdict = check_st_order_conv(SQUARE_SPIKES, ZERO, self.witness, PrefixBoundsDensity())
        assert verdict.accepted
        assert verdict.evidence["measure_value"] == "μ(Δ)=1"

    def test_predicates_outside_periodic_field(self):
        with pytest.raises(OutsideFieldError):
            check_st_order_conv(SQUARE_SPIKES, ZERO, self.witness, PeriodicDensity())

    def test_rejection_reports_exceptional_set(self):
        net = Net.from_tail(R, SpikeOn(ArithProg(2, 2), q(1), HarmonicScale(q(1))))
        verdict = check_st_order_conv(net, ZERO, Witness(HARMONIC, FULL), PeriodicDensity())
        assert verdict.clause == "domination"
        assert verdict.evidence["index"] == 2
        assert verdict.evidence["exceptional_set"] == "ap(2,2)"
        assert verdict.evidence["exceptional_measure"] == "1/2 (exact)"

    def test_witness_text(self):
        assert self.witness.to_text() == "p = harmonic(1), delta = c(pred:squares)"

    def test_almost_everywhere(self):
        verdict = holds_almost_everywhere(SQUARE_SPIKES, ZERO, HARMONIC, PrefixBoundsDensity())
        assert verdict.accepted


class TestDecrease:
    def test_interleaved_net(self):
        verdict = is_decreasing_on(EVEN_SPIKES, FULL)
        assert verdict.clause == "decreasing"
        assert verdict.evidence["pair"] == [1, 2]

    def test_restriction_to_odds(self):
        assert is_decreasing_on(EVEN_SPIKES, ArithProg(1, 2)).accepted
        assert infimum_on(EVEN_SPIKES, ArithProg(1, 2)) == ZERO

    def test_infimum_of_non_decreasing_net(self):
        with pytest.raises(NotDecreasingError):
            infimum_on(EVEN_SPIKES, FULL)

    def test_finite_delta(self):
        with pytest.raises(EmptyDeltaError):
            is_decreasing_on(EVEN_SPIKES, FiniteList((1, 2)))

    def test_measure_of_delta(self):
        verdict = check_st_decreasing(EVEN_SPIKES, ZERO, ArithProg(1, 2), PeriodicDensity())
        assert verdict.clause == "measure"
        assert verdict.evidence["measure_value"] == "μ(Δ)=1/2"

    def test_harmonic_infimum(self):
        assert infimum_on(HARMONIC) == ZERO


class TestSequenceSpace:
    finsupp = RieszSpace.finsupp()
    units = Net.from_tail(finsupp, InterleavedUnits(1, 2, 1, finsupp))

    def test_exceptional_set(self):
        zero = Net.constant(self.finsupp.zero())
        assert exceptional_set(self.units, self.finsupp.zero(), zero) == ArithProg(1, 2)

    def test_unbounded(self):
        assert is_order_bounded(self.units) is False
        assert is_order_bounded(HARMONIC) is True


class TestRelativelyUniform:
    def test_harmonic(self):
        verdict = ru_check(HARMONIC, ZERO, q(1), horizon=5)
        assert verdict.accepted
        assert verdict.evidence["alpha"] == [1, 2, 3, 4, 5]

    def test_spikes(self):
        verdict = ru_check(SQUARE_SPIKES, ZERO, q(1), horizon=3)
        assert verdict.clause == "domination"
        assert verdict.evidence["n"] == 2

    def test_regulator_must_be_positive(self):
        with pytest.raises(NotPositiveError):
            ru_check(HARMONIC, ZERO, q(-1))


class TestClassicalStatistical:
    def test_spikes_on_squares(self):
        assert check_classical_statistical(SQUARE_SPIKES, ZERO).accepted

    def test_spikes_on_odds(self):
        net = Net.from_tail(R, SpikeOn(ArithProg(1, 2), q(1), HarmonicScale(q(1))))
        verdict = check_classical_statistical(net, ZERO)
        assert verdict.clause == "measure"

    def test_rationals_only(self):
        plane = RieszSpace.vector(2)
        with pytest.raises(ValueError):
            check_classical_statistical(Net.constant(plane.zero()), plane.zero())


def test_pointwise_leq():
    verdict = pointwise_leq(Net.constant(q(1)), HARMONIC)
    assert verdict.clause == "pointwise_leq"
    assert verdict.evidence["index"] == 2
    assert pointwise_leq(HARMONIC, Net.constant(q(1))).accepted


class TestWitnessSearch:
    def test_prefix_bounds(self):
        witness = witness_search(SQUARE_SPIKES, ZERO, PrefixBoundsDensity())
        assert isinstance(witness, Witness)
        assert witness.delta == Complement(SQUARES)
        assert witness.p.tail == HarmonicScale(q(1))

    def test_periodic_density(self):
        result = witness_search(SQUARE_SPIKES, ZERO, PeriodicDensity())
        assert isinstance(result, NotFound)
        assert result.to_text().startswith("NotFound")

    def test_unknown_template(self):
        with pytest.raises(ValueError):
            witness_search(HARMONIC, ZERO, PeriodicDensity(), templates=["cubic"])
