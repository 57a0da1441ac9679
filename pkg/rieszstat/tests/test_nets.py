# test_nets.py
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

from rieszstat.core.closed_forms import ClosedForm
from rieszstat.core.exceptions import NotCofinalError, SpaceMismatchError
from rieszstat.core.index_sets import DirectedIndex
from rieszstat.core.lattice import RieszSpace, absolute
from rieszstat.core.nets import (
    SELECTORS,
    InclusionSelector,
    MapSelector,
    Net,
    combine,
    mask,
    subnet,
)
from rieszstat.core.set_expr import FULL, ArithProg, FiniteList, PredicateSampled
from rieszstat.core.tail_rules import (
    ComputedTail,
    EventuallyConstant,
    GeometricScale,
    HarmonicScale,
    InterleavedUnits,
    Masked,
    SpikeOn,
    Switch,
    is_dilation_set,
    linear_tail,
    spike_sets,
    tail_from_pieces,
)

R = RieszSpace.rationals()
SQUARES = PredicateSampled("squares")


def q(value):
    return R.element(Fraction(value))


def harmonic_net(scale=1, prefix=None):
    return Net(R, HarmonicScale(q(scale)), prefix)


class TestTailRules:
    def test_closed_tail_text(self):
        assert EventuallyConstant(q(0)).to_text() == "const(0)"
        assert linear_tail(EventuallyConstant(q(1)), HarmonicScale(q(2))).to_text() == (
            "sum(const(1), harmonic(2))"
        )
        assert GeometricScale(q(1), Fraction(1, 2)).to_text() == "geometric(1, 1/2)"

    def test_switch_text(self):
        spike = SpikeOn(ArithProg(2, 2), q(1), EventuallyConstant(q(0)))
        assert spike.to_text() == "spike(ap(2,2),1,const(0))"
        assert Masked(ArithProg(2, 2), HarmonicScale(q(1)), R).to_text() == (
            "masked(ap(2,2),harmonic(1))"
        )

    def test_spike_pieces_partition(self):
        spike = SpikeOn(ArithProg(2, 2), q(1), EventuallyConstant(q(0)))
        cells = spike.pieces()
        assert len(cells) == 2
        for n in range(1, 20):
            owners = [piece for cell, piece in cells if cell.contains(n)]
            assert len(owners) == 1
            assert owners[0].value(n) == spike.value(n, R)

    def test_pieces_of_computed_tails(self):
        computed = ComputedTail(lambda n: q(n), "identity")
        assert computed.pieces() is None
        assert Switch(ArithProg(1, 2), computed, EventuallyConstant(q(0))).pieces() is None

    def test_units_need_sequence_space(self):
        with pytest.raises(ValueError):
            InterleavedUnits(1, 2, 1, R)

    def test_unit_pieces(self):
        finsupp = RieszSpace.finsupp()
        units = InterleavedUnits(1, 2, 1, finsupp)
        cells = units.pieces()
        assert [cell for cell, _ in cells] == [ArithProg(1, 2), ArithProg(2, 2)]
        assert units.value(5, finsupp) == finsupp.unit(3)

    def test_spike_sets(self):
        tail = SpikeOn(SQUARES, q(1), Masked(ArithProg(2, 2), HarmonicScale(q(1)), R))
        assert spike_sets(tail) == [SQUARES, ArithProg(2, 2)]
        units = InterleavedUnits(1, 2, 1, RieszSpace.finsupp())
        assert spike_sets(units) == [ArithProg(1, 2)]

    def test_dilation_sets(self):
        assert is_dilation_set(ArithProg(3, 3)) == 3
        assert is_dilation_set(ArithProg(1, 3)) is None
        assert is_dilation_set(SQUARES) is None

    def test_equal_pieces_are_merged(self):
        f = ClosedForm.constant_form(q(1))
        g = ClosedForm.constant_form(q(2))
        tail = tail_from_pieces(
            [(ArithProg(1, 4), f), (ArithProg(2, 4), g), (ArithProg(3, 4), f)], R
        )
        assert isinstance(tail, Switch)
        assert [tail.value(n, R) for n in (1, 2, 3)] == [q(1), q(2), q(1)]


class TestNet:
    def test_prefix_then_tail(self):
        net = Net(R, EventuallyConstant(q(0)), {1: q(5)})
        assert net.eval(1) == q(5)
        assert net.eval(2) == q(0)
        assert net.horizon == 1
        assert net.to_text() == "[1: 5] then const(0)"

    def test_prefix_needs_contiguous_indices(self):
        with pytest.raises(ValueError):
            Net(R, EventuallyConstant(q(0)), {1: q(1), 3: q(1)})

    def test_prefix_space(self):
        with pytest.raises(SpaceMismatchError):
            Net(R, EventuallyConstant(q(0)), {1: RieszSpace.vector(2).zero()})

    def test_index_kind(self):
        with pytest.raises(ValueError):
            Net(R, EventuallyConstant(q(0)), index=DirectedIndex.pair_naturals())

    @pytest.mark.parametrize("n", [0, -1, "2"])
    def test_invalid_index(self, n):
        with pytest.raises(ValueError):
            harmonic_net().eval(n)

    def test_values(self):
        assert harmonic_net(2).values(3) == [q(2), q(1), q(Fraction(2, 3))]

    def test_mask(self):
        masked = mask(harmonic_net(prefix={1: q(5)}), ArithProg(2, 2))
        assert masked.values(4) == [q(0), q(Fraction(1, 2)), q(0), q(Fraction(1, 4))]
        assert masked.tail.to_text() == "masked(ap(2,2),harmonic(1))"

    @pytest.mark.parametrize(
        "delta", [ArithProg(2, 2), SQUARES, FiniteList((1, 3, 7)), FULL]
    )
    def test_mask_is_characteristic(self, delta):
        net = harmonic_net(3, prefix={1: q(5), 2: q(-2)})
        masked = mask(net, delta)
        for n in range(1, 41):
            if delta.contains(n):
                assert masked.eval(n) == net.eval(n)
            else:
                assert masked.eval(n) == q(0)


class TestCombine:
    def test_sup_moves_crossing_into_prefix(self):
        result = combine(harmonic_net(), Net.constant(q(Fraction(1, 2))), "sup")
        assert result.prefix == {1: q(1), 2: q(Fraction(1, 2))}
        assert result.tail == EventuallyConstant(q(Fraction(1, 2)))

    def test_add(self):
        result = combine(harmonic_net(1), harmonic_net(2), "add")
        assert result.tail == HarmonicScale(q(3))
        assert result.eval(4) == q(Fraction(3, 4))

    def test_unary_operations(self):
        scaled = combine(harmonic_net(), op="scale", q=Fraction(-2))
        assert scaled.eval(4) == q(Fraction(-1, 2))
        absolute_net = combine(harmonic_net(-1), op="abs")
        assert absolute_net.tail == HarmonicScale(q(1))

    def test_sweeps(self):
        finsupp = RieszSpace.finsupp()
        net = Net(finsupp, InterleavedUnits(1, 2, -1, finsupp))
        result = combine(net, op="abs")
        assert result.tail.pieces() is not None
        for n in range(1, 12):
            assert result.eval(n) == absolute(net.eval(n))

    def test_pointwise_fallback(self):
        sub, _ = subnet(harmonic_net(), SELECTORS["square"], horizon=3)
        result = combine(sub, sub, "add")
        assert isinstance(result.tail, ComputedTail)
        assert result.tail.to_text().startswith("computed(add(")
        assert result.eval(5) == q(Fraction(2, 25))

    def test_missing_operands(self):
        with pytest.raises(ValueError):
            combine(harmonic_net(), op="add")
        with pytest.raises(ValueError):
            combine(harmonic_net(), op="scale")
        with pytest.raises(ValueError):
            combine(harmonic_net(), harmonic_net(), "mul")

    def test_space_mismatch(self):
        other = Net.constant(RieszSpace.vector(2).zero())
        with pytest.raises(SpaceMismatchError):
            combine(harmonic_net(), other, "sup")


class TestSubnet:
    def test_double(self):
        sub, verdict = subnet(harmonic_net(), SELECTORS["double"], horizon=4)
        assert verdict.accepted
        assert verdict.evidence["cofinal"] == "strictly increasing"
        assert sub.eval(3) == q(Fraction(1, 6))
        assert sub.eval(10) == q(Fraction(1, 20))
        assert sub.tail.pieces() == [(FULL, ClosedForm.harmonic_form(q(Fraction(1, 2))))]

    def test_inclusion(self):
        sub, verdict = subnet(harmonic_net(), InclusionSelector(ArithProg(2, 2)), horizon=3)
        assert verdict.accepted
        assert sub.eval(7) == q(Fraction(1, 14))
        assert sub.tail.pieces() == [(FULL, ClosedForm.harmonic_form(q(Fraction(1, 2))))]

    def test_finite_subset_is_not_cofinal(self):
        with pytest.raises(NotCofinalError) as info:
            subnet(harmonic_net(), InclusionSelector(FiniteList((2, 5))), horizon=3)
        assert info.value.witness == 6

    def test_stalling_map_is_not_cofinal(self):
        stall = MapSelector("stall", lambda k: min(k, 3))
        with pytest.raises(NotCofinalError) as info:
            subnet(harmonic_net(), stall, horizon=5)
        assert info.value.witness == 4

    def test_selector_text(self):
        assert SELECTORS["identity"].to_text() == "map(identity)"
        assert InclusionSelector(SQUARES).to_text() == "in(pred:squares)"
