# properties.py
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
"""
One runner per theorem about μ-statistical order convergence. A runner draws one
seeded instance, re-validates every generated object with the independent
checkers, and then checks the theorem's conclusion on the instance.

A runner returns None on success and `SKIPPED` when the instance lies outside the
theorem's scope; a failing check raises `TrialFailure` with the evidence.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Optional

import numpy as np

import rieszstat.core.constants as const
import rieszstat.utils.misc as utils

from rieszstat.core.closed_forms import ClosedForm
from rieszstat.core.convergence import (
    Witness,
    check_classical_statistical,
    check_order_conv,
    check_st_decreasing,
    check_st_order_conv,
    infimum_on,
    is_decreasing_on,
    is_order_bounded,
    pointwise_leq,
    ru_check,
)
from rieszstat.core.density import is_exactly
from rieszstat.core.generators import (
    RATIOS,
    gen_order_convergent_net,
    gen_st_convergent_net,
    random_element,
    random_finite_set,
    random_fraction_of,
    random_nonzero_element,
    random_positive_element,
    random_rational,
    random_spike_set,
    spike_free_set,
    with_spikes,
)
from rieszstat.core.lattice import (
    RieszElement,
    RieszSpace,
    absolute,
    dedekind_sup,
    inf,
    negative_part,
    positive_part,
    sup,
)
from rieszstat.core.measures import DirectedSetMeasure, measure_eval
from rieszstat.core.nets import Net, combine, mask
from rieszstat.core.set_algebra import simplify
from rieszstat.core.set_expr import EMPTY, FULL, ArithProg, Complement, SetExpr, meet
from rieszstat.core.tail_rules import ClosedTail, GeometricScale, HarmonicScale
from rieszstat.core.verdicts import Verdict

SKIPPED = "skipped"

# regeneration attempts of the monotone precondition filter
MONOTONE_ATTEMPTS = 8

# levels n checked by the relatively uniform property
RU_HORIZON = 8


@dataclass
class TrialContext:
    rng: np.random.Generator
    space: RieszSpace
    measure: DirectedSetMeasure
    horizon: int


class TrialFailure(Exception):
    """A check inside a trial failed."""

    def __init__(self, step: str, evidence: Any, inputs: Dict[str, Any]) -> None:
        super().__init__(step)
        self.step = step
        self.evidence = evidence
        self.inputs = inputs

    def to_plain(self) -> Dict[str, Any]:
        return {
            "step": self.step,
            "evidence": utils.to_plain(self.evidence),
            "inputs": utils.to_plain(self.inputs),
        }


def _require(verdict: Verdict, step: str, **inputs: Any) -> None:
    if not verdict.accepted:
        raise TrialFailure(step, verdict.to_plain(), inputs)


def _require_true(condition: bool, step: str, **inputs: Any) -> None:
    if not condition:
        raise TrialFailure(step, "condition violated", inputs)


def _st(
    ctx: TrialContext, net: Net, x: RieszElement, witness: Witness, step: str
) -> None:
    _require(
        check_st_order_conv(net, x, witness, ctx.measure, ctx.horizon),
        step,
        net=net,
        limit=x,
        witness=witness,
    )


def _validated_st(ctx: TrialContext):
    """A generated st-convergent net, after the checker has accepted it."""
    net, x, witness = gen_st_convergent_net(ctx.rng, ctx.space, ctx.measure)
    _st(ctx, net, x, witness, "generator output")
    return net, x, witness


def _shared(ctx: TrialContext, first: Witness, second: Witness) -> Witness:
    """(p + q, Δ ∩ Σ), after confirming μ(Δ ∩ Σ) = 1."""
    gamma = simplify(meet(first.delta, second.delta))
    value = measure_eval(ctx.measure, gamma)
    _require_true(is_exactly(value, 1), "measure of Δ∩Σ", delta=gamma, value=value)
    return Witness(combine(first.p, second.p, "add"), gamma)


def _constant(x: RieszElement) -> Net:
    return Net.constant(x)


# ------------------------------------------------------------------------------
# runners


def order_implies_st(ctx: TrialContext) -> Optional[str]:
    """Every order convergent net is μ-statistically order convergent."""
    net, x, y = gen_order_convergent_net(ctx.rng, ctx.space)
    _require(check_order_conv(net, x, y, ctx.horizon), "generator output", net=net, y=y)
    _st(ctx, net, x, Witness(y, FULL), "st convergence with (y, A)")
    return None


def squeeze(ctx: TrialContext) -> Optional[str]:
    """a <= b <= c with a, c → x gives b → x, witness (p_a + p_c, Δ_a ∩ Δ_c)."""
    rng, space = ctx.rng, ctx.space
    x = random_element(rng, space)
    u_low, u_high = random_positive_element(rng, space), random_positive_element(rng, space)
    spike_set = random_spike_set(rng, ctx.measure)
    delta = spike_free_set(spike_set)
    low = with_spikes(
        Net.from_tail(space, ClosedTail(ClosedForm(x, -u_low))),
        spike_set,
        x - random_positive_element(rng, space),
    )
    high = with_spikes(
        Net.from_tail(space, ClosedTail(ClosedForm(x, u_high))),
        spike_set,
        x + random_positive_element(rng, space),
    )
    low_witness = Witness(Net.from_tail(space, HarmonicScale(u_low)), delta)
    high_witness = Witness(Net.from_tail(space, HarmonicScale(u_high)), delta)
    _st(ctx, low, x, low_witness, "lower net")
    _st(ctx, high, x, high_witness, "upper net")
    t = Fraction(int(rng.integers(0, 5)), 4)
    middle = combine(
        combine(low, op="scale", q=1 - t), combine(high, op="scale", q=t), "add"
    )
    _require(pointwise_leq(low, middle), "lower <= middle", low=low, middle=middle)
    _require(pointwise_leq(middle, high), "middle <= upper", middle=middle, high=high)
    _st(ctx, middle, x, _shared(ctx, low_witness, high_witness), "squeezed net")
    return None


def dedekind_monotone(ctx: TrialContext) -> Optional[str]:
    """An order bounded monotone net in a Dedekind complete space converges to its
    infimum (or supremum)."""
    rng, space = ctx.rng, ctx.space
    if not space.dedekind_complete:
        return SKIPPED
    x = random_element(rng, space)
    u, v = random_positive_element(rng, space), random_positive_element(rng, space)
    r = RATIOS[int(rng.integers(len(RATIOS)))]
    deviation = ClosedForm(space.zero(), u, ((r, v),))
    sign = 1 if rng.random() < 0.5 else -1
    net = Net.from_tail(space, ClosedTail(deviation.scale(sign).shift(x)))
    oriented = net if sign == 1 else combine(net, op="scale", q=-1)
    _require(is_decreasing_on(oriented, FULL, ctx.horizon), "monotone", net=net)
    _require_true(is_order_bounded(net) is True, "order bounded", net=net)
    window = net.values(ctx.horizon)
    extreme = dedekind_sup(window if sign == 1 else [-value for value in window], space)
    _require_true(extreme == oriented.eval(1), "supremum of the window", net=net)
    limit = infimum_on(oriented, FULL, ctx.horizon)
    limit = limit if sign == 1 else -limit
    _require_true(limit == x, "monotone limit", net=net, limit=limit, expected=x)
    dominating = Net.from_tail(space, ClosedTail(deviation))
    _st(ctx, net, x, Witness(dominating, FULL), "monotone net converges")
    return None


def subnet_implies(ctx: TrialContext) -> Optional[str]:
    """Restricting to Σ ⊆ Δ with μ(Σ) = 1 keeps the convergence."""
    net, x, witness = _validated_st(ctx)
    sigma = simplify(meet(witness.delta, Complement(random_finite_set(ctx.rng))))
    value = measure_eval(ctx.measure, sigma)
    _require_true(is_exactly(value, 1), "measure of Σ", sigma=sigma, value=value)
    _st(ctx, net, x, Witness(witness.p, sigma), "restriction to Σ")
    return None


def lattice_sup(ctx: TrialContext) -> Optional[str]:
    """x_n ∨ w_n → x ∨ w."""
    a, x, wa = _validated_st(ctx)
    b, z, wb = _validated_st(ctx)
    _st(ctx, combine(a, b, "sup"), sup(x, z), _shared(ctx, wa, wb), "supremum")
    return None


def lattice_derived(ctx: TrialContext) -> Optional[str]:
    """x_n ∧ w_n, |x_n|, x_n⁺ and x_n⁻ converge to the corresponding limits."""
    a, x, wa = _validated_st(ctx)
    b, z, wb = _validated_st(ctx)
    zero = _constant(ctx.space.zero())
    _st(ctx, combine(a, b, "inf"), inf(x, z), _shared(ctx, wa, wb), "infimum")
    _st(ctx, combine(a, op="abs"), absolute(x), wa, "modulus")
    _st(ctx, combine(a, zero, "sup"), positive_part(x), wa, "positive part")
    negated = combine(a, op="scale", q=-1)
    _st(ctx, combine(negated, zero, "sup"), negative_part(x), wa, "negative part")
    return None


def basic_props(ctx: TrialContext) -> Optional[str]:
    """Uniqueness of the limit, linearity, closedness of the positive cone, the
    equivalent forms x_n → x, x_n − x → 0, |x_n − x| → 0, and restriction."""
    rng, space = ctx.rng, ctx.space
    zero = space.zero()
    net, x, witness = _validated_st(ctx)

    doubled = Witness(combine(witness.p, op="scale", q=2), witness.delta)
    _st(ctx, net, x, doubled, "doubled witness")
    d = random_nonzero_element(rng, space)
    rival = Witness(
        combine(witness.p, Net.from_tail(space, HarmonicScale(absolute(d))), "add"),
        witness.delta,
    )
    for limit, candidate in ((x, doubled), (x + d, rival)):
        if check_st_order_conv(net, limit, candidate, ctx.measure, ctx.horizon).accepted:
            gap = absolute(limit - x)
            _require_true(gap.is_zero, "unique limit", net=net, limit=x, other=limit, gap=gap)

    b, z, wb = _validated_st(ctx)
    q = random_rational(rng)
    combination = combine(net, combine(b, op="scale", q=q), "add")
    scaled = Witness(combine(wb.p, op="scale", q=abs(q)), wb.delta)
    _st(ctx, combination, x + z.scale(q), _shared(ctx, witness, scaled), "linearity")

    modulus = combine(net, op="abs")
    _require(pointwise_leq(_constant(zero), modulus), "positive net", net=modulus)
    _st(ctx, modulus, absolute(x), witness, "positive cone")
    _require_true(absolute(x).is_positive, "positive limit", limit=absolute(x))

    shifted = combine(net, _constant(x), "sub")
    _st(ctx, shifted, zero, witness, "x_n − x → 0")
    _st(ctx, combine(shifted, op="abs"), zero, witness, "|x_n − x| → 0")

    sigma = simplify(meet(witness.delta, Complement(random_finite_set(rng))))
    _st(ctx, net, x, Witness(witness.p, sigma), "restriction")
    return None


def monotone_witness(u: RieszElement, spike_set: SetExpr) -> Witness:
    """(u/n, complement of the spike set); spikes of height u sit outside Δ."""
    return Witness(Net.from_tail(u.space, HarmonicScale(u)), spike_free_set(spike_set))


def check_monotone_limit(
    ctx: TrialContext, net: Net, x: RieszElement, witness: Witness
) -> None:
    """The conclusion for a decreasing net: st convergence to x and inf x_n = x."""
    _st(ctx, net, x, witness, "convergence")
    limit = infimum_on(net, FULL, ctx.horizon)
    _require_true(limit == x, "infimum is the limit", net=net, infimum=limit, limit=x)


def monotone_order(ctx: TrialContext) -> Optional[str]:
    """A monotone μ-statistically order convergent net converges in order: its
    infimum is the limit."""
    rng, space = ctx.rng, ctx.space
    for attempt in range(MONOTONE_ATTEMPTS):
        x = random_element(rng, space)
        u = random_positive_element(rng, space)
        w = u if attempt == MONOTONE_ATTEMPTS - 1 else random_fraction_of(rng, u)
        net = Net.from_tail(space, ClosedTail(ClosedForm(x, w)))
        spike_set: SetExpr = EMPTY
        if attempt < MONOTONE_ATTEMPTS - 1 and rng.random() < 0.3:
            spike_set = random_finite_set(rng)
            net = with_spikes(net, spike_set, x + u)
        if is_decreasing_on(net, FULL, ctx.horizon).accepted:
            break
    check_monotone_limit(ctx, net, x, monotone_witness(u, spike_set))
    return None


def mask_characteristic(ctx: TrialContext) -> Optional[str]:
    """x_n →st 0 via (y, Δ) iff x·𝒳_Δ → 0 in order."""
    rng, space = ctx.rng, ctx.space
    base, x, y = gen_order_convergent_net(rng, space)
    null = combine(base, _constant(x), "sub")
    spike_set = random_spike_set(rng, ctx.measure)
    delta = spike_free_set(spike_set)
    net = with_spikes(null, spike_set, random_nonzero_element(rng, space))
    masked = mask(net, delta)
    _require(
        check_order_conv(masked, space.zero(), y, ctx.horizon),
        "masked net converges in order",
        net=masked,
        y=y,
    )
    _st(ctx, net, space.zero(), Witness(y, delta), "st null")
    return None


def riesz_closure(ctx: TrialContext) -> Optional[str]:
    """The μ-statistically order convergent nets form a Riesz space."""
    a, x, wa = _validated_st(ctx)
    b, z, wb = _validated_st(ctx)
    q = random_rational(ctx.rng)
    _st(ctx, combine(a, b, "add"), x + z, _shared(ctx, wa, wb), "sum")
    scaled = Witness(combine(wa.p, op="scale", q=abs(q)), wa.delta)
    _st(ctx, combine(a, op="scale", q=q), x.scale(q), scaled, "scalar multiple")
    _st(ctx, combine(a, op="abs"), absolute(x), wa, "modulus")
    return None


def ideal_bounded_null(ctx: TrialContext) -> Optional[str]:
    """An order bounded net dominated by a μ-statistically null net is null."""
    rng = ctx.rng
    a, x, witness = _validated_st(ctx)
    null = combine(a, _constant(x), "sub")
    zero = _constant(ctx.space.zero())
    choice = int(rng.integers(3))
    if choice == 0:
        y = combine(null, op="scale", q=Fraction(int(rng.integers(-4, 5)), 4))
    elif choice == 1:
        y = combine(null, zero, "sup")
    else:
        y = combine(null, zero, "inf")
    _require(
        pointwise_leq(combine(y, op="abs"), combine(null, op="abs")),
        "|y| <= |x|",
        y=y,
        x=null,
    )
    _require_true(is_order_bounded(y) is True, "y order bounded", y=y)
    _st(ctx, y, ctx.space.zero(), witness, "dominated net is null")
    return None


def dec_implies_conv(ctx: TrialContext) -> Optional[str]:
    """A μ-statistically decreasing net converges to its limit, witnessed by
    (p − x, Δ)."""
    rng, space = ctx.rng, ctx.space
    x = random_element(rng, space)
    u, v = random_positive_element(rng, space), random_positive_element(rng, space)
    r = RATIOS[int(rng.integers(len(RATIOS)))]
    spike_set = random_spike_set(rng, ctx.measure)
    delta = spike_free_set(spike_set)
    p = with_spikes(
        Net.from_tail(space, ClosedTail(ClosedForm(x, u, ((r, v),)))),
        spike_set,
        random_nonzero_element(rng, space),
    )
    _require(
        check_st_decreasing(p, x, delta, ctx.measure, ctx.horizon),
        "st decreasing",
        p=p,
        delta=delta,
    )
    _st(ctx, p, x, Witness(combine(p, _constant(x), "sub"), delta), "st convergence")
    return None


def order_dec_null(ctx: TrialContext) -> Optional[str]:
    """An order decreasing null net is μ-statistically order null."""
    rng, space = ctx.rng, ctx.space
    u = random_positive_element(rng, space)
    r = RATIOS[int(rng.integers(len(RATIOS)))]
    tails = [HarmonicScale(u), GeometricScale(u, r)]
    y = Net.from_tail(space, tails[int(rng.integers(len(tails)))])
    zero = space.zero()
    _require(is_decreasing_on(y, FULL, ctx.horizon), "decreasing", y=y)
    limit = infimum_on(y, FULL, ctx.horizon)
    _require_true(limit == zero, "null", y=y, infimum=limit)
    _require(
        check_st_decreasing(y, zero, FULL, ctx.measure, ctx.horizon), "st decreasing", y=y
    )
    _st(ctx, y, zero, Witness(y, FULL), "st null")
    return None


def ru_implies_st(ctx: TrialContext) -> Optional[str]:
    """Relatively uniform convergence implies μ-statistical order convergence."""
    rng, space = ctx.rng, ctx.space
    x = random_element(rng, space)
    u = random_positive_element(rng, space)
    net = Net.from_tail(space, ClosedTail(ClosedForm(x, random_fraction_of(rng, u))))
    _require(ru_check(net, x, u, RU_HORIZON), "relatively uniform", net=net, regulator=u)
    _st(ctx, net, x, Witness(Net.from_tail(space, HarmonicScale(u)), FULL), "st convergence")
    return None


def real_line_coincidence(ctx: TrialContext) -> Optional[str]:
    """On the real line μ-statistical order convergence for the density agrees
    with classical statistical convergence."""
    if ctx.space.kind != const.RATIONALS:
        return SKIPPED
    net, x, _ = _validated_st(ctx)
    _require(check_classical_statistical(net, x), "classical statistical", net=net, limit=x)
    mutant = with_spikes(net, ArithProg(1, 2), x + ctx.space.element(1))
    classical = check_classical_statistical(mutant, x)
    _require_true(not classical.accepted, "odd spikes rejected", net=mutant)
    odds = measure_eval(ctx.measure, ArithProg(1, 2))
    _require_true(
        is_exactly(odds, Fraction(1, 2)), "odd spikes are not null", net=mutant, value=odds
    )
    return None


Runner = Callable[[TrialContext], Optional[str]]

PROPERTIES: Dict[str, Runner] = {
    "squeeze": squeeze,
    "order_implies_st": order_implies_st,
    "dedekind_monotone": dedekind_monotone,
    "subnet_implies": subnet_implies,
    "lattice_sup": lattice_sup,
    "lattice_derived": lattice_derived,
    "basic_props": basic_props,
    "monotone_order": monotone_order,
    "mask_characteristic": mask_characteristic,
    "riesz_closure": riesz_closure,
    "ideal_bounded_null": ideal_bounded_null,
    "dec_implies_conv": dec_implies_conv,
    "order_dec_null": order_dec_null,
    "ru_implies_st": ru_implies_st,
    "real_line_coincidence": real_line_coincidence,
}

# scope notes recorded in reports when a runner skips a space
SCOPE_NOTES = {
    "dedekind_monotone": "runs on Dedekind complete spaces only; finsupp is excluded",
    "real_line_coincidence": "runs on the rationals only",
}
