# generators.py
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
Seeded generators of random elements, sets and convergent nets for the theorem
suite. All randomness comes from a numpy Generator handed in by the caller.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

import rieszstat.core.constants as const

from rieszstat.core.closed_forms import ClosedForm
from rieszstat.core.convergence import Witness
from rieszstat.core.lattice import RieszElement, RieszSpace, absolute, sup_all
from rieszstat.core.measures import DirectedSetMeasure
from rieszstat.core.nets import Net
from rieszstat.core.set_algebra import simplify
from rieszstat.core.set_expr import (
    EMPTY,
    FULL,
    ArithProg,
    CoListed,
    Complement,
    FiniteList,
    Listed,
    PredicateSampled,
    SetExpr,
    Union,
)
from rieszstat.core.tail_rules import (
    ClosedTail,
    EventuallyConstant,
    GeometricScale,
    HarmonicScale,
    InterleavedUnits,
    SpikeOn,
    TailRule,
)

RATIOS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(3, 4))

# candidate spike sets, all of density zero
SPIKE_PREDICATES = ("squares", "cubes", "fourth_powers")

ORDER_KINDS = ("harmonic", "geometric", "eventually_constant")

# sequence indices used by random finitely supported elements
_FINSUPP_INDICES = 6


def random_rational(rng: np.random.Generator, bound: int = 3) -> Fraction:
    """Rational p/q with q ∈ {1, 2, 3, 4} and |p/q| <= bound."""
    denominator = int(rng.choice([1, 2, 3, 4]))
    numerator = int(rng.integers(-bound * denominator, bound * denominator + 1))
    return Fraction(numerator, denominator)


def random_element(rng: np.random.Generator, space: RieszSpace) -> RieszElement:
    if space.kind == const.RATIONALS:
        return space.element(random_rational(rng))
    if space.kind == const.RATIONAL_VECTOR:
        return space.element([random_rational(rng) for _ in range(space.dimension)])
    size = int(rng.integers(1, 4))
    support = sorted(
        int(k) for k in rng.choice(np.arange(1, _FINSUPP_INDICES + 1), size, replace=False)
    )
    return space.element({k: random_rational(rng) for k in support})


def random_positive_element(rng: np.random.Generator, space: RieszSpace) -> RieszElement:
    """A nonzero element u >= 0."""
    u = absolute(random_element(rng, space))
    if u.is_zero:
        u = u + space.unit(1)
    return u


def random_nonzero_element(rng: np.random.Generator, space: RieszSpace) -> RieszElement:
    e = random_element(rng, space)
    if e.is_zero:
        e = space.unit(1)
    return e


def random_fraction_of(rng: np.random.Generator, u: RieszElement) -> RieszElement:
    """w with |w| <= u, coordinatewise t·u with t ∈ [−1, 1]."""
    return u.space.element(
        {k: Fraction(int(rng.integers(-4, 5)), 4) * v for k, v in u.items()}
    )


def random_finite_set(rng: np.random.Generator, bound: int = 40) -> FiniteList:
    size = int(rng.integers(1, 5))
    return FiniteList(tuple(sorted({int(n) for n in rng.integers(1, bound + 1, size)})))


def random_periodic_set(rng: np.random.Generator) -> SetExpr:
    """An eventually periodic set: progressions with optional finite exceptions."""
    period = int(rng.integers(1, 7))
    s: SetExpr = ArithProg(int(rng.integers(1, period + 1)), period)
    if rng.random() < 0.4:
        other = int(rng.integers(1, 7))
        s = Union(s, ArithProg(int(rng.integers(1, other + 1)), other))
    if rng.random() < 0.3:
        s = Complement(s)
    if rng.random() < 0.3:
        s = Union(s, random_finite_set(rng))
    return s


def random_periodic_sets(rng: np.random.Generator, count: int) -> List[SetExpr]:
    """Samples for the axiom check; odds and evens always come first."""
    samples: List[SetExpr] = [ArithProg(1, 2), ArithProg(2, 2)]
    samples += [random_periodic_set(rng) for _ in range(max(count - 2, 0))]
    return samples[:count]


def random_atom_set(rng: np.random.Generator) -> SetExpr:
    """A listed (countable) or co-listed (co-countable) set of atoms."""
    atoms = tuple(sorted({"a{}".format(int(k)) for k in rng.integers(0, 8, int(rng.integers(0, 4)))}))
    if rng.random() < 0.5:
        return Listed(atoms)
    return CoListed(atoms)


def random_atom_sets(rng: np.random.Generator, count: int) -> List[SetExpr]:
    return [random_atom_set(rng) for _ in range(count)]


# ------------------------------------------------------------------------------
# nets


def _prefix(
    rng: np.random.Generator, x: RieszElement, dominating: Net, length: int
) -> dict:
    """Values x + d_n with |d_n| <= y_n for n <= length."""
    return {
        n: x + random_fraction_of(rng, dominating.eval(n)) for n in range(1, length + 1)
    }


def gen_order_convergent_net(
    rng: np.random.Generator, space: RieszSpace, kind: Optional[str] = None
) -> Tuple[Net, RieszElement, Net]:
    """
    A net converging in order to x together with its dominating net y:
    x + w/n with |w| <= u and y = u/n, x + w·rⁿ with y = u·rⁿ, or an eventually
    constant net whose prefix is dominated by the decreasing majorant of its
    deviations.
    """
    kind = kind or ORDER_KINDS[int(rng.integers(len(ORDER_KINDS)))]
    x = random_element(rng, space)
    u = random_positive_element(rng, space)
    w = random_fraction_of(rng, u)
    zero = space.zero()
    if kind == "harmonic":
        y = Net.from_tail(space, HarmonicScale(u))
        tail: TailRule = ClosedTail(ClosedForm(x, w))
    elif kind == "geometric":
        r = RATIOS[int(rng.integers(len(RATIOS)))]
        y = Net.from_tail(space, GeometricScale(u, r))
        tail = ClosedTail(ClosedForm(x, zero, ((r, w),)))
    else:
        length = int(rng.integers(0, 5))
        deviations = [random_fraction_of(rng, u) for _ in range(length)]
        prefix = {n: x + d for n, d in enumerate(deviations, start=1)}
        majorant = {
            n: sup_all([zero] + [absolute(d) for d in deviations[n - 1 :]])
            for n in range(1, length + 1)
        }
        y = Net(space, EventuallyConstant(zero), majorant)
        return Net(space, EventuallyConstant(x), prefix), x, y
    length = int(rng.integers(0, 4))
    return Net(space, tail, _prefix(rng, x, y, length)), x, y


def spike_choices(measure: DirectedSetMeasure) -> List[str]:
    """Spike kinds whose complement lies in the field of `measure`."""
    choices = [
        name
        for name in SPIKE_PREDICATES
        if measure.in_field(Complement(PredicateSampled(name)))
    ]
    return choices + ["finite", "none"]


def random_spike_set(rng: np.random.Generator, measure: DirectedSetMeasure) -> SetExpr:
    choices = spike_choices(measure)
    choice = choices[int(rng.integers(len(choices)))]
    if choice == "none":
        return EMPTY
    if choice == "finite":
        return random_finite_set(rng)
    return PredicateSampled(choice)


def with_spikes(net: Net, spike_set: SetExpr, spike: RieszElement) -> Net:
    """The net with value `spike` on `spike_set` (prefix included)."""
    if spike_set == EMPTY:
        return net
    prefix = {n: (spike if spike_set.contains(n) else v) for n, v in net.prefix.items()}
    return Net(net.space, SpikeOn(spike_set, spike, net.tail), prefix)


def spike_free_set(spike_set: SetExpr) -> SetExpr:
    if spike_set == EMPTY:
        return FULL
    return simplify(Complement(spike_set))


def gen_st_convergent_net(
    rng: np.random.Generator,
    space: RieszSpace,
    measure: DirectedSetMeasure,
    kind: Optional[str] = None,
) -> Tuple[Net, RieszElement, Witness]:
    """
    An order convergent net with arbitrary values spiked on a density-zero set S,
    with witness (y, complement of S).
    """
    net, x, y = gen_order_convergent_net(rng, space, kind)
    spike_set = random_spike_set(rng, measure)
    spiked = with_spikes(net, spike_set, random_nonzero_element(rng, space))
    return spiked, x, Witness(y, spike_free_set(spike_set))


def c0_example_net() -> Net:
    """(e₁, 0, e₂, 0, e₃, ...) in the finitely supported sequences."""
    space = RieszSpace.finsupp()
    return Net.from_tail(space, InterleavedUnits(1, 2, Fraction(1), space))
