# closed_forms.py
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
Closed-form tails n ↦ c + h/n + Σ g_i r_i^n (0 < r_i < 1) with coefficients in a Riesz
space, and exact decisions about their eventual sign and monotonicity.

All decisions rest on one bound: if the leading coefficient L of a scalar form
dominates the remaining terms, Σ |a_j| w_j(n) < |L| with every weight w_j
non-increasing from some index on, then the sign of the form is the sign of L from
that index on. The search for such an index is capped by
`settings.MAX_THRESHOLD_SEARCH`; beyond the cap the decision is left open.
"""

import functools
import logging
import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import sympy

import rieszstat.settings as settings
import rieszstat.utils.misc as utils

from rieszstat.core.lattice import RieszElement, RieszSpace, absolute, check_same_space
from rieszstat.core.set_expr import ArithProg

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SignDecision:
    """
    `holds=True`: the property holds at every n >= threshold. `holds=False`: it fails
    at every n >= threshold. `holds=None`: undecided.
    """

    holds: Optional[bool]
    threshold: int


@functools.lru_cache(maxsize=None)
def basis_limit(ratio: Optional[Fraction] = None) -> Fraction:
    """lim 1/n (ratio None) or lim ratio^n as n → ∞."""
    n = sympy.Symbol("n", positive=True, integer=True)
    if ratio is None:
        term = 1 / n
    else:
        term = sympy.Rational(ratio.numerator, ratio.denominator) ** n
    limit = sympy.limit(term, n, sympy.oo)
    return Fraction(int(limit.p), int(limit.q))


def _peak(ratio: Fraction, degree: int) -> int:
    """Smallest n0 >= 1 with n^degree-like weights n·r^n (degree 1) or n(n+1)·r^n
    (degree 2) non-increasing for n >= n0."""
    if degree == 0:
        return 1
    return max(1, math.ceil(degree * ratio / (1 - ratio)))


def harmonic_envelope_factor(ratio: Fraction) -> Fraction:
    """C(r) = max_n n·r^n, so that r^n <= C(r)/n for all n >= 1."""
    top = _peak(ratio, 1)
    return max(n * ratio**n for n in {max(top - 1, 1), top})


Weight = Callable[[int], Fraction]


def _dominance_threshold(
    lead: Fraction, terms: Sequence[Tuple[Fraction, Weight, int]], start: int
) -> Optional[int]:
    """First n >= start (past all monotonicity points) with Σ |a|·w(n) < |lead|."""
    bound = abs(lead)
    n = max([start] + [monotone_from for _, _, monotone_from in terms])
    stop = n + settings.MAX_THRESHOLD_SEARCH
    while n <= stop:
        if sum(abs(coef) * weight(n) for coef, weight, _ in terms) < bound:
            return n
        n += 1
    return None


def _sign_decision(lead: Fraction, threshold: Optional[int]) -> SignDecision:
    if threshold is None:
        return SignDecision(None, 0)
    return SignDecision(lead > 0, threshold)


@dataclass(frozen=True)
class ScalarForm:
    """One coordinate of a closed form: c + h/n + Σ g·r^n, ratios decreasing."""

    constant: Fraction = Fraction(0)
    harmonic: Fraction = Fraction(0)
    geometric: Tuple[Tuple[Fraction, Fraction], ...] = ()

    def value(self, n: int) -> Fraction:
        return (
            self.constant
            + self.harmonic / n
            + sum((g * r**n for r, g in self.geometric), Fraction(0))
        )

    @property
    def is_zero(self) -> bool:
        return self.constant == 0 and self.harmonic == 0 and not self.geometric


def nonnegative_from(form: ScalarForm, start: int = 1) -> SignDecision:
    """Eventual decision of form(n) >= 0 (holds) / form(n) < 0 (fails)."""
    start = max(start, 1)
    c, h, geo = form.constant, form.harmonic, form.geometric
    if form.is_zero:
        return SignDecision(True, start)
    if c != 0:
        terms = [(h, lambda n: Fraction(1, n), 1)]
        terms += [(g, (lambda n, r=r: r**n), 1) for r, g in geo]
        threshold = _dominance_threshold(c, terms, start)
        if threshold is None:
            envelope = abs(h) + sum(abs(g) * harmonic_envelope_factor(r) for r, g in geo)
            threshold = max(start, math.floor(envelope / abs(c)) + 1)
        return _sign_decision(c, threshold)
    if h != 0:
        terms = [(g, (lambda n, r=r: n * r**n), _peak(r, 1)) for r, g in geo]
        return _sign_decision(h, _dominance_threshold(h, terms, start))
    (r_lead, g_lead), rest = geo[0], geo[1:]
    terms = [(g, (lambda n, q=r / r_lead: q**n), 1) for r, g in rest]
    return _sign_decision(g_lead, _dominance_threshold(g_lead, terms, start))


def decreasing_from(form: ScalarForm, start: int = 1) -> SignDecision:
    """
    Eventual decision of form(n) >= form(n+1). The difference is
    h/(n(n+1)) + Σ g(1−r)·r^n.
    """
    start = max(start, 1)
    h, geo = form.harmonic, form.geometric
    coefs = [h] + [g for _, g in geo]
    if all(a >= 0 for a in coefs):
        return SignDecision(True, start)
    if all(a <= 0 for a in coefs):
        return SignDecision(False, start)
    steps = [(r, g * (1 - r)) for r, g in geo]
    if h != 0:
        terms = [(a, (lambda n, r=r: n * (n + 1) * r**n), _peak(r, 2)) for r, a in steps]
        return _sign_decision(h, _dominance_threshold(h, terms, start))
    (r_lead, a_lead), rest = steps[0], steps[1:]
    terms = [(a, (lambda n, q=r / r_lead: q**n), 1) for r, a in rest]
    return _sign_decision(a_lead, _dominance_threshold(a_lead, terms, start))


def _merge_geometric(
    terms: Sequence[Tuple[Fraction, Fraction]]
) -> Tuple[Tuple[Fraction, Fraction], ...]:
    merged: Dict[Fraction, Fraction] = {}
    for r, g in terms:
        merged[r] = merged.get(r, Fraction(0)) + g
    return tuple((r, merged[r]) for r in sorted(merged, reverse=True) if merged[r] != 0)


@dataclass(frozen=True)
class ClosedForm:
    """
    n ↦ constant + harmonic/n + Σ g·ratio^n with Riesz-space coefficients.

    Geometric terms are kept with distinct ratios in decreasing order and non-zero
    coefficients.
    """

    constant: RieszElement
    harmonic: RieszElement
    geometric: Tuple[Tuple[Fraction, RieszElement], ...] = ()

    def __post_init__(self) -> None:
        check_same_space(self.constant, self.harmonic, *(g for _, g in self.geometric))
        merged: Dict[Fraction, RieszElement] = {}
        for r, g in self.geometric:
            r = Fraction(r)
            if not 0 < r < 1:
                raise ValueError(
                    "geometric ratio must lie in (0, 1), got {}".format(
                        utils.format_rational(r)
                    )
                )
            merged[r] = merged[r] + g if r in merged else g
        terms = tuple(
            (r, merged[r]) for r in sorted(merged, reverse=True) if not merged[r].is_zero
        )
        object.__setattr__(self, "geometric", terms)

    @property
    def space(self) -> RieszSpace:
        return self.constant.space

    @classmethod
    def constant_form(cls, value: RieszElement) -> "ClosedForm":
        return cls(value, value.space.zero())

    @classmethod
    def harmonic_form(cls, value: RieszElement) -> "ClosedForm":
        return cls(value.space.zero(), value)

    @classmethod
    def geometric_form(cls, value: RieszElement, ratio: Fraction) -> "ClosedForm":
        zero = value.space.zero()
        return cls(zero, zero, ((Fraction(ratio), value),))

    @classmethod
    def zero(cls, space: RieszSpace) -> "ClosedForm":
        return cls(space.zero(), space.zero())

    def value(self, n: int) -> RieszElement:
        total = self.constant + self.harmonic.scale(Fraction(1, n))
        for r, g in self.geometric:
            total = total + g.scale(r**n)
        return total

    def keys(self) -> Tuple[int, ...]:
        keys = set(self.constant.keys()) | set(self.harmonic.keys())
        for _, g in self.geometric:
            keys |= set(g.keys())
        return tuple(sorted(keys))

    def scalar(self, k: int) -> ScalarForm:
        return ScalarForm(
            self.constant.coordinate(k),
            self.harmonic.coordinate(k),
            _merge_geometric([(r, g.coordinate(k)) for r, g in self.geometric]),
        )

    @classmethod
    def from_scalars(cls, space: RieszSpace, scalars: Dict[int, ScalarForm]) -> "ClosedForm":
        ratios = sorted({r for form in scalars.values() for r, _ in form.geometric})
        constant = space.element({k: form.constant for k, form in scalars.items()})
        harmonic = space.element({k: form.harmonic for k, form in scalars.items()})
        geometric = []
        for r in ratios:
            coefs = {k: dict(form.geometric).get(r, Fraction(0)) for k, form in scalars.items()}
            geometric.append((r, space.element(coefs)))
        return cls(constant, harmonic, tuple(geometric))

    def __add__(self, other: "ClosedForm") -> "ClosedForm":
        return ClosedForm(
            self.constant + other.constant,
            self.harmonic + other.harmonic,
            self.geometric + other.geometric,
        )

    def __sub__(self, other: "ClosedForm") -> "ClosedForm":
        return self + other.scale(-1)

    def __neg__(self) -> "ClosedForm":
        return self.scale(-1)

    def scale(self, q: Fraction) -> "ClosedForm":
        return ClosedForm(
            self.constant.scale(q),
            self.harmonic.scale(q),
            tuple((r, g.scale(q)) for r, g in self.geometric),
        )

    def shift(self, value: RieszElement) -> "ClosedForm":
        """The form plus a constant."""
        return ClosedForm(self.constant + value, self.harmonic, self.geometric)

    @property
    def is_zero(self) -> bool:
        return self.constant.is_zero and self.harmonic.is_zero and not self.geometric

    @property
    def is_constant(self) -> bool:
        return self.harmonic.is_zero and not self.geometric

    def limit(self) -> RieszElement:
        """lim_n form(n), from the limits of the basis sequences 1/n and r^n."""
        total = self.constant + self.harmonic.scale(basis_limit(None))
        for r, g in self.geometric:
            total = total + g.scale(basis_limit(r))
        return total

    def envelope(self) -> RieszElement:
        """E >= 0 with |form(n) − constant| <= E/n for all n >= 1."""
        total = absolute(self.harmonic)
        for r, g in self.geometric:
            total = total + absolute(g).scale(harmonic_envelope_factor(r))
        return total

    def dilate(self, d: int) -> "ClosedForm":
        """n ↦ form(d·n)"""
        return ClosedForm(
            self.constant,
            self.harmonic.scale(Fraction(1, d)),
            tuple((r**d, g) for r, g in self.geometric),
        )

    def to_text(self) -> str:
        parts = ["const({})".format(self.constant.to_text())]
        if not self.harmonic.is_zero:
            parts.append("harmonic({})".format(self.harmonic.to_text()))
        for r, g in self.geometric:
            parts.append("geometric({}, {})".format(g.to_text(), utils.format_rational(r)))
        return " + ".join(parts)


def _combine_decisions(decisions: List[SignDecision], start: int) -> SignDecision:
    failing = [d for d in decisions if d.holds is False]
    if failing:
        return SignDecision(False, min(d.threshold for d in failing))
    if any(d.holds is None for d in decisions):
        return SignDecision(None, 0)
    return SignDecision(True, max([start] + [d.threshold for d in decisions]))


def nonnegative(form: ClosedForm, start: int = 1) -> SignDecision:
    """form(n) >= 0 coordinatewise: holds from the largest coordinate threshold, or
    fails from the threshold of a failing coordinate."""
    return _combine_decisions([nonnegative_from(form.scalar(k), start) for k in form.keys()], start)


def decreasing(form: ClosedForm, start: int = 1) -> SignDecision:
    return _combine_decisions([decreasing_from(form.scalar(k), start) for k in form.keys()], start)


def pick_extreme(
    left: ClosedForm, right: ClosedForm, largest: bool = True, start: int = 1
) -> Optional[Tuple[ClosedForm, int]]:
    """
    Closed form equal to left ∨ right (largest) or left ∧ right from the returned
    threshold on; None if some coordinate comparison is undecided.
    """
    space = check_same_space(left.constant, right.constant)
    keys = sorted(set(left.keys()) | set(right.keys()))
    scalars: Dict[int, ScalarForm] = {}
    threshold = start
    for k in keys:
        decision = nonnegative_from(_scalar_difference(left.scalar(k), right.scalar(k)), start)
        if decision.holds is None:
            LOGGER.debug("coordinate {}: order of {} and {} undecided".format(k, left.to_text(), right.to_text()))
            return None
        left_wins = decision.holds == largest
        scalars[k] = left.scalar(k) if left_wins else right.scalar(k)
        threshold = max(threshold, decision.threshold)
    return ClosedForm.from_scalars(space, scalars), threshold


def _scalar_difference(left: ScalarForm, right: ScalarForm) -> ScalarForm:
    return ScalarForm(
        left.constant - right.constant,
        left.harmonic - right.harmonic,
        _merge_geometric(list(left.geometric) + [(r, -g) for r, g in right.geometric]),
    )


def absolute_form(form: ClosedForm, start: int = 1) -> Optional[Tuple[ClosedForm, int]]:
    """|form| as a closed form from the returned threshold on."""
    return pick_extreme(form, -form, largest=True, start=start)


@dataclass(frozen=True)
class UnitSweep:
    """
    c·e_k at position first + (k−1)·period, zero elsewhere: the unit vectors of a
    sequence space swept along an arithmetic progression.
    """

    first: int
    period: int
    scale: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.first < 1 or self.period < 1:
            raise ValueError(
                "sweep needs first >= 1 and period >= 1, got {}, {}".format(
                    self.first, self.period
                )
            )

    def support_set(self) -> ArithProg:
        return ArithProg(self.first, self.period)

    def unit_index(self, n: int) -> Optional[int]:
        if n < self.first or (n - self.first) % self.period:
            return None
        return (n - self.first) // self.period + 1

    def position_of(self, k: int) -> int:
        """Index carrying c·e_k."""
        return self.first + (k - 1) * self.period

    def value(self, n: int, space: RieszSpace) -> RieszElement:
        k = self.unit_index(n)
        if k is None:
            return space.zero()
        return space.unit(k).scale(self.scale)

    def mapped(self, fn: Callable[[Fraction], Fraction]) -> "UnitSweep":
        """Sweep with coordinate value fn(c); fn must fix 0."""
        return UnitSweep(self.first, self.period, fn(self.scale))

    def to_text(self) -> str:
        return "units({},{},{})".format(
            self.first, self.period, utils.format_rational(self.scale)
        )


def jointly_nonnegative(forms: List[ClosedForm], start: int = 1) -> SignDecision:
    """Every form >= 0 coordinatewise."""
    return _combine_decisions([nonnegative(form, start) for form in forms], start)
