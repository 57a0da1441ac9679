# measures.py
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
Directed-set measures: finitely additive [0, 1]-valued measures on an interval field
that vanish on finite order intervals, give the whole index set mass 1 and are
monotone on null sets.
"""

import logging

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import rieszstat.core.constants as const
import rieszstat.io_utils.fileio_serializers as serializers
import rieszstat.settings as settings
import rieszstat.utils.misc as utils

from rieszstat.core.density import Bounds, Exact, MeasureValue, density
from rieszstat.core.exceptions import NotPeriodicError, OutsideFieldError
from rieszstat.core.index_sets import DirectedIndex
from rieszstat.core.periodic import normalize, normalize_atoms
from rieszstat.core.set_algebra import equivalent, is_empty, null_reduction
from rieszstat.core.set_expr import (
    EMPTY,
    FULL,
    ArithProg,
    CoListed,
    Complement,
    Intersection,
    SetExpr,
    Union,
    predicate_names,
    uses_atoms,
)

LOGGER = logging.getLogger(__name__)


class DirectedSetMeasure(ABC):
    """Base class of directed-set measures; `name` is the identifier used on the
    command line and in reports."""

    name = "measure"
    index_kind = const.NATURALS

    @abstractmethod
    def evaluate(self, s: SetExpr) -> MeasureValue:
        """Measure of `s`; raises OutsideFieldError if `s` is not in the field."""

    def in_field(self, s: SetExpr) -> bool:
        try:
            self.evaluate(s)
        except OutsideFieldError:
            return False
        return True

    @property
    def index(self) -> DirectedIndex:
        return DirectedIndex(self.index_kind)

    def whole_set(self) -> SetExpr:
        return FULL

    def to_text(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return "{}()".format(type(self).__name__)


class PeriodicDensity(DirectedSetMeasure):
    """Exact asymptotic density on the field generated by arithmetic progressions
    and finite subsets of ℕ."""

    name = "periodic-density"

    def evaluate(self, s: SetExpr) -> MeasureValue:
        try:
            return Exact(normalize(s).density())
        except NotPeriodicError as error:
            raise OutsideFieldError(
                "{} is outside the field of {}: {}".format(s.to_text(), self.name, error)
            ) from None


class PrefixBoundsDensity(DirectedSetMeasure):
    """
    Density of arbitrary subsets of ℕ through prefix-ratio bounds. Eventually
    periodic sets, and sets whose predicates all have certified density zero, get
    exact values; otherwise the bounds collapse to Exact only when they coincide.
    """

    name = "prefix-bounds"

    def __init__(
        self, horizon: Optional[int] = None, schedule: Optional[Sequence[int]] = None
    ) -> None:
        self.horizon = horizon
        self.schedule = tuple(schedule) if schedule else None

    def evaluate(self, s: SetExpr) -> MeasureValue:
        if uses_atoms(s):
            raise OutsideFieldError(
                "{} is not a subset of ℕ, outside {}".format(s.to_text(), self.name)
            )
        reduced = null_reduction(s)
        if reduced is not None:
            LOGGER.debug(
                "{}: predicates are null, exact density of the reduction".format(s)
            )
            return Exact(reduced.density())
        value = density(s, self.horizon, self.schedule)
        if isinstance(value, Exact):
            return value
        if isinstance(value, Bounds) and value.collapsed:
            return Exact(value.lo)
        return value

    def __repr__(self) -> str:
        return "PrefixBoundsDensity(horizon={}, schedule={})".format(
            self.horizon, self.schedule
        )


class CoCountable(DirectedSetMeasure):
    """On a symbolic uncountable index set: 0 on (listed) countable sets, 1 on
    co-countable ones."""

    name = "cocountable"
    index_kind = const.SYMBOLIC_UNCOUNTABLE

    def evaluate(self, s: SetExpr) -> MeasureValue:
        try:
            form = normalize_atoms(s)
        except OutsideFieldError:
            raise OutsideFieldError(
                "{} is outside the field of {}".format(s.to_text(), self.name)
            ) from None
        return Exact(1 if form.cofinite else 0)

    def whole_set(self) -> SetExpr:
        return CoListed(())


class RelativeDensity(DirectedSetMeasure):
    """μ(S) = δ(S ∩ T) / δ(T) for an eventually periodic T of positive density."""

    name = "relative-density"

    def __init__(self, support: SetExpr) -> None:
        form = normalize(support)
        if form.density() == 0:
            raise ValueError(
                "relative density needs a support of positive density, got {}".format(
                    support.to_text()
                )
            )
        self.support = support
        self._support_density = form.density()

    def evaluate(self, s: SetExpr) -> MeasureValue:
        try:
            restricted = normalize(Intersection(s, self.support)).density()
        except NotPeriodicError as error:
            raise OutsideFieldError(
                "{} is outside the field of {}: {}".format(s.to_text(), self.name, error)
            ) from None
        return Exact(restricted / self._support_density)

    def to_text(self) -> str:
        return "{}:{}".format(self.name, self.support.to_text())

    def __repr__(self) -> str:
        return "RelativeDensity({})".format(self.support.to_text())


class OverrideMeasure(DirectedSetMeasure):
    """A base measure with values replaced on selected sets. Used to exercise the
    axiom checker with deliberately corrupted measures."""

    name = "override"

    def __init__(
        self,
        base: DirectedSetMeasure,
        overrides: Sequence[Tuple[SetExpr, Fraction]],
        name: str = "corrupted",
    ) -> None:
        self.base = base
        self.overrides = tuple((s, Fraction(v)) for s, v in overrides)
        self.name = name
        self.index_kind = base.index_kind

    def evaluate(self, s: SetExpr) -> MeasureValue:
        for target, value in self.overrides:
            if equivalent(s, target):
                return Exact(value)
        return self.base.evaluate(s)

    def whole_set(self) -> SetExpr:
        return self.base.whole_set()


def measure_eval(measure: DirectedSetMeasure, s: SetExpr) -> MeasureValue:
    return measure.evaluate(s)


MEASURE_NAMES = ("periodic-density", "prefix-bounds", "cocountable", "relative-density:<set>")


def corrupted_density() -> OverrideMeasure:
    """PeriodicDensity with evens ↦ 3/4 and odds ↦ 1/2."""
    return OverrideMeasure(
        PeriodicDensity(),
        [(ArithProg(2, 2), Fraction(3, 4)), (ArithProg(1, 2), Fraction(1, 2))],
    )


def get_measure(name: str) -> DirectedSetMeasure:
    """Measure from its command-line name."""
    if name == PeriodicDensity.name:
        return PeriodicDensity()
    if name == PrefixBoundsDensity.name:
        return PrefixBoundsDensity()
    if name == CoCountable.name:
        return CoCountable()
    if name == "corrupted":
        return corrupted_density()
    if name.startswith(RelativeDensity.name + ":"):
        from rieszstat.io_utils.grammar import parse_set_expr

        return RelativeDensity(parse_set_expr(name.split(":", 1)[1]))
    raise ValueError(
        "Unknown measure '{}'. Supported measures: {}".format(name, MEASURE_NAMES)
    )


class AxiomReport(serializers.Serializable):
    """
    Outcome of `axioms_check`: pass/fail per axiom, number of instances checked, and
    the offending sets with their measure values for every failure.
    """

    AXIOMS = (
        "empty_null",
        "total_mass",
        "finite_interval_null",
        "finite_additivity",
        "null_monotone",
    )

    def __init__(
        self,
        measure: str,
        samples: int,
        seed: int,
        checked: Dict[str, int],
        failures: List[Dict[str, Any]],
    ) -> None:
        self.measure = measure
        self.samples = samples
        self.seed = seed
        self.checked = checked
        self.failures = failures

    @property
    def axioms(self) -> Dict[str, str]:
        failed = {failure["axiom"] for failure in self.failures}
        return {name: "fail" if name in failed else "pass" for name in self.AXIOMS}

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_plain(self) -> Dict[str, Any]:
        return {
            "measure": self.measure,
            "samples": self.samples,
            "seed": self.seed,
            "status": self.status,
            "axioms": self.axioms,
            "checked": dict(sorted(self.checked.items())),
            "failures": self.failures,
        }

    def to_text(self) -> str:
        lines = ["axioms of {} ({} samples): {}".format(self.measure, self.samples, self.status)]
        for name, outcome in self.axioms.items():
            lines.append("  {:<22} {} ({} checked)".format(name, outcome, self.checked.get(name, 0)))
        for failure in self.failures:
            lines.append(
                "  failure {}: sets {} values {}".format(
                    failure["axiom"], failure["sets"], failure["values"]
                )
            )
        return "\n".join(lines)


# failures kept per axiom in a report
_MAX_FAILURES = 10


def axioms_check(
    measure: DirectedSetMeasure, samples: Sequence[SetExpr], seed: int = settings.DEFAULT_SEED
) -> AxiomReport:
    """
    Check the directed-set measure axioms of `measure` on sampled sets: μ(∅) = 0,
    μ(A) = 1, μ(I) = 0 on finite order intervals, finite additivity on disjoint
    pairs, and C ⊆ B, μ(B) = 0 ⟹ μ(C) = 0. Disjointness and nesting are
    established symbolically; sets mentioning predicates are left out of the
    additivity check.

    Parameters
    ----------
    measure:
        measure to be checked
    samples:
        sets from the measure's field
    seed:
        seed for drawing partner sets and intervals

    Returns
    -------
        AxiomReport; failures carry the offending sets and their values
    """
    rng = settings.rng_for(seed)
    checked: Dict[str, int] = {name: 0 for name in AxiomReport.AXIOMS}
    failures: List[Dict[str, Any]] = []

    def fail(axiom: str, sets: Sequence[SetExpr], values: Sequence[Any]) -> None:
        if sum(1 for f in failures if f["axiom"] == axiom) < _MAX_FAILURES:
            failures.append(
                {
                    "axiom": axiom,
                    "sets": [s.to_text() for s in sets],
                    "values": [utils.to_plain(v) for v in values],
                }
            )
        LOGGER.debug("axiom {} fails on {}".format(axiom, [s.to_text() for s in sets]))

    def exact(s: SetExpr) -> Optional[Fraction]:
        value = measure.evaluate(s)
        if isinstance(value, Exact):
            return value.value
        return None

    checked["empty_null"] += 1
    if exact(EMPTY) != 0:
        fail("empty_null", [EMPTY], [measure.evaluate(EMPTY)])
    checked["total_mass"] += 1
    if exact(measure.whole_set()) != 1:
        fail("total_mass", [measure.whole_set()], [measure.evaluate(measure.whole_set())])

    index = measure.index
    if index.kind == const.NATURALS:
        for _ in range(max(len(samples) // 5, 1)):
            a = int(rng.integers(1, 65))
            b = a + int(rng.integers(0, 65))
            interval, finite = index.order_interval(a, b)
            checked["finite_interval_null"] += 1
            if finite and exact(interval) != 0:
                fail("finite_interval_null", [interval], [measure.evaluate(interval)])

    samples = list(samples)
    for position, first in enumerate(samples):
        partner = samples[int(rng.integers(len(samples)))]
        pairs = [(first, Complement(first)), (first, Intersection(partner, Complement(first)))]
        for left, right in pairs:
            if predicate_names(left) or predicate_names(right):
                continue
            if is_empty(Intersection(left, right)) is not True:
                continue
            values = [exact(left), exact(right), exact(Union(left, right))]
            if any(v is None for v in values):
                continue
            checked["finite_additivity"] += 1
            if values[2] != values[0] + values[1]:
                fail("finite_additivity", [left, right], values)

        nested = Intersection(first, partner)
        for outer in (partner, first):
            outer_value = exact(outer)
            if outer_value != 0:
                continue
            checked["null_monotone"] += 1
            if exact(nested) != 0:
                fail("null_monotone", [nested, outer], [measure.evaluate(nested), outer_value])

    report = AxiomReport(measure.to_text(), len(samples), seed, checked, failures)
    LOGGER.debug("axioms_check({}): {}".format(measure.to_text(), report.status))
    return report
