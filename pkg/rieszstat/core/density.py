# density.py
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
Asymptotic density δ(S) = lim (1/k)|S ∩ [1, k]| of subsets of ℕ.

Eventually periodic sets get their exact density |R|/d. Any other set gets lower and
upper estimates from a geometric schedule of horizons: at each horizon k_j the prefix
ratio and the ratio over the block (k_{j-1}, k_j] enclose the local behaviour.
"""

import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import rieszstat.settings as settings
import rieszstat.utils.misc as utils

from rieszstat.core.periodic import try_normalize
from rieszstat.core.set_algebra import count_upto
from rieszstat.core.set_expr import SetExpr, uses_atoms
from rieszstat.core.verdicts import Undetermined

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Exact:
    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))
        if not 0 <= self.value <= 1:
            raise ValueError(
                "measure value {} outside [0, 1]".format(utils.format_rational(self.value))
            )

    def to_text(self) -> str:
        return "{} (exact)".format(utils.format_rational(self.value))


@dataclass(frozen=True)
class Bounds:
    lo: Fraction
    hi: Fraction
    horizon: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not 0 <= self.lo <= self.hi <= 1:
            raise ValueError(
                "invalid bounds [{}, {}]".format(
                    utils.format_rational(self.lo), utils.format_rational(self.hi)
                )
            )

    @property
    def collapsed(self) -> bool:
        return self.lo == self.hi

    def to_text(self) -> str:
        return "[{}, {}] (bounds, horizon {})".format(
            utils.format_rational(self.lo), utils.format_rational(self.hi), self.horizon
        )


MeasureValue = Union[Exact, Bounds, Undetermined]


def is_exactly(value: MeasureValue, target: Union[int, Fraction]) -> bool:
    return isinstance(value, Exact) and value.value == target


def prefix_density(s: SetExpr, k: int) -> Fraction:
    """(1/k)·|s ∩ [1..k]| as an exact rational."""
    if k < 1:
        raise ValueError("prefix density needs k >= 1, got {}".format(k))
    return Fraction(count_upto(s, k), k)


def evaluation_points(
    horizon: Optional[int] = None, schedule: Optional[Sequence[int]] = None
) -> List[int]:
    """Schedule points not exceeding the horizon, followed by the horizon itself."""
    schedule = tuple(schedule or settings.DEFAULT_HORIZON_SCHEDULE)
    horizon = horizon or max(schedule)
    points = sorted(k for k in set(schedule) if 1 <= k <= horizon)
    if not points or points[-1] != horizon:
        points.append(horizon)
    return points


def density_profile(
    s: SetExpr, horizon: Optional[int] = None, schedule: Optional[Sequence[int]] = None
) -> List[Tuple[int, Fraction, Fraction]]:
    """
    (k_j, lo_j, hi_j) for every evaluation point after the first. The local interval
    at k_j spans the prefix ratio and the block ratio; lo_j/hi_j are the running
    inf/sup of these intervals over the tail starting at k_j, so lo_j is
    non-decreasing and hi_j non-increasing in j.
    """
    points = evaluation_points(horizon, schedule)
    counts = [count_upto(s, k) for k in points]
    local: List[Tuple[int, Fraction, Fraction]] = []
    for j in range(1, len(points)):
        prefix = Fraction(counts[j], points[j])
        block = Fraction(counts[j] - counts[j - 1], points[j] - points[j - 1])
        local.append((points[j], min(prefix, block), max(prefix, block)))
    profile: List[Tuple[int, Fraction, Fraction]] = []
    lo, hi = Fraction(1), Fraction(0)
    for k, low, high in reversed(local):
        lo, hi = min(lo, low), max(hi, high)
        profile.append((k, lo, hi))
    profile.reverse()
    return profile


def density(
    s: SetExpr, horizon: Optional[int] = None, schedule: Optional[Sequence[int]] = None
) -> MeasureValue:
    """
    Exact(|R|/d) for eventually periodic s (finitely many exceptions are ignored);
    otherwise Bounds taken from the last evaluation point of the schedule.
    """
    if uses_atoms(s):
        raise ValueError("density is defined for subsets of ℕ, got {}".format(s))
    form = try_normalize(s)
    if form is not None:
        return Exact(form.density())
    profile = density_profile(s, horizon, schedule)
    if not profile:
        return Undetermined("fewer than two evaluation points below the horizon")
    k, lo, hi = profile[-1]
    LOGGER.debug("density bounds of {} at {}: [{}, {}]".format(s, k, lo, hi))
    return Bounds(lo, hi, k)
