# periodic.py
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
Canonical forms of set expressions.

Over ℕ, boolean combinations of finite sets and arithmetic progressions are
eventually periodic: membership of n is decided by n mod d, up to finitely many
exceptions. Over a symbolic uncountable index set, boolean combinations of listed and
co-listed atoms are either finite or cofinite atom sets.
"""

import functools
import logging
import math
import operator

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, FrozenSet, Iterator, Optional, Tuple

import rieszstat.settings as settings

from rieszstat.core.exceptions import NotPeriodicError, OutsideFieldError
from rieszstat.core.set_expr import (
    ArithProg,
    CoListed,
    Complement,
    FiniteList,
    Intersection,
    Listed,
    PredicateSampled,
    SetExpr,
    Union,
)

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class EventuallyPeriodic:
    """
    n ∈ S  iff  (n mod period ∈ residues, unless n ∈ minus) or n ∈ plus.

    The exceptions `plus` (members outside the periodic pattern) and `minus`
    (non-members inside it) are finite and disjoint from each other. With the period
    minimal, the form is unique for a given set.
    """

    period: int
    residues: Tuple[int, ...]
    plus: Tuple[int, ...] = ()
    minus: Tuple[int, ...] = ()

    def contains(self, n: int) -> bool:
        if n in self.plus:
            return True
        if n in self.minus:
            return False
        return n % self.period in self.residues

    def _periodic_count(self, k: int) -> int:
        total = 0
        for r in self.residues:
            if r == 0:
                total += k // self.period
            elif k >= r:
                total += (k - r) // self.period + 1
        return total

    def count(self, k: int) -> int:
        """|S ∩ [1, k]|"""
        if k < 1:
            return 0
        return (
            self._periodic_count(k)
            + sum(1 for n in self.plus if n <= k)
            - sum(1 for n in self.minus if n <= k)
        )

    def density(self) -> Fraction:
        return Fraction(len(self.residues), self.period)

    def is_empty(self) -> bool:
        return not self.residues and not self.plus

    def is_finite(self) -> bool:
        return not self.residues

    def last_exception(self) -> int:
        return max(self.plus + self.minus, default=0)

    def members(self, start: int = 1, stop: Optional[int] = None) -> Iterator[int]:
        """Members n with start <= n (and n <= stop, if given), increasing."""
        n = max(start, 1)
        threshold = self.last_exception()
        while stop is None or n <= stop:
            if self.is_finite() and n > threshold:
                return
            if n > threshold:
                # jump to the next residue class member
                r = n % self.period
                step = min((res - r) % self.period for res in self.residues)
                n += step
                if stop is not None and n > stop:
                    return
                yield n
                n += 1
                continue
            if self.contains(n):
                yield n
            n += 1

    def to_set_expr(self) -> SetExpr:
        """A set expression with this normal form."""
        if not self.residues:
            return FiniteList(self.plus)
        if self.period == 1:
            base: SetExpr = Complement(FiniteList(()))
            if not self.minus:
                return base
            return Complement(FiniteList(self.minus))
        progressions = [ArithProg(r if r else self.period, self.period) for r in self.residues]
        base = progressions[0]
        for progression in progressions[1:]:
            base = Union(base, progression)
        # ArithProg(r, d) with r < d starts at the first member; the residue-0 class
        # starts at d, so no extra exceptions arise from the progressions themselves
        if self.plus:
            base = Union(base, FiniteList(self.plus))
        if self.minus:
            base = Intersection(base, Complement(FiniteList(self.minus)))
        return base

    def describe(self) -> str:
        parts = ["period {}".format(self.period)]
        parts.append("residues {" + ",".join(str(r) for r in self.residues) + "}")
        if self.plus:
            parts.append("exceptions +{" + ",".join(str(n) for n in self.plus) + "}")
        if self.minus:
            parts.append("exceptions -{" + ",".join(str(n) for n in self.minus) + "}")
        return ", ".join(parts)


def _minimal_period(period: int, residues: FrozenSet[int]) -> Tuple[int, Tuple[int, ...]]:
    for p in range(1, period + 1):
        if period % p:
            continue
        if all(((r + p) % period in residues) == (r in residues) for r in range(period)):
            return p, tuple(sorted({r % p for r in residues}))
    return period, tuple(sorted(residues))


def _from_pattern(
    period: int, residues: FrozenSet[int], member: Callable[[int], bool], threshold: int
) -> EventuallyPeriodic:
    period, reduced = _minimal_period(period, residues)
    plus, minus = [], []
    for n in range(1, threshold + 1):
        periodic = n % period in reduced
        actual = member(n)
        if actual and not periodic:
            plus.append(n)
        elif periodic and not actual:
            minus.append(n)
    return EventuallyPeriodic(period, reduced, tuple(plus), tuple(minus))


def _combine(
    left: EventuallyPeriodic, right: EventuallyPeriodic, op: Callable[[bool, bool], bool]
) -> EventuallyPeriodic:
    period = left.period * right.period // math.gcd(left.period, right.period)
    if period > settings.MAX_PERIOD:
        raise NotPeriodicError(
            "period {} exceeds settings.MAX_PERIOD = {}".format(
                period, settings.MAX_PERIOD
            )
        )
    residues = frozenset(
        r
        for r in range(period)
        if op(r % left.period in left.residues, r % right.period in right.residues)
    )
    threshold = max(left.last_exception(), right.last_exception())
    return _from_pattern(
        period, residues, lambda n: op(left.contains(n), right.contains(n)), threshold
    )


@functools.lru_cache(maxsize=65536)
def normalize(s: SetExpr) -> EventuallyPeriodic:
    """
    Canonical eventually periodic form of a set expression over ℕ built from finite
    lists, arithmetic progressions and boolean combinators.

    Raises
    ------
    NotPeriodicError
        for expressions involving `pred:<name>` oracles, atoms or index pairs
    """
    if isinstance(s, FiniteList):
        if not all(isinstance(n, int) and n >= 1 for n in s.indices):
            raise NotPeriodicError("{} is not a finite subset of ℕ".format(s.to_text()))
        return EventuallyPeriodic(1, (), tuple(s.indices), ())
    if isinstance(s, ArithProg):
        r = s.a % s.d
        minus = tuple(n for n in range(1, s.a) if n % s.d == r)
        return EventuallyPeriodic(s.d, (r,), (), minus)
    if isinstance(s, Complement):
        inner = normalize(s.inner)
        residues = tuple(r for r in range(inner.period) if r not in inner.residues)
        return EventuallyPeriodic(inner.period, residues, inner.minus, inner.plus)
    if isinstance(s, Union):
        return _combine(normalize(s.left), normalize(s.right), operator.or_)
    if isinstance(s, Intersection):
        return _combine(normalize(s.left), normalize(s.right), operator.and_)
    if isinstance(s, PredicateSampled):
        raise NotPeriodicError(
            "{} is only available through prefix counts".format(s.to_text())
        )
    raise NotPeriodicError("{} is not a subset of ℕ".format(s.to_text()))


def try_normalize(s: SetExpr) -> Optional[EventuallyPeriodic]:
    try:
        return normalize(s)
    except NotPeriodicError:
        return None


@dataclass(frozen=True)
class AtomForm:
    """Finite (cofinite=False) or cofinite (cofinite=True) set of atoms."""

    cofinite: bool
    atoms: FrozenSet[str]

    def is_empty(self) -> bool:
        return not self.cofinite and not self.atoms

    def to_set_expr(self) -> SetExpr:
        if self.cofinite:
            return CoListed(tuple(self.atoms))
        return Listed(tuple(self.atoms))


@functools.lru_cache(maxsize=65536)
def normalize_atoms(s: SetExpr) -> AtomForm:
    """Canonical form of a boolean combination of listed and co-listed atoms."""
    if isinstance(s, Listed):
        return AtomForm(False, frozenset(s.atoms))
    if isinstance(s, CoListed):
        return AtomForm(True, frozenset(s.atoms))
    if isinstance(s, FiniteList) and all(isinstance(a, str) for a in s.indices):
        return AtomForm(False, frozenset(s.indices))
    if isinstance(s, Complement):
        inner = normalize_atoms(s.inner)
        return AtomForm(not inner.cofinite, inner.atoms)
    if isinstance(s, (Union, Intersection)):
        left, right = normalize_atoms(s.left), normalize_atoms(s.right)
        if isinstance(s, Intersection):
            # De Morgan: A ∩ B = ~(~A ∪ ~B)
            left = AtomForm(not left.cofinite, left.atoms)
            right = AtomForm(not right.cofinite, right.atoms)
        if left.cofinite and right.cofinite:
            joined = AtomForm(True, left.atoms & right.atoms)
        elif left.cofinite:
            joined = AtomForm(True, left.atoms - right.atoms)
        elif right.cofinite:
            joined = AtomForm(True, right.atoms - left.atoms)
        else:
            joined = AtomForm(False, left.atoms | right.atoms)
        if isinstance(s, Intersection):
            return AtomForm(not joined.cofinite, joined.atoms)
        return joined
    raise OutsideFieldError(
        "{} is not a combination of listed/co-listed atoms".format(s.to_text())
    )
