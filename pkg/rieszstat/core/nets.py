# nets.py
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
Finitely described nets over ℕ: an explicit prefix table followed by a tail rule.
Provides evaluation, masking by a characteristic function, pointwise lattice and
linear combinations, and subnets.
"""

import itertools
import logging

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import rieszstat.core.constants as const
import rieszstat.settings as settings

from rieszstat.core.closed_forms import (
    ClosedForm,
    UnitSweep,
    absolute_form,
    pick_extreme,
)
from rieszstat.core.exceptions import NotCofinalError, SpaceMismatchError
from rieszstat.core.index_sets import DirectedIndex
from rieszstat.core.lattice import RieszElement, RieszSpace, absolute, inf, sup
from rieszstat.core.set_algebra import is_empty, is_finite, iter_members, simplify
from rieszstat.core.set_expr import SetExpr, meet
from rieszstat.core.tail_rules import (
    Cell,
    ComposedTail,
    ComputedTail,
    EventuallyConstant,
    Masked,
    Piece,
    TailRule,
    is_dilation_set,
    tail_from_pieces,
)
from rieszstat.core.verdicts import Verdict

LOGGER = logging.getLogger(__name__)


class Net:
    """
    A net (x_n) indexed by ℕ with values in a Riesz space.

    Parameters
    ----------
    space:
        Riesz space the values live in
    tail:
        rule giving x_n for every n beyond the prefix
    prefix:
        explicit values for n = 1, ..., m (keys must be exactly 1..m)
    index:
        index set; only the naturals carry nets
    """

    def __init__(
        self,
        space: RieszSpace,
        tail: TailRule,
        prefix: Optional[Dict[int, RieszElement]] = None,
        index: Optional[DirectedIndex] = None,
    ) -> None:
        prefix = dict(prefix or {})
        if sorted(prefix) != list(range(1, len(prefix) + 1)):
            raise ValueError(
                "prefix indices must be 1..m without gaps, got {}".format(sorted(prefix))
            )
        for n, value in prefix.items():
            if value.space != space:
                raise SpaceMismatchError(
                    "prefix value at {} lives in {}, net in {}".format(
                        n, value.space.to_text(), space.to_text()
                    )
                )
        index = index or DirectedIndex.naturals()
        if index.kind != const.NATURALS:
            raise ValueError("nets are indexed by ℕ, got {}".format(index.to_text()))
        self.space = space
        self.tail = tail
        self.prefix = prefix
        self.index = index

    @classmethod
    def from_tail(cls, space: RieszSpace, tail: TailRule) -> "Net":
        return cls(space, tail)

    @classmethod
    def constant(cls, value: RieszElement) -> "Net":
        return cls(value.space, EventuallyConstant(value))

    @property
    def horizon(self) -> int:
        """Length m of the explicit prefix."""
        return len(self.prefix)

    def eval(self, n: int) -> RieszElement:
        if not isinstance(n, int) or n < 1:
            raise ValueError("index must be a positive integer, got {!r}".format(n))
        if n in self.prefix:
            return self.prefix[n]
        return self.tail.value(n, self.space)

    def values(self, stop: int, start: int = 1) -> List[RieszElement]:
        return [self.eval(n) for n in range(start, stop + 1)]

    def to_text(self) -> str:
        if not self.prefix:
            return self.tail.to_text()
        values = ", ".join("{}: {}".format(n, v.to_text()) for n, v in self.prefix.items())
        return "[{}] then {}".format(values, self.tail.to_text())

    def __repr__(self) -> str:
        return "Net({}, prefix={}, tail={})".format(
            self.space.to_text(), self.horizon, self.tail.to_text()
        )


def evaluate(net: Net, n: int) -> RieszElement:
    return net.eval(n)


def mask(net: Net, delta: SetExpr) -> Net:
    """x·𝒳_Δ: the net on Δ, zero off Δ."""
    zero = net.space.zero()
    prefix = {n: (v if delta.contains(n) else zero) for n, v in net.prefix.items()}
    return Net(net.space, Masked(delta, net.tail, net.space), prefix)


# ------------------------------------------------------------------------------
# pointwise combination


def _pointwise_op(op: str, q: Optional[Fraction]) -> Callable:
    if op == "sup":
        return sup
    if op == "inf":
        return inf
    if op == "add":
        return lambda u, v: u + v
    if op == "sub":
        return lambda u, v: u - v
    if op == "scale":
        return lambda u, v: u.scale(q)
    if op == "abs":
        return lambda u, v: absolute(u)
    raise ValueError(
        "unknown operation '{}', expected one of {}".format(op, const.COMBINE_OPS)
    )


def _sweep_piece(
    op: str, q: Optional[Fraction], left: Piece, right: Optional[Piece]
) -> Optional[Piece]:
    """Combination of pieces when a unit sweep is involved; None if not closed."""
    if op == "abs":
        return left.mapped(abs)
    if op == "scale":
        return left.mapped(lambda c: q * c)
    if isinstance(left, UnitSweep) and isinstance(right, UnitSweep):
        if (left.first, left.period) != (right.first, right.period):
            return None
        fn = {
            "sup": max,
            "inf": min,
            "add": lambda a, b: a + b,
            "sub": lambda a, b: a - b,
        }[op]
        return UnitSweep(left.first, left.period, fn(left.scale, right.scale))
    sweep, other = (left, right) if isinstance(left, UnitSweep) else (right, left)
    if not other.is_zero:
        return None
    if op == "add" or (op == "sub" and sweep is left):
        return sweep
    if op == "sub":
        return sweep.mapped(lambda c: -c)
    if op == "sup":
        return sweep.mapped(lambda c: max(c, Fraction(0)))
    return sweep.mapped(lambda c: min(c, Fraction(0)))


def _combine_pieces(
    op: str,
    q: Optional[Fraction],
    left: Piece,
    right: Optional[Piece],
    start: int,
    space: RieszSpace,
) -> Optional[Tuple[Piece, int]]:
    """Closed piece equal to op(left, right) from the returned threshold on."""
    if isinstance(left, UnitSweep) or isinstance(right, UnitSweep):
        piece = _sweep_piece(op, q, left, right)
        if piece is None:
            return None
        if isinstance(piece, UnitSweep) and piece.scale == 0:
            piece = ClosedForm.zero(space)
        return piece, start
    if op == "add":
        return left + right, start
    if op == "sub":
        return left - right, start
    if op == "scale":
        return left.scale(q), start
    if op == "abs":
        return absolute_form(left, start)
    return pick_extreme(left, right, largest=(op == "sup"), start=start)


def _refine(
    left: List[Cell], right: Optional[List[Cell]]
) -> List[Tuple[SetExpr, Piece, Optional[Piece]]]:
    if right is None:
        return [(cell, piece, None) for cell, piece in left]
    cells = []
    for (a_cell, a_piece), (b_cell, b_piece) in itertools.product(left, right):
        cell = meet(a_cell, b_cell)
        if is_empty(cell) is True:
            continue
        cells.append((simplify(cell), a_piece, b_piece))
    return cells


def combine(
    a: Net, b: Optional[Net] = None, op: str = "add", q: Optional[Fraction] = None
) -> Net:
    """
    Pointwise combination of nets.

    Parameters
    ----------
    a, b:
        operands; `b` is ignored by the unary operations `scale` and `abs`
    op:
        one of sup, inf, add, sub, scale, abs
    q:
        scalar for `scale`

    Returns
    -------
        net whose tail is combined cell by cell where the closed forms allow it;
        indices before the thresholds of such a combination are moved into the
        prefix. Otherwise the tail is evaluated pointwise on demand.
    """
    fn = _pointwise_op(op, q)
    unary = op in ("scale", "abs")
    if op == "scale":
        if q is None:
            raise ValueError("operation 'scale' needs a scalar q")
        q = Fraction(q)
    if not unary:
        if b is None:
            raise ValueError("operation '{}' needs two nets".format(op))
        if a.space != b.space:
            raise SpaceMismatchError(
                "cannot combine nets in {} and {}".format(
                    a.space.to_text(), b.space.to_text()
                )
            )
    other = a if unary else b
    horizon = max(a.horizon, other.horizon)

    def pointwise_value(n: int) -> RieszElement:
        return fn(a.eval(n), other.eval(n))

    description = "{}({})".format(
        op, ", ".join(t.to_text() for t in ([a.tail] if unary else [a.tail, b.tail]))
    )
    left_cells = a.tail.pieces()
    right_cells = None if unary else b.tail.pieces()
    combined: Optional[List[Cell]] = None
    if left_cells is not None and (unary or right_cells is not None):
        combined = []
        for cell, left, right in _refine(left_cells, right_cells):
            result = _combine_pieces(op, q, left, right, horizon + 1, a.space)
            if result is None:
                combined = None
                break
            piece, threshold = result
            horizon = max(horizon, threshold - 1)
            combined.append((cell, piece))
    if combined is None:
        LOGGER.debug("{}: no closed combination, evaluating pointwise".format(description))
        tail: TailRule = ComputedTail(pointwise_value, description)
    else:
        tail = tail_from_pieces(combined, a.space)
    prefix = {n: pointwise_value(n) for n in range(1, horizon + 1)}
    return Net(a.space, tail, prefix)


# ------------------------------------------------------------------------------
# subnets


class Selector(ABC):
    """A map t: ℕ → ℕ selecting a subnet n ↦ x_{t(n)}."""

    @abstractmethod
    def select(self, k: int) -> int:
        pass

    def dilation(self) -> Optional[int]:
        """d if t(k) = d·k, else None."""
        return None

    @abstractmethod
    def to_text(self) -> str:
        pass


class InclusionSelector(Selector):
    """Enumeration of an infinite subset Δ ⊆ ℕ in increasing order."""

    def __init__(self, delta: SetExpr) -> None:
        self.delta = delta
        self._members: List[int] = []

    def select(self, k: int) -> int:
        if k < 1:
            raise ValueError("selector index must be positive, got {}".format(k))
        while len(self._members) < k:
            start = self._members[-1] + 1 if self._members else 1
            found = next(
                iter_members(self.delta, start, start + settings.MEMBER_SEARCH_CAP), None
            )
            if found is None:
                raise NotCofinalError(
                    "no member of {} beyond {}".format(self.delta.to_text(), start - 1),
                    witness=start,
                )
            self._members.append(found)
        return self._members[k - 1]

    def dilation(self) -> Optional[int]:
        return is_dilation_set(self.delta)

    def to_text(self) -> str:
        return "in({})".format(self.delta.to_text())


class MapSelector(Selector):
    """An explicit map k ↦ t(k); `strictly_increasing` declares monotonicity for all
    k, which makes the map cofinal in ℕ."""

    def __init__(
        self,
        name: str,
        fn: Callable[[int], int],
        strictly_increasing: bool = False,
        factor: Optional[int] = None,
    ) -> None:
        self.name = name
        self.fn = fn
        self.strictly_increasing = strictly_increasing
        self.factor = factor

    def select(self, k: int) -> int:
        return self.fn(k)

    def dilation(self) -> Optional[int]:
        return self.factor

    def to_text(self) -> str:
        return "map({})".format(self.name)


SELECTORS: Dict[str, MapSelector] = {
    "identity": MapSelector("identity", lambda k: k, True, factor=1),
    "double": MapSelector("double", lambda k: 2 * k, True, factor=2),
    "square": MapSelector("square", lambda k: k * k, True),
}


def subnet(
    net: Net, selector: Selector, horizon: int = settings.CHECK_HORIZON
) -> Tuple[Net, Verdict]:
    """
    The subnet k ↦ x_{t(k)} together with the cofinality verdict.

    Raises
    ------
    NotCofinalError
        if the selected indices are bounded; `witness` is an index no selected
        index reaches
    """
    if isinstance(selector, InclusionSelector):
        finite = is_finite(selector.delta)
        if finite is True:
            members = list(iter_members(selector.delta, 1, settings.MEMBER_SEARCH_CAP))
            bound = max(members, default=0) + 1
            raise NotCofinalError(
                "{} is finite, bounded by {}".format(selector.delta.to_text(), bound),
                witness=bound,
            )
        if finite is None:
            verdict = Verdict.reject(
                const.CLAUSE_UNDETERMINED,
                reason="finiteness of {} undecided".format(selector.delta.to_text()),
            )
        else:
            verdict = Verdict.accept(
                cofinal="infinite subset of ℕ", selector=selector.to_text()
            )
    else:
        selected = [selector.select(k) for k in range(1, horizon + 2)]
        increasing = all(s < t for s, t in zip(selected, selected[1:]))
        if not increasing and not selector.strictly_increasing:
            bound = max(selected) + 1
            raise NotCofinalError(
                "{} is not increasing on 1..{}; no selected index up to there reaches "
                "{}".format(selector.to_text(), horizon + 1, bound),
                witness=bound,
            )
        if selector.strictly_increasing:
            verdict = Verdict.accept(cofinal="strictly increasing", selector=selector.to_text())
        else:
            verdict = Verdict.accept(
                cofinal="increasing on the window", selector=selector.to_text(), horizon=horizon
            )
    prefix = {k: net.eval(selector.select(k)) for k in range(1, horizon + 1)}
    return Net(net.space, ComposedTail(net, selector), prefix), verdict
