# tail_rules.py
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
Finite descriptions of the values of a net beyond its explicit prefix.

Every rule reports a partition of ℕ into cells (set expressions), each carrying a
closed form or a unit sweep; the checkers reason cell by cell. Rules without such a
partition (compositions with arbitrary selectors, pointwise combinations that do not
close) return None from `pieces` and are only evaluated pointwise.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import TYPE_CHECKING, Callable, List, Optional, Tuple, Union

import rieszstat.utils.misc as utils

from rieszstat.core.closed_forms import ClosedForm, UnitSweep
from rieszstat.core.lattice import RieszElement, RieszSpace
from rieszstat.core.set_algebra import is_empty, simplify
from rieszstat.core.set_expr import FULL, Complement, SetExpr, meet
from rieszstat.core.periodic import try_normalize

if TYPE_CHECKING:
    from rieszstat.core.nets import Net, Selector

Piece = Union[ClosedForm, UnitSweep]
Cell = Tuple[SetExpr, Piece]


class TailRule(ABC):
    """Base class of tail rules."""

    @abstractmethod
    def value(self, n: int, space: RieszSpace) -> RieszElement:
        """Value of the net at index n."""

    @abstractmethod
    def pieces(self) -> Optional[List[Cell]]:
        """Partition of ℕ into cells with their closed forms, or None."""

    @abstractmethod
    def to_text(self) -> str:
        """Expression in the tail grammar."""

    def __str__(self) -> str:
        return self.to_text()


class ClosedTail(TailRule):
    """A single closed form c + h/n + Σ g·r^n on all of ℕ; `sum(...)` in text."""

    def __init__(self, form: ClosedForm) -> None:
        self.form = form

    def value(self, n: int, space: RieszSpace) -> RieszElement:
        return self.form.value(n)

    def pieces(self) -> List[Cell]:
        return [(FULL, self.form)]

    def to_text(self) -> str:
        parts = []
        if not self.form.constant.is_zero or self.form.is_zero:
            parts.append("const({})".format(self.form.constant.to_text()))
        if not self.form.harmonic.is_zero:
            parts.append("harmonic({})".format(self.form.harmonic.to_text()))
        for r, g in self.form.geometric:
            parts.append("geometric({}, {})".format(g.to_text(), utils.format_rational(r)))
        if len(parts) == 1:
            return parts[0]
        return "sum({})".format(", ".join(parts))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ClosedTail) and self.form == other.form

    def __hash__(self) -> int:
        return hash(self.form)

    def __repr__(self) -> str:
        return "{}({})".format(type(self).__name__, self.to_text())


class EventuallyConstant(ClosedTail):
    def __init__(self, value: RieszElement) -> None:
        super().__init__(ClosedForm.constant_form(value))


class HarmonicScale(ClosedTail):
    """(1/n)·u"""

    def __init__(self, value: RieszElement) -> None:
        super().__init__(ClosedForm.harmonic_form(value))


class GeometricScale(ClosedTail):
    """r^n·u with 0 < r < 1"""

    def __init__(self, value: RieszElement, ratio: Fraction) -> None:
        super().__init__(ClosedForm.geometric_form(value, Fraction(ratio)))


def linear_tail(*tails: ClosedTail) -> ClosedTail:
    """Sum of closed tails."""
    form = tails[0].form
    for tail in tails[1:]:
        form = form + tail.form
    return ClosedTail(form)


class Switch(TailRule):
    """`inside` on the set S, `outside` off S."""

    def __init__(self, selector_set: SetExpr, inside: TailRule, outside: TailRule) -> None:
        self.selector_set = selector_set
        self.inside = inside
        self.outside = outside

    def value(self, n: int, space: RieszSpace) -> RieszElement:
        if self.selector_set.contains(n):
            return self.inside.value(n, space)
        return self.outside.value(n, space)

    def pieces(self) -> Optional[List[Cell]]:
        inside, outside = self.inside.pieces(), self.outside.pieces()
        if inside is None or outside is None:
            return None
        cells: List[Cell] = []
        for region, branch in (
            (self.selector_set, inside),
            (Complement(self.selector_set), outside),
        ):
            for cell, piece in branch:
                restricted = meet(region, cell)
                if is_empty(restricted) is True:
                    continue
                cells.append((simplify(restricted), piece))
        return cells

    def to_text(self) -> str:
        return "switch({},{},{})".format(
            self.selector_set.to_text(), self.inside.to_text(), self.outside.to_text()
        )

    def __repr__(self) -> str:
        return "Switch({})".format(self.to_text())


class SpikeOn(Switch):
    """The constant `spike` on S, `base` elsewhere."""

    def __init__(self, spike_set: SetExpr, spike: RieszElement, base: TailRule) -> None:
        super().__init__(spike_set, EventuallyConstant(spike), base)
        self.spike = spike
        self.base = base

    def to_text(self) -> str:
        return "spike({},{},{})".format(
            self.selector_set.to_text(), self.spike.to_text(), self.base.to_text()
        )


class Masked(Switch):
    """`inner` on Δ, zero off Δ."""

    def __init__(self, delta: SetExpr, inner: TailRule, space: RieszSpace) -> None:
        super().__init__(delta, inner, EventuallyConstant(space.zero()))
        self.inner = inner

    def to_text(self) -> str:
        return "masked({},{})".format(self.selector_set.to_text(), self.inner.to_text())


class InterleavedUnits(TailRule):
    """c·e_k at index first + (k−1)·period, zero elsewhere (sequence spaces only)."""

    def __init__(self, first: int, period: int, scale: Fraction, space: RieszSpace) -> None:
        if not space.is_sparse:
            raise ValueError(
                "interleaved unit vectors need a sequence space, got {}".format(
                    space.to_text()
                )
            )
        self.sweep = UnitSweep(first, period, Fraction(scale))
        self.space = space

    def value(self, n: int, space: RieszSpace) -> RieszElement:
        return self.sweep.value(n, space)

    def pieces(self) -> List[Cell]:
        support = self.sweep.support_set()
        cells: List[Cell] = [(support, self.sweep)]
        rest = simplify(Complement(support))
        if is_empty(rest) is not True:
            cells.append((rest, ClosedForm.zero(self.space)))
        return cells

    def to_text(self) -> str:
        return self.sweep.to_text()

    def __repr__(self) -> str:
        return "InterleavedUnits({})".format(self.to_text())


class ComposedTail(TailRule):
    """n ↦ net(t(n)) for a selector t. Closed only for the dilation n ↦ d·n of a
    closed tail."""

    def __init__(self, net: "Net", selector: "Selector") -> None:
        self.net = net
        self.selector = selector

    def value(self, n: int, space: RieszSpace) -> RieszElement:
        return self.net.eval(self.selector.select(n))

    def pieces(self) -> Optional[List[Cell]]:
        inner = self.net.tail.pieces()
        if inner is None or len(inner) != 1 or not isinstance(inner[0][1], ClosedForm):
            return None
        piece = inner[0][1]
        if piece.is_constant:
            return [(FULL, piece)]
        factor = self.selector.dilation()
        if factor is None:
            return None
        return [(FULL, piece.dilate(factor))]

    def to_text(self) -> str:
        return "composed({})".format(self.selector.to_text())


class ComputedTail(TailRule):
    """Pointwise combination evaluated on demand; carries no symbolic cells."""

    def __init__(self, fn: Callable[[int], RieszElement], description: str) -> None:
        self.fn = fn
        self.description = description

    def value(self, n: int, space: RieszSpace) -> RieszElement:
        return self.fn(n)

    def pieces(self) -> None:
        return None

    def to_text(self) -> str:
        return "computed({})".format(self.description)


def tail_from_piece(piece: Piece, space: RieszSpace) -> TailRule:
    if isinstance(piece, UnitSweep):
        return InterleavedUnits(piece.first, piece.period, piece.scale, space)
    return ClosedTail(piece)


def tail_from_pieces(cells: List[Cell], space: RieszSpace) -> TailRule:
    """Nested switches over a partition of ℕ; the last cell is the remainder."""
    merged: List[Cell] = []
    for cell, piece in cells:
        for position, (other, other_piece) in enumerate(merged):
            if other_piece == piece:
                merged[position] = (simplify(other | cell), piece)
                break
        else:
            merged.append((cell, piece))
    tail = tail_from_piece(merged[-1][1], space)
    for cell, piece in reversed(merged[:-1]):
        tail = Switch(cell, tail_from_piece(piece, space), tail)
    return tail


def spike_sets(tail: TailRule) -> List[SetExpr]:
    """Selector sets of all switches in the rule and supports of unit sweeps."""
    found: List[SetExpr] = []
    if isinstance(tail, Switch):
        found.append(tail.selector_set)
        found += spike_sets(tail.inside) + spike_sets(tail.outside)
    elif isinstance(tail, InterleavedUnits):
        found.append(tail.sweep.support_set())
    unique: List[SetExpr] = []
    for s in found:
        if s not in unique:
            unique.append(s)
    return unique


def is_dilation_set(s: SetExpr) -> Optional[int]:
    """d if s = {d, 2d, 3d, ...}, else None."""
    form = try_normalize(s)
    if form is None or form.plus or form.residues != (0,):
        return None
    if form.minus != ():
        return None
    return form.period
