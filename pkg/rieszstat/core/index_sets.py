# index_sets.py
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

import itertools

from typing import Any, Tuple

import rieszstat.core.constants as const

from rieszstat.core.descriptors import ReadOnlyProperty, set_readonly
from rieszstat.core.exceptions import NotComparableError
from rieszstat.core.set_expr import FiniteList, SetExpr, full_set


class DirectedIndex:
    """
    Directed index set of a net.

    `naturals`: ℕ = {1, 2, ...} with the usual order. `pair_naturals`: ℕ×ℕ with the
    componentwise order. `symbolic_uncountable`: opaque string atoms of an
    uncountable set, carrying the indiscrete preorder (every two atoms are below each
    other), which is directed and has no finite order intervals.
    """

    kind = ReadOnlyProperty(str)

    def __init__(self, kind: str = const.NATURALS) -> None:
        if kind not in const.INDEX_KINDS:
            raise ValueError(
                "Unknown index kind '{}'. Supported kinds: {}".format(
                    kind, const.INDEX_KINDS
                )
            )
        set_readonly(self, kind=kind)

    @classmethod
    def naturals(cls) -> "DirectedIndex":
        return cls(const.NATURALS)

    @classmethod
    def pair_naturals(cls) -> "DirectedIndex":
        return cls(const.PAIR_NATURALS)

    @classmethod
    def symbolic_uncountable(cls) -> "DirectedIndex":
        return cls(const.SYMBOLIC_UNCOUNTABLE)

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, DirectedIndex) and self.kind == other.kind

    def __hash__(self) -> int:
        return hash(self.kind)

    def __repr__(self) -> str:
        return "DirectedIndex({!r})".format(self.kind)

    def to_text(self) -> str:
        return self.kind

    def is_valid(self, a: Any) -> bool:
        if self.kind == const.NATURALS:
            return isinstance(a, int) and not isinstance(a, bool) and a >= 1
        if self.kind == const.PAIR_NATURALS:
            return (
                isinstance(a, tuple)
                and len(a) == 2
                and all(isinstance(c, int) and c >= 1 for c in a)
            )
        return isinstance(a, str) and bool(a)

    def _validate(self, *indices: Any) -> None:
        for a in indices:
            if not self.is_valid(a):
                raise ValueError("{!r} is not an index of {}".format(a, self.kind))

    def leq(self, a: Any, b: Any) -> bool:
        self._validate(a, b)
        if self.kind == const.NATURALS:
            return a <= b
        if self.kind == const.PAIR_NATURALS:
            return a[0] <= b[0] and a[1] <= b[1]
        return True

    def join(self, a: Any, b: Any) -> Any:
        """Upper bound c of a and b."""
        self._validate(a, b)
        if self.kind == const.NATURALS:
            return max(a, b)
        if self.kind == const.PAIR_NATURALS:
            return (max(a[0], b[0]), max(a[1], b[1]))
        return max(a, b)

    def order_interval(self, a: Any, b: Any) -> Tuple[SetExpr, bool]:
        """[a, b] = {x : a <= x <= b} and whether it is finite."""
        if not self.leq(a, b):
            raise NotComparableError(
                "order interval [{}, {}] requires {} <= {}".format(a, b, a, b)
            )
        if self.kind == const.NATURALS:
            return FiniteList(tuple(range(a, b + 1))), True
        if self.kind == const.PAIR_NATURALS:
            grid = itertools.product(range(a[0], b[0] + 1), range(a[1], b[1] + 1))
            return FiniteList(tuple(grid)), True
        return full_set(), False


def join(ix: DirectedIndex, a: Any, b: Any) -> Any:
    return ix.join(a, b)


def order_interval(ix: DirectedIndex, a: Any, b: Any) -> Tuple[SetExpr, bool]:
    return ix.order_interval(a, b)
