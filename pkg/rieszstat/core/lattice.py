# lattice.py
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
Riesz spaces with exact rational coordinates and their lattice operations.

Three instances are available: the rationals (a desk-scale model of ℝ), ℚⁿ with the
pointwise order, and finitely supported rational sequences with the pointwise order
(a desk-scale model of c₀). Coordinates are numbered from 1 in all of them.
"""

import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

import rieszstat.core.constants as const
import rieszstat.utils.misc as utils

from rieszstat.core.descriptors import ReadOnlyProperty, set_readonly
from rieszstat.core.exceptions import (
    NotDedekindCompleteError,
    NotPositiveError,
    SpaceMismatchError,
)
from rieszstat.core.verdicts import Verdict

LOGGER = logging.getLogger(__name__)

Rational = Union[int, Fraction]


class RieszSpace:
    """
    A Riesz space instance.

    Parameters
    ----------
    kind:
        `rationals`, `vector` or `finsupp`
    dimension:
        number of coordinates of a `vector` space
    """

    kind = ReadOnlyProperty(str)
    dimension = ReadOnlyProperty(int)

    def __init__(self, kind: str, dimension: Optional[int] = None) -> None:
        if kind == const.RATIONALS:
            dimension = 1
        elif kind == const.RATIONAL_VECTOR:
            if dimension is None or dimension < 1:
                raise ValueError(
                    "vector space needs dimension >= 1, got {}".format(dimension)
                )
        elif kind == const.FIN_SUPP_SEQ:
            dimension = 0
        else:
            raise ValueError(
                "Unknown space kind '{}'. Supported kinds: {}".format(
                    kind, (const.RATIONALS, const.RATIONAL_VECTOR, const.FIN_SUPP_SEQ)
                )
            )
        set_readonly(self, kind=kind, dimension=dimension)

    @classmethod
    def rationals(cls) -> "RieszSpace":
        return cls(const.RATIONALS)

    @classmethod
    def vector(cls, dimension: int) -> "RieszSpace":
        return cls(const.RATIONAL_VECTOR, dimension)

    @classmethod
    def finsupp(cls) -> "RieszSpace":
        return cls(const.FIN_SUPP_SEQ)

    @classmethod
    def from_text(cls, text: str) -> "RieszSpace":
        """Space from its name: `rationals`, `vector(n)` or `finsupp`."""
        text = text.strip().replace(" ", "")
        if text.startswith(const.RATIONAL_VECTOR + "(") and text.endswith(")"):
            dimension = text[len(const.RATIONAL_VECTOR) + 1 : -1]
            if not dimension.isdigit():
                raise ValueError("invalid dimension in '{}'".format(text))
            return cls.vector(int(dimension))
        return cls(text)

    @property
    def is_sparse(self) -> bool:
        return self.kind == const.FIN_SUPP_SEQ

    @property
    def dedekind_complete(self) -> bool:
        return not self.is_sparse

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RieszSpace)
            and self.kind == other.kind
            and self.dimension == other.dimension
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.dimension))

    def __repr__(self) -> str:
        return "RieszSpace({})".format(self.to_text())

    def to_text(self) -> str:
        if self.kind == const.RATIONAL_VECTOR:
            return "vector({})".format(self.dimension)
        return self.kind

    def zero(self) -> "RieszElement":
        return RieszElement.from_coordinate_map(self, {})

    def unit(self, k: int = 1) -> "RieszElement":
        """k-th standard unit vector (the scalar 1 for the rationals)."""
        if not self.is_sparse and not 1 <= k <= self.dimension:
            raise ValueError("unit index {} outside 1..{}".format(k, self.dimension))
        return RieszElement.from_coordinate_map(self, {k: Fraction(1)})

    def element(self, values: Union[Rational, Sequence[Rational], Dict[int, Rational]]) -> "RieszElement":
        """
        Element from a scalar (rationals), a sequence of length `dimension` (vector),
        or a mapping index -> value (finsupp).
        """
        if isinstance(values, dict):
            return RieszElement.from_coordinate_map(self, values)
        if isinstance(values, (int, Fraction)):
            if self.kind != const.RATIONALS:
                raise SpaceMismatchError(
                    "scalar literal given for {}".format(self.to_text())
                )
            return RieszElement.from_coordinate_map(self, {1: values})
        values = list(values)
        if self.is_sparse or len(values) != self.dimension:
            raise SpaceMismatchError(
                "{} coordinates given for {}".format(len(values), self.to_text())
            )
        return RieszElement.from_coordinate_map(
            self, {j: v for j, v in enumerate(values, start=1)}
        )


@dataclass(frozen=True)
class RieszElement:
    """
    Immutable element of a RieszSpace. Dense spaces store a tuple of rationals,
    finsupp stores sorted (index, value) pairs without zero entries.
    """

    space: RieszSpace
    coords: Tuple

    @classmethod
    def from_coordinate_map(
        cls, space: RieszSpace, mapping: Dict[int, Rational]
    ) -> "RieszElement":
        if space.is_sparse:
            for k in mapping:
                if not isinstance(k, int) or k < 1:
                    raise ValueError("sequence indices start at 1, got {!r}".format(k))
            pairs = tuple(
                (k, Fraction(v)) for k, v in sorted(mapping.items()) if Fraction(v) != 0
            )
            return cls(space, pairs)
        for k in mapping:
            if not 1 <= k <= space.dimension:
                raise ValueError(
                    "coordinate {} outside 1..{}".format(k, space.dimension)
                )
        dense = tuple(Fraction(mapping.get(j, 0)) for j in range(1, space.dimension + 1))
        return cls(space, dense)

    def coordinate(self, j: int) -> Fraction:
        if self.space.is_sparse:
            for k, v in self.coords:
                if k == j:
                    return v
            return Fraction(0)
        return self.coords[j - 1]

    def keys(self) -> Tuple[int, ...]:
        """Coordinates that may be non-zero."""
        if self.space.is_sparse:
            return tuple(k for k, _ in self.coords)
        return tuple(range(1, self.space.dimension + 1))

    def items(self) -> List[Tuple[int, Fraction]]:
        return [(k, self.coordinate(k)) for k in self.keys()]

    def support(self) -> Tuple[int, ...]:
        return tuple(k for k, v in self.items() if v != 0)

    @property
    def is_zero(self) -> bool:
        return all(v == 0 for _, v in self.items())

    @property
    def is_positive(self) -> bool:
        """x >= 0"""
        return all(v >= 0 for _, v in self.items())

    def __add__(self, other: "RieszElement") -> "RieszElement":
        return pointwise(lambda a, b: a + b, self, other)

    def __sub__(self, other: "RieszElement") -> "RieszElement":
        return pointwise(lambda a, b: a - b, self, other)

    def __neg__(self) -> "RieszElement":
        return self.scale(-1)

    def __mul__(self, q: Rational) -> "RieszElement":
        return self.scale(q)

    __rmul__ = __mul__

    def scale(self, q: Rational) -> "RieszElement":
        q = Fraction(q)
        return RieszElement.from_coordinate_map(
            self.space, {k: q * v for k, v in self.items()}
        )

    def __le__(self, other: "RieszElement") -> bool:
        return leq(self, other)

    def __ge__(self, other: "RieszElement") -> bool:
        return leq(other, self)

    def __repr__(self) -> str:
        return "RieszElement({}, {})".format(self.space.to_text(), self.to_text())

    def to_text(self) -> str:
        """Element literal: `3/4`, `(1,-2/3,0)` or `{1: 1, 5: -2/3}`."""
        if self.space.kind == const.RATIONALS:
            return utils.format_rational(self.coords[0])
        if self.space.kind == const.RATIONAL_VECTOR:
            return "(" + ",".join(utils.format_rational(v) for v in self.coords) + ")"
        return "{" + ", ".join(
            "{}: {}".format(k, utils.format_rational(v)) for k, v in self.coords
        ) + "}"


def check_same_space(*elements: RieszElement) -> RieszSpace:
    space = elements[0].space
    for element in elements[1:]:
        if element.space != space:
            raise SpaceMismatchError(
                "operands live in {} and {}".format(
                    space.to_text(), element.space.to_text()
                )
            )
    return space


def pointwise(
    op: Callable[[Fraction, Fraction], Fraction], x: RieszElement, y: RieszElement
) -> RieszElement:
    """Coordinatewise combination over the union of the operands' coordinates."""
    space = check_same_space(x, y)
    keys = sorted(set(x.keys()) | set(y.keys()))
    return RieszElement.from_coordinate_map(
        space, {k: op(x.coordinate(k), y.coordinate(k)) for k in keys}
    )


def sup(x: RieszElement, y: RieszElement) -> RieszElement:
    """x ∨ y"""
    return pointwise(max, x, y)


def inf(x: RieszElement, y: RieszElement) -> RieszElement:
    """x ∧ y"""
    return pointwise(min, x, y)


def absolute(x: RieszElement) -> RieszElement:
    return sup(x, -x)


def positive_part(x: RieszElement) -> RieszElement:
    return sup(x, x.space.zero())


def negative_part(x: RieszElement) -> RieszElement:
    return sup(-x, x.space.zero())


def abs_parts(x: RieszElement) -> Tuple[RieszElement, RieszElement, RieszElement]:
    """(|x|, x⁺, x⁻)"""
    return absolute(x), positive_part(x), negative_part(x)


def leq(x: RieszElement, y: RieszElement) -> bool:
    """Pointwise x <= y; incomparable pairs give False both ways."""
    check_same_space(x, y)
    keys = set(x.keys()) | set(y.keys())
    return all(x.coordinate(k) <= y.coordinate(k) for k in keys)


def sup_all(elements: Iterable[RieszElement]) -> RieszElement:
    elements = list(elements)
    result = elements[0]
    for element in elements[1:]:
        result = sup(result, element)
    return result


def birkhoff_check(
    x: RieszElement, x_prime: RieszElement, w: RieszElement, w_prime: RieszElement
) -> bool:
    """|x∨w − x′∨w′| <= |x − x′| + |w − w′|"""
    check_same_space(x, x_prime, w, w_prime)
    lhs = absolute(sup(x, w) - sup(x_prime, w_prime))
    rhs = absolute(x - x_prime) + absolute(w - w_prime)
    return leq(lhs, rhs)


def archimedean_probe(x: RieszElement, horizon: int) -> Verdict:
    """
    Confirm that (1/n)x is decreasing for n <= horizon and that its infimum is 0,
    the latter through the coordinatewise limit of v/n.

    Raises
    ------
    NotPositiveError
        if x has a negative coordinate
    """
    if not x.is_positive:
        raise NotPositiveError("archimedean probe needs x >= 0, got {}".format(x.to_text()))
    previous = x
    for n in range(2, horizon + 1):
        current = x.scale(Fraction(1, n))
        if not leq(current, previous):
            return Verdict.reject(const.CLAUSE_DECREASING, index=n, value=current)
        previous = current
    n = sympy.Symbol("n", positive=True, integer=True)
    limits = {
        k: sympy.limit(sympy.Rational(v.numerator, v.denominator) / n, n, sympy.oo)
        for k, v in x.items()
    }
    if any(limit != 0 for limit in limits.values()):
        return Verdict.reject(const.CLAUSE_INFIMUM, limits=limits)
    LOGGER.debug("archimedean probe of {} up to {}".format(x.to_text(), horizon))
    return Verdict.accept(horizon=horizon, infimum=x.space.zero())


def dedekind_sup(elements: Sequence[RieszElement], space: RieszSpace) -> RieszElement:
    """
    Least upper bound of a finite nonempty family in a Dedekind complete space.

    Raises
    ------
    NotDedekindCompleteError
        for spaces not flagged Dedekind complete
    """
    if not space.dedekind_complete:
        raise NotDedekindCompleteError(
            "{} is not Dedekind complete".format(space.to_text())
        )
    if not elements:
        raise ValueError("supremum of an empty family")
    for element in elements:
        check_same_space(space.zero(), element)
    return sup_all(elements)


def lattice_law_violations(
    x: RieszElement, y: RieszElement, z: RieszElement
) -> List[str]:
    """Names of the Riesz space laws that fail on the triple (empty if none)."""
    check_same_space(x, y, z)
    zero = x.space.zero()
    absolute_x, plus, minus = abs_parts(x)
    laws = {
        "sup_commutative": sup(x, y) == sup(y, x),
        "inf_commutative": inf(x, y) == inf(y, x),
        "sup_associative": sup(sup(x, y), z) == sup(x, sup(y, z)),
        "inf_associative": inf(inf(x, y), z) == inf(x, inf(y, z)),
        "absorption_sup": sup(x, inf(x, y)) == x,
        "absorption_inf": inf(x, sup(x, y)) == x,
        "distributive": inf(x, sup(y, z)) == sup(inf(x, y), inf(x, z)),
        "translation": sup(x + z, y + z) == sup(x, y) + z,
        "decomposition": plus - minus == x,
        "modulus": plus + minus == absolute_x,
        "disjoint_parts": inf(plus, minus) == zero,
        "birkhoff": birkhoff_check(x, y, z, zero),
    }
    return sorted(name for name, holds in laws.items() if not holds)
