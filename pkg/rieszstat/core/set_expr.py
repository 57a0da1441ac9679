# set_expr.py
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
Finitely described subsets of a directed index set. Expressions are immutable and
hashable; they form a field under union, intersection and complement.

Textual form: `fin{1,3,5}`, `ap(a,d)`, `u(e1,e2)`, `i(e1,e2)`, `c(e)`,
`listed{a,b}`, `colisted{a,b}`, `pred:<name>`.
"""

from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, Tuple

import rieszstat.core.predicates as predicates


class SetExpr:
    """Base class of set expressions."""

    def contains(self, item: Any) -> bool:
        raise NotImplementedError

    def to_text(self) -> str:
        raise NotImplementedError

    def __contains__(self, item: Any) -> bool:
        return self.contains(item)

    def __or__(self, other: "SetExpr") -> "SetExpr":
        return Union(self, other)

    def __and__(self, other: "SetExpr") -> "SetExpr":
        return Intersection(self, other)

    def __invert__(self) -> "SetExpr":
        return Complement(self)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class FiniteList(SetExpr):
    """Finite set of indices (positive integers or tuples of them), stored sorted
    and without repetitions."""

    indices: Tuple[Any, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "indices", tuple(sorted(set(self.indices))))

    def contains(self, item: Any) -> bool:
        return item in self.indices

    def to_text(self) -> str:
        def fmt(index: Any) -> str:
            if isinstance(index, tuple):
                return "(" + ",".join(str(i) for i in index) + ")"
            return str(index)

        return "fin{" + ",".join(fmt(i) for i in self.indices) + "}"


@dataclass(frozen=True)
class ArithProg(SetExpr):
    """{a, a + d, a + 2d, ...} with first term a >= 1 and period d >= 1."""

    a: int
    d: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.d < 1:
            raise ValueError(
                "ArithProg requires a >= 1 and d >= 1, got a={}, d={}".format(
                    self.a, self.d
                )
            )

    def contains(self, item: Any) -> bool:
        return isinstance(item, int) and item >= self.a and (item - self.a) % self.d == 0

    def to_text(self) -> str:
        return "ap({},{})".format(self.a, self.d)


@dataclass(frozen=True)
class Union(SetExpr):
    left: SetExpr
    right: SetExpr

    def contains(self, item: Any) -> bool:
        return self.left.contains(item) or self.right.contains(item)

    def to_text(self) -> str:
        return "u({},{})".format(self.left.to_text(), self.right.to_text())


@dataclass(frozen=True)
class Intersection(SetExpr):
    left: SetExpr
    right: SetExpr

    def contains(self, item: Any) -> bool:
        return self.left.contains(item) and self.right.contains(item)

    def to_text(self) -> str:
        return "i({},{})".format(self.left.to_text(), self.right.to_text())


@dataclass(frozen=True)
class Complement(SetExpr):
    inner: SetExpr

    def contains(self, item: Any) -> bool:
        return not self.inner.contains(item)

    def to_text(self) -> str:
        return "c({})".format(self.inner.to_text())


@dataclass(frozen=True)
class Listed(SetExpr):
    """Explicit atoms of a symbolic uncountable index set; stands in for a
    countable set."""

    atoms: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(sorted(set(self.atoms))))

    def contains(self, item: Any) -> bool:
        return item in self.atoms

    def to_text(self) -> str:
        return "listed{" + ",".join(self.atoms) + "}"


@dataclass(frozen=True)
class CoListed(SetExpr):
    """Complement of explicitly listed atoms; stands in for a co-countable set."""

    atoms: Tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "atoms", tuple(sorted(set(self.atoms))))

    def contains(self, item: Any) -> bool:
        return item not in self.atoms

    def to_text(self) -> str:
        return "colisted{" + ",".join(self.atoms) + "}"


@dataclass(frozen=True)
class PredicateSampled(SetExpr):
    """Subset of ℕ given by a registered membership oracle (see `predicates`)."""

    name: str

    def __post_init__(self) -> None:
        predicates.get_predicate(self.name)

    @property
    def predicate(self) -> predicates.NamedPredicate:
        return predicates.get_predicate(self.name)

    def contains(self, item: Any) -> bool:
        return isinstance(item, int) and item >= 1 and self.predicate.member(item)

    def to_text(self) -> str:
        return "pred:" + self.name


EMPTY = FiniteList(())
FULL = Complement(EMPTY)


def empty_set() -> SetExpr:
    return EMPTY


def full_set() -> SetExpr:
    return FULL


def interval(a: int, b: int) -> FiniteList:
    """{a, a+1, ..., b} as a finite list."""
    return FiniteList(tuple(range(a, b + 1)))


def is_full(s: SetExpr) -> bool:
    return s == FULL


def meet(left: SetExpr, right: SetExpr) -> SetExpr:
    """Intersection that drops trivial full-set operands."""
    if is_full(left):
        return right
    if is_full(right) or left == right:
        return left
    return Intersection(left, right)


def join(left: SetExpr, right: SetExpr) -> SetExpr:
    """Union that drops trivial empty-set operands."""
    if left == EMPTY:
        return right
    if right == EMPTY or left == right:
        return left
    return Union(left, right)


def predicate_names(s: SetExpr) -> FrozenSet[str]:
    """Names of all predicates occurring in `s`."""
    if isinstance(s, PredicateSampled):
        return frozenset((s.name,))
    if isinstance(s, (Union, Intersection)):
        return predicate_names(s.left) | predicate_names(s.right)
    if isinstance(s, Complement):
        return predicate_names(s.inner)
    return frozenset()


def uses_atoms(s: SetExpr) -> bool:
    """True if `s` mentions atoms of a symbolic uncountable index set."""
    if isinstance(s, (Listed, CoListed)):
        return True
    if isinstance(s, (Union, Intersection)):
        return uses_atoms(s.left) or uses_atoms(s.right)
    if isinstance(s, Complement):
        return uses_atoms(s.inner)
    return False


def substitute_predicates(s: SetExpr, assignment: Dict[str, SetExpr]) -> SetExpr:
    """Replace every `pred:<name>` with `assignment[name]` (names not in the
    assignment are kept)."""
    if isinstance(s, PredicateSampled):
        return assignment.get(s.name, s)
    if isinstance(s, Union):
        return Union(
            substitute_predicates(s.left, assignment),
            substitute_predicates(s.right, assignment),
        )
    if isinstance(s, Intersection):
        return Intersection(
            substitute_predicates(s.left, assignment),
            substitute_predicates(s.right, assignment),
        )
    if isinstance(s, Complement):
        return Complement(substitute_predicates(s.inner, assignment))
    return s


def union_all(sets: Iterable[SetExpr]) -> SetExpr:
    result: SetExpr = EMPTY
    for s in sets:
        result = join(result, s)
    return result
