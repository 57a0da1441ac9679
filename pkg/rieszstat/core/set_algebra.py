# set_algebra.py
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
Decisions about set expressions that go beyond eventually periodic normal forms:
emptiness, finiteness, counting and enumeration for sets mentioning `pred:<name>`
oracles.

Sets with predicates are handled by substituting each predicate with ∅ or ℕ. For a
fixed n every predicate has a definite truth value, so n ∈ S implies that n lies in
one of the substituted sets; if all of them are empty (finite), S is empty (finite).
"""

import functools
import itertools
import logging

from typing import Iterator, List, Optional

import rieszstat.core.predicates as predicates
import rieszstat.settings as settings

from rieszstat.core.periodic import (
    EventuallyPeriodic,
    normalize,
    normalize_atoms,
    try_normalize,
)
from rieszstat.core.set_expr import (
    EMPTY,
    FULL,
    Complement,
    Intersection,
    PredicateSampled,
    SetExpr,
    Union,
    predicate_names,
    substitute_predicates,
    uses_atoms,
)

LOGGER = logging.getLogger(__name__)

# members scanned when looking for positive evidence of non-emptiness
_PROBE_LIMIT = 4096


def _substitutions(s: SetExpr) -> Iterator[SetExpr]:
    names = sorted(predicate_names(s))
    for values in itertools.product((EMPTY, FULL), repeat=len(names)):
        yield substitute_predicates(s, dict(zip(names, values)))


@functools.lru_cache(maxsize=65536)
def is_empty(s: SetExpr) -> Optional[bool]:
    """True/False when decided, None when undecided."""
    if uses_atoms(s):
        return normalize_atoms(s).is_empty()
    form = try_normalize(s)
    if form is not None:
        return form.is_empty()
    forms = [try_normalize(t) for t in _substitutions(s)]
    if all(f is not None and f.is_empty() for f in forms):
        return True
    for _ in iter_members(s, 1, _PROBE_LIMIT):
        return False
    return None


@functools.lru_cache(maxsize=65536)
def is_finite(s: SetExpr) -> Optional[bool]:
    """True/False when decided, None when undecided."""
    if uses_atoms(s):
        return not normalize_atoms(s).cofinite
    form = try_normalize(s)
    if form is not None:
        return form.is_finite()
    if isinstance(s, PredicateSampled):
        return False
    if isinstance(s, Intersection):
        for this, other in ((s.left, s.right), (s.right, s.left)):
            form = try_normalize(this)
            if form is not None and form.period == 1 and form.residues:
                return is_finite(other)
    if isinstance(s, Union):
        left, right = is_finite(s.left), is_finite(s.right)
        if left is False or right is False:
            return False
        if left and right:
            return True
    forms = [try_normalize(t) for t in _substitutions(s)]
    if all(f is not None and f.is_finite() for f in forms):
        return True
    reduced = null_reduction(s)
    if reduced is not None and reduced.residues:
        return False
    return None


def null_reduction(s: SetExpr) -> Optional[EventuallyPeriodic]:
    """
    If every predicate in `s` has certified density zero, `s` differs from the set
    obtained by replacing all predicates with ∅ by a density-zero set. Return the
    normal form of that reduced set, or None if the reduction does not apply.
    """
    names = predicate_names(s)
    if not names or not all(predicates.get_predicate(n).null for n in names):
        return None
    return try_normalize(substitute_predicates(s, {n: EMPTY for n in names}))


def _sparse_members(s: SetExpr, stop: int) -> Optional[List[int]]:
    """Members of `s` up to `stop` if they can be listed without a full scan."""
    form = try_normalize(s)
    if form is not None and form.is_finite():
        return [n for n in form.members(1, stop)]
    if isinstance(s, PredicateSampled) and s.predicate.sparse:
        members = []
        for n in s.predicate.members_from(1):
            if n > stop:
                break
            members.append(n)
        return members
    if isinstance(s, Intersection):
        for this, other in ((s.left, s.right), (s.right, s.left)):
            members = _sparse_members(this, stop)
            if members is not None:
                return [n for n in members if other.contains(n)]
    return None


@functools.lru_cache(maxsize=65536)
def count_upto(s: SetExpr, k: int) -> int:
    """|s ∩ [1, k]| computed exactly."""
    if k < 1:
        return 0
    form = try_normalize(s)
    if form is not None:
        return form.count(k)
    if isinstance(s, PredicateSampled):
        return s.predicate.count(k)
    if isinstance(s, Complement):
        return k - count_upto(s.inner, k)
    if isinstance(s, Union):
        return (
            count_upto(s.left, k)
            + count_upto(s.right, k)
            - count_upto(Intersection(s.left, s.right), k)
        )
    if isinstance(s, Intersection):
        members = _sparse_members(s, k)
        if members is not None:
            return len(members)
        for this, other in ((s.left, s.right), (s.right, s.left)):
            if isinstance(this, Complement):
                return count_upto(other, k) - count_upto(
                    Intersection(other, this.inner), k
                )
        for this, other in ((s.left, s.right), (s.right, s.left)):
            if isinstance(this, Union):
                return (
                    count_upto(Intersection(this.left, other), k)
                    + count_upto(Intersection(this.right, other), k)
                    - count_upto(Intersection(Intersection(this.left, this.right), other), k)
                )
    LOGGER.debug("counting {} up to {} by scanning".format(s.to_text(), k))
    return sum(1 for n in range(1, k + 1) if s.contains(n))


def iter_members(s: SetExpr, start: int, stop: int) -> Iterator[int]:
    """Members n of `s` with start <= n <= stop, in increasing order."""
    start = max(start, 1)
    form = try_normalize(s)
    if form is not None:
        yield from form.members(start, stop)
        return
    if isinstance(s, PredicateSampled) and s.predicate.sparse:
        for n in s.predicate.members_from(start):
            if n > stop:
                return
            yield n
        return
    if isinstance(s, Intersection):
        for this, other in ((s.left, s.right), (s.right, s.left)):
            if _is_enumerable(this):
                for n in iter_members(this, start, stop):
                    if other.contains(n):
                        yield n
                return
    for n in range(start, stop + 1):
        if s.contains(n):
            yield n


def _is_enumerable(s: SetExpr) -> bool:
    form = try_normalize(s)
    if form is not None:
        return form.is_finite()
    if isinstance(s, PredicateSampled):
        return s.predicate.sparse
    if isinstance(s, Intersection):
        return _is_enumerable(s.left) or _is_enumerable(s.right)
    return False


def first_member(s: SetExpr, start: int, cap: Optional[int] = None) -> Optional[int]:
    """Smallest member n >= start, searching at most `cap` indices past `start`."""
    cap = settings.MEMBER_SEARCH_CAP if cap is None else cap
    for n in iter_members(s, start, start + cap):
        return n
    return None


def members_list(s: SetExpr, stop: int, start: int = 1) -> List[int]:
    return list(iter_members(s, start, stop))


def simplify(s: SetExpr) -> SetExpr:
    """Canonical expression for `s` when a normal form exists, else `s` itself."""
    if uses_atoms(s):
        return normalize_atoms(s).to_set_expr()
    form = try_normalize(s)
    if form is not None:
        return form.to_set_expr()
    return s


def equivalent(left: SetExpr, right: SetExpr) -> bool:
    """Decide equality of two sets through their normal forms (structural equality
    as a fallback)."""
    if left == right:
        return True
    if uses_atoms(left) and uses_atoms(right):
        return normalize_atoms(left) == normalize_atoms(right)
    left_form, right_form = try_normalize(left), try_normalize(right)
    if left_form is not None and right_form is not None:
        return left_form == right_form
    return False


def is_subset(inner: SetExpr, outer: SetExpr) -> Optional[bool]:
    return is_empty(Intersection(inner, Complement(outer)))


def finite_members(s: SetExpr) -> Optional[List[int]]:
    """All members of a set certified finite, or None.

    `s` lies inside the union of its predicate-free substitutions (each predicate
    replaced by ∅ or ℕ), so a common bound on those bounds `s`.
    """
    if uses_atoms(s):
        return None
    bound = 0
    for t in _substitutions(s):
        form = try_normalize(t)
        if form is None or not form.is_finite():
            return None
        bound = max(bound, max(form.plus, default=0))
    return [n for n in range(1, bound + 1) if s.contains(n)]


def clear_caches(name: Optional[str] = None) -> None:
    """Drop cached normal forms, counts and emptiness decisions."""
    LOGGER.debug("clearing set caches (predicate {})".format(name))
    for cached in (normalize, normalize_atoms, is_empty, is_finite, count_upto):
        cached.cache_clear()


predicates.REPLACE_HOOKS.append(clear_caches)
