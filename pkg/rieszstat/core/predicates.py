# predicates.py
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
Named membership oracles for subsets of ℕ that are not eventually periodic. Each
predicate comes with an exact counting function |S ∩ [1, k]|, optionally a sparse
enumerator, and a flag telling whether its asymptotic density is certified to be 0.
"""

import logging

from typing import Callable, Dict, Iterator, List, Optional

import sympy

LOGGER = logging.getLogger(__name__)


class NamedPredicate:
    """
    Membership oracle for a subset of ℕ.

    Parameters
    ----------
    name:
        identifier used in the `pred:<name>` syntax
    member:
        membership test n -> bool
    counter:
        exact count of members in [1, k]; defaults to scanning `member`
    enumerate_from:
        generator of the members n >= start in increasing order; defaults to scanning
    null:
        True if the counting function is o(k), i.e. the set has density 0
    """

    def __init__(
        self,
        name: str,
        member: Callable[[int], bool],
        counter: Optional[Callable[[int], int]] = None,
        enumerate_from: Optional[Callable[[int], Iterator[int]]] = None,
        null: bool = False,
    ) -> None:
        self.name = name
        self.member = member
        self._counter = counter
        self._enumerate_from = enumerate_from
        self.null = null

    @property
    def sparse(self) -> bool:
        return self._enumerate_from is not None

    def count(self, k: int) -> int:
        if k < 1:
            return 0
        if self._counter is not None:
            return self._counter(k)
        return sum(1 for n in range(1, k + 1) if self.member(n))

    def members_from(self, start: int) -> Iterator[int]:
        start = max(start, 1)
        if self._enumerate_from is not None:
            yield from self._enumerate_from(start)
            return
        n = start
        while True:
            if self.member(n):
                yield n
            n += 1

    def __repr__(self) -> str:
        return "NamedPredicate(name={!r}, null={})".format(self.name, self.null)


def _kth_powers(k: int) -> NamedPredicate:
    def member(n: int) -> bool:
        return n >= 1 and sympy.integer_nthroot(n, k)[1]

    def counter(bound: int) -> int:
        return int(sympy.integer_nthroot(bound, k)[0])

    def enumerate_from(start: int) -> Iterator[int]:
        root, exact = sympy.integer_nthroot(start, k)
        m = int(root) if exact else int(root) + 1
        while True:
            yield m**k
            m += 1

    names = {2: "squares", 3: "cubes", 4: "fourth_powers"}
    return NamedPredicate(names[k], member, counter, enumerate_from, null=True)


def _powers_of_two() -> NamedPredicate:
    def member(n: int) -> bool:
        return n >= 1 and n & (n - 1) == 0

    def counter(bound: int) -> int:
        return bound.bit_length()

    def enumerate_from(start: int) -> Iterator[int]:
        power = 1 << max(start - 1, 0).bit_length()
        while True:
            yield power
            power <<= 1

    return NamedPredicate("powers_of_two", member, counter, enumerate_from, null=True)


def _primes() -> NamedPredicate:
    def member(n: int) -> bool:
        return bool(sympy.isprime(n))

    def counter(bound: int) -> int:
        return int(sympy.primepi(bound))

    def enumerate_from(start: int) -> Iterator[int]:
        p = start if sympy.isprime(start) else sympy.nextprime(start)
        while True:
            yield int(p)
            p = sympy.nextprime(p)

    return NamedPredicate("primes", member, counter, enumerate_from, null=True)


def _log_blocks() -> NamedPredicate:
    # n with floor(log2 n) = 0 or 1 (mod 4): prefix ratios oscillate near 1/5 and 4/5
    def member(n: int) -> bool:
        return n >= 1 and (n.bit_length() - 1) % 4 in (0, 1)

    def counter(bound: int) -> int:
        total = 0
        for exp in range(bound.bit_length()):
            if exp % 4 in (0, 1):
                low, high = 1 << exp, min((1 << (exp + 1)) - 1, bound)
                total += max(high - low + 1, 0)
        return total

    return NamedPredicate("log_blocks", member, counter, null=False)


PREDICATES: Dict[str, NamedPredicate] = {}

# called with the predicate name whenever a registered predicate is replaced
REPLACE_HOOKS: List[Callable[[str], None]] = []


def register(predicate: NamedPredicate) -> None:
    """Make `predicate` available as `pred:<name>`. Replacing a registered
    predicate runs `REPLACE_HOOKS`, which drop results cached for the old one."""
    replaced = predicate.name in PREDICATES
    PREDICATES[predicate.name] = predicate
    if replaced:
        LOGGER.debug("replacing registered predicate {}".format(predicate.name))
        for hook in REPLACE_HOOKS:
            hook(predicate.name)


def get_predicate(name: str) -> NamedPredicate:
    try:
        return PREDICATES[name]
    except KeyError:
        raise KeyError(
            "Unknown predicate '{}'. Registered predicates: {}".format(
                name, registered_names()
            )
        ) from None


def registered_names() -> List[str]:
    return sorted(PREDICATES)


for _predicate in (
    _kth_powers(2),
    _kth_powers(3),
    _kth_powers(4),
    _powers_of_two(),
    _primes(),
    _log_blocks(),
):
    register(_predicate)
