# exceptions.py
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
Errors raised on violated preconditions. A mathematical "no" from a checker is
never an exception: it is a rejected Verdict carrying evidence.
"""

from typing import Any, Optional


class RieszStatError(Exception):
    """Base class of all rieszstat errors."""


class NotComparableError(RieszStatError, ValueError):
    """Order interval requested for indices a, b with a not below b."""


class NotPeriodicError(RieszStatError, ValueError):
    """Set expression has no eventually periodic normal form."""


class OutsideFieldError(RieszStatError, ValueError):
    """Set expression is not a member of the measure's interval field."""


class SpaceMismatchError(RieszStatError, ValueError):
    """Operands live in different Riesz space instances."""


class NotPositiveError(RieszStatError, ValueError):
    """An element required to be positive has a negative coordinate."""


class NotDedekindCompleteError(RieszStatError, ValueError):
    """Supremum requested in a space not flagged Dedekind complete."""


class EmptyDeltaError(RieszStatError, ValueError):
    """Index subset required to be infinite is empty or finite."""


class NotDecreasingError(RieszStatError, ValueError):
    """Infimum requested for a net that is not decreasing on the given set."""


class UndeterminedMeasureError(RieszStatError):
    """Measure value needed exactly, but only non-collapsing bounds are known."""


class UndeterminedError(RieszStatError):
    """Symbolic case analysis cannot close for the given tail rules."""


class NotCofinalError(RieszStatError, ValueError):
    """Subnet selector is not eventually cofinal; `witness` is an index that no
    selected index exceeds."""

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness


class UnknownPropertyError(RieszStatError, KeyError):
    """Suite property name not known."""


class PoolStartError(RieszStatError, ImportError):
    """The worker pool for parallel suite trials could not be started."""


class ImplementationBugError(RieszStatError, AssertionError):
    """A self-test of a theorem (e.g. the Birkhoff inequality) returned false."""


class NetSpecError(RieszStatError, ValueError):
    """Net-spec document or textual expression could not be parsed."""

    def __init__(
        self, message: str, line: Optional[int] = None, column: Optional[int] = None
    ) -> None:
        location = ""
        if line is not None:
            location = " (line {}, column {})".format(line, column)
        super().__init__(message + location)
        self.line = line
        self.column = column
