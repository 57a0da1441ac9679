# verdicts.py
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

from dataclasses import dataclass, field
from typing import Any, Dict

import rieszstat.utils.misc as utils


@dataclass(frozen=True)
class Undetermined:
    """Outcome of a symbolic computation that cannot be closed (never a guess)."""

    reason: str = ""

    def to_text(self) -> str:
        if self.reason:
            return "undetermined ({})".format(self.reason)
        return "undetermined"


@dataclass(frozen=True, eq=False)
class Verdict:
    """
    Outcome of a checker. A rejected verdict names the failed clause and carries
    concrete evidence (violating index, measure value, infimum found, horizon).
    """

    accepted: bool
    clause: str = ""
    evidence: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def accept(cls, **evidence: Any) -> "Verdict":
        return cls(True, "", {key: utils.to_plain(v) for key, v in evidence.items()})

    @classmethod
    def reject(cls, clause: str, **evidence: Any) -> "Verdict":
        if not clause:
            raise ValueError("a rejected verdict must name the failed clause")
        return cls(False, clause, {key: utils.to_plain(v) for key, v in evidence.items()})

    def __bool__(self) -> bool:
        return self.accepted

    def with_evidence(self, **evidence: Any) -> "Verdict":
        merged = dict(self.evidence)
        merged.update({key: utils.to_plain(v) for key, v in evidence.items()})
        return Verdict(self.accepted, self.clause, merged)

    def to_plain(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"accepted": self.accepted}
        if self.clause:
            data["clause"] = self.clause
        if self.evidence:
            data["evidence"] = dict(sorted(self.evidence.items()))
        return data

    def to_text(self) -> str:
        head = "accepted" if self.accepted else "rejected: {}".format(self.clause)
        lines = [head]
        for key in sorted(self.evidence):
            lines.append("  {}: {}".format(key, self.evidence[key]))
        return "\n".join(lines)
