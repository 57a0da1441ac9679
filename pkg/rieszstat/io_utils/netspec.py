# netspec.py
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
Net-spec documents: YAML files describing a net and, optionally, the convergence
claims to check against it.

    index: naturals
    space: vector(2)
    prefix: ["(1,0)", "(0,1)"]
    tail: harmonic((1,2))
    claims:
      order_limit: (0,0)
      dominating: harmonic((1,2))
      st_limit: (0,0)
      witness: {p: "harmonic((1,2))", delta: "c(pred:squares)"}
      measure: prefix-bounds
      regulator: (1,2)

Nets inside claims are given by their tail text or by a mapping with `prefix`
and `tail`.
"""

import logging

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

import yaml

import rieszstat.core.constants as const
import rieszstat.utils.misc as utils

from rieszstat.core.convergence import Witness
from rieszstat.core.exceptions import NetSpecError
from rieszstat.core.lattice import RieszElement, RieszSpace
from rieszstat.core.measures import DirectedSetMeasure, get_measure
from rieszstat.core.nets import Net
from rieszstat.core.set_expr import SetExpr
from rieszstat.core.tail_rules import ComposedTail, ComputedTail
from rieszstat.io_utils.fileio_backends import dump_yaml
from rieszstat.io_utils.grammar import (
    parse_element,
    parse_set_expr,
    parse_space,
    parse_tail,
)

LOGGER = logging.getLogger(__name__)

CLAIM_KEYS = ("order_limit", "dominating", "st_limit", "witness", "measure", "regulator")


def _element_text(value: Any) -> str:
    """Element literal from YAML data; unquoted `{1: 1}` arrives as a mapping."""
    if isinstance(value, dict):
        return "{" + ", ".join("{}: {}".format(k, v) for k, v in value.items()) + "}"
    return str(value)


def _element(value: Any, space: RieszSpace) -> RieszElement:
    return parse_element(_element_text(value), space)


def _net(value: Any, space: RieszSpace) -> Net:
    if isinstance(value, str):
        return Net.from_tail(space, parse_tail(value, space))
    if isinstance(value, dict) and "tail" in value:
        prefix = {
            n: _element(v, space) for n, v in enumerate(value.get("prefix") or [], start=1)
        }
        return Net(space, parse_tail(value["tail"], space), prefix)
    raise NetSpecError("a net is a tail text or a mapping with 'prefix' and 'tail'")


def _net_plain(net: Net) -> Any:
    if isinstance(net.tail, (ComposedTail, ComputedTail)):
        raise ValueError(
            "tail {} has no textual form".format(net.tail.to_text())
        )
    if not net.prefix:
        return net.tail.to_text()
    return {
        "prefix": [v.to_text() for v in net.prefix.values()],
        "tail": net.tail.to_text(),
    }


@dataclass
class NetSpecClaims:
    order_limit: Optional[RieszElement] = None
    dominating: Optional[Net] = None
    st_limit: Optional[RieszElement] = None
    witness: Optional[Witness] = None
    measure: Optional[str] = None
    regulator: Optional[RieszElement] = None

    def to_plain(self) -> Dict[str, Any]:
        plain: Dict[str, Any] = {
            "order_limit": self.order_limit,
            "st_limit": self.st_limit,
            "measure": self.measure,
            "regulator": self.regulator,
        }
        plain = utils.to_plain(utils.remove_nones(plain))
        if self.dominating is not None:
            plain["dominating"] = _net_plain(self.dominating)
        if self.witness is not None:
            plain["witness"] = {
                "p": _net_plain(self.witness.p),
                "delta": self.witness.delta.to_text(),
            }
        return plain


@dataclass
class NetSpecDocument:
    """A net over ℕ given by an explicit prefix and a tail rule, plus claims."""

    space: RieszSpace
    net: Net
    claims: NetSpecClaims = field(default_factory=NetSpecClaims)
    index: str = const.NATURALS

    @classmethod
    def from_net(cls, net: Net, claims: Optional[NetSpecClaims] = None) -> "NetSpecDocument":
        return cls(net.space, net, claims or NetSpecClaims())

    @classmethod
    def from_plain(cls, data: Any) -> "NetSpecDocument":
        """
        Raises
        ------
        NetSpecError
            on missing fields, unknown keys or unparseable expressions
        """
        if not isinstance(data, dict):
            raise NetSpecError("a net-spec document is a mapping")
        missing = [key for key in ("space", "tail") if key not in data]
        if missing:
            raise NetSpecError("net-spec document lacks {}".format(missing))
        index = data.get("index", const.NATURALS)
        if index != const.NATURALS:
            raise NetSpecError(
                "nets are indexed by '{}', got '{}'".format(const.NATURALS, index)
            )
        space = parse_space(str(data["space"]))
        try:
            net = _net({"prefix": data.get("prefix"), "tail": data["tail"]}, space)
            claims = cls._claims(data.get("claims") or {}, space)
        except NetSpecError:
            raise
        except ValueError as error:
            raise NetSpecError(str(error)) from None
        return cls(space, net, claims, index)

    @staticmethod
    def _claims(data: Dict[str, Any], space: RieszSpace) -> NetSpecClaims:
        unknown = sorted(set(data) - set(CLAIM_KEYS))
        if unknown:
            raise NetSpecError("unknown claims {}, expected {}".format(unknown, CLAIM_KEYS))
        claims = NetSpecClaims(measure=data.get("measure"))
        for key in ("order_limit", "st_limit", "regulator"):
            if data.get(key) is not None:
                setattr(claims, key, _element(data[key], space))
        if data.get("dominating") is not None:
            claims.dominating = _net(data["dominating"], space)
        witness = data.get("witness")
        if witness is not None:
            if not isinstance(witness, dict) or set(witness) != {"p", "delta"}:
                raise NetSpecError("a witness is a mapping with keys 'p' and 'delta'")
            delta: SetExpr = parse_set_expr(str(witness["delta"]))
            claims.witness = Witness(_net(witness["p"], space), delta)
        return claims

    @classmethod
    def from_yaml(cls, text: str) -> "NetSpecDocument":
        try:
            data = yaml.safe_load(text)
        except yaml.YAMLError as error:
            mark = getattr(error, "problem_mark", None)
            line = mark.line + 1 if mark is not None else None
            column = mark.column + 1 if mark is not None else None
            raise NetSpecError("invalid YAML: {}".format(error), line, column) from None
        return cls.from_plain(data)

    @classmethod
    def read(cls, filename: str) -> "NetSpecDocument":
        with open(filename, mode="r", encoding="utf-8") as stream:
            document = cls.from_yaml(stream.read())
        LOGGER.debug("read net-spec {}".format(filename))
        return document

    @property
    def measure(self) -> Optional[DirectedSetMeasure]:
        if self.claims.measure is None:
            return None
        return get_measure(self.claims.measure)

    def to_plain(self) -> Dict[str, Any]:
        """
        Raises
        ------
        ValueError
            for nets built by composition or by evaluated combinations, which have
            no textual form
        """
        plain: Dict[str, Any] = {
            "index": self.index,
            "space": self.space.to_text(),
            "tail": _net_plain(Net.from_tail(self.space, self.net.tail)),
        }
        if self.net.prefix:
            plain["prefix"] = [v.to_text() for v in self.net.prefix.values()]
        claims = self.claims.to_plain()
        if claims:
            plain["claims"] = claims
        return plain

    def to_yaml(self) -> str:
        return dump_yaml(self.to_plain())

    def write(self, filename: str) -> None:
        with open(filename, mode="w", encoding="utf-8", newline="\n") as stream:
            stream.write(self.to_yaml())


def witness_document(witness: Witness) -> Dict[str, Any]:
    """A found witness in the claim syntax of net-spec documents."""
    return {"p": _net_plain(witness.p), "delta": witness.delta.to_text()}
