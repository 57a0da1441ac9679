# test_netspec.py
# meant to be run with 'pytest'
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

import os

from fractions import Fraction

import pytest

from rieszstat.core.convergence import Witness
from rieszstat.core.exceptions import NetSpecError
from rieszstat.core.lattice import RieszSpace
from rieszstat.core.measures import PeriodicDensity, PrefixBoundsDensity
from rieszstat.core.nets import Net, combine
from rieszstat.core.set_expr import ArithProg, Complement, PredicateSampled
from rieszstat.core.tail_rules import HarmonicScale
from rieszstat.io_utils.netspec import (
    NetSpecClaims,
    NetSpecDocument,
    witness_document,
)
from rieszstat.tests.conftest import DATADIR

R = RieszSpace.rationals()

VECTOR_DOCUMENT = """
space: vector(2)
prefix: ["(1,0)", "(0,1)"]
tail: harmonic((1,2))
claims:
  order_limit: (0,0)
  dominating: harmonic((1,2))
  witness: {p: "harmonic((1,2))", delta: "c(pred:squares)"}
  measure: prefix-bounds
"""


class TestReading:
    def test_vector_document(self):
        document = NetSpecDocument.from_yaml(VECTOR_DOCUMENT)
        plane = RieszSpace.vector(2)
        assert document.space == plane
        assert document.net.eval(2) == plane.element([0, 1])
        assert document.net.eval(4) == plane.element([Fraction(1, 4), Fraction(1, 2)])
        assert document.claims.order_limit == plane.zero()
        assert document.claims.witness.delta == Complement(PredicateSampled("squares"))
        assert isinstance(document.measure, PrefixBoundsDensity)

    def test_fixture_files(self):
        document = NetSpecDocument.read(os.path.join(DATADIR, "harmonic_order.yaml"))
        assert document.net.eval(1) == R.element(2)
        assert document.claims.dominating.horizon == 1
        assert document.claims.regulator == R.element(2)

    def test_sparse_literals_from_mappings(self):
        document = NetSpecDocument.read(os.path.join(DATADIR, "c0_example.yaml"))
        assert document.claims.st_limit.is_zero
        assert document.claims.witness.delta == ArithProg(2, 2)
        assert isinstance(document.measure, PeriodicDensity)
        text = "space: finsupp\ntail: const({})\nprefix: [{1: 1, 3: -1/2}]\n"
        document = NetSpecDocument.from_yaml(text)
        finsupp = RieszSpace.finsupp()
        assert document.net.eval(1) == finsupp.element({1: 1, 3: Fraction(-1, 2)})


class TestInvalidDocuments:
    @pytest.mark.parametrize(
        "text",
        [
            "- just a list",
            "space: rationals",
            "space: reals\ntail: const(0)",
            "index: pair_naturals\nspace: rationals\ntail: const(0)",
            "space: rationals\ntail: harmonic(1",
            "space: rationals\ntail: const(0)\nclaims:\n  limit: 0",
            "space: rationals\ntail: const(0)\nclaims:\n  witness: {p: const(0)}",
            "space: rationals\ntail: const(0)\nprefix: [\"(1,2)\"]",
        ],
    )
    def test_rejected(self, text):
        with pytest.raises(NetSpecError):
            NetSpecDocument.from_yaml(text)

    def test_yaml_error_location(self):
        with pytest.raises(NetSpecError) as info:
            NetSpecDocument.from_yaml("space: rationals\ntail: [const(0)\n")
        assert info.value.line is not None


class TestWriting:
    def test_plain(self):
        net = Net(R, HarmonicScale(R.element(1)), {1: R.element(5)})
        claims = NetSpecClaims(
            order_limit=R.element(0), dominating=Net.from_tail(R, HarmonicScale(R.element(5)))
        )
        document = NetSpecDocument.from_net(net, claims)
        assert document.to_plain() == {
            "index": "naturals",
            "space": "rationals",
            "prefix": ["5"],
            "tail": "harmonic(1)",
            "claims": {"order_limit": "0", "dominating": "harmonic(5)"},
        }
        assert NetSpecDocument.from_yaml(document.to_yaml()).to_plain() == document.to_plain()

    def test_write_and_read(self, tmp_path):
        document = NetSpecDocument.from_yaml(VECTOR_DOCUMENT)
        filename = str(tmp_path / "vector.yaml")
        document.write(filename)
        assert NetSpecDocument.read(filename).to_plain() == document.to_plain()

    def test_computed_nets_have_no_text(self):
        net = Net.from_tail(R, HarmonicScale(R.element(1)))
        squared = combine(net, net, "add")
        assert NetSpecDocument.from_net(squared).to_plain()["tail"] == "harmonic(2)"
        composed = NetSpecDocument.from_net(
            Net.from_tail(R, _composed_tail(net))
        )
        with pytest.raises(ValueError):
            composed.to_plain()

    def test_witness_document(self):
        witness = Witness(
            Net.from_tail(R, HarmonicScale(R.element(1))), Complement(PredicateSampled("squares"))
        )
        assert witness_document(witness) == {"p": "harmonic(1)", "delta": "c(pred:squares)"}


def _composed_tail(net):
    from rieszstat.core.nets import SELECTORS, subnet

    sub, _ = subnet(net, SELECTORS["square"], horizon=2)
    return sub.tail
