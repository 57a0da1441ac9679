# test_fileio.py
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

from fractions import Fraction

import pytest

import rieszstat.io_utils.fileio as io

from rieszstat.core.suite import PropertyResult, SuiteReport
from rieszstat.io_utils.fileio_backends import TextWriter


def small_report(status="pass"):
    return SuiteReport(
        config={
            "seed": 1,
            "trials": 2,
            "spaces": ["rationals"],
            "measures": ["periodic-density"],
            "horizon": 8,
        },
        properties={"squeeze": PropertyResult("squeeze", 2).to_plain()},
        self_tests={"birkhoff": {"samples": 5, "status": "pass"}},
        axioms=[{"measure": "periodic-density", "samples": 5, "status": "pass", "failures": []}],
        c0_example={"status": status, "exceptional_set": "ap(1,2)"},
        warnings=[],
    )


class TestYAMLReports:
    def test_round_trip(self, tmp_path):
        filename = str(tmp_path / "report.yaml")
        report = small_report()
        report.filewrite(filename)
        restored = SuiteReport.create_from_file(filename)
        assert isinstance(restored, SuiteReport)
        assert restored.to_plain() == report.to_plain()

    def test_identical_bytes(self, tmp_path):
        first, second = tmp_path / "a.yml", tmp_path / "b.yml"
        io.write(small_report(), str(first))
        io.write(small_report(), str(second))
        assert first.read_bytes() == second.read_bytes()
        assert first.read_text(encoding="utf-8").startswith("__type: SuiteReport")

    def test_failing_report(self, tmp_path):
        filename = str(tmp_path / "report.yaml")
        io.write(small_report(status="fail"), filename)
        assert io.read(filename).status == "fail"

    def test_not_a_report(self, tmp_path):
        filename = tmp_path / "plain.yaml"
        filename.write_text("seed: 1\n", encoding="utf-8")
        with pytest.raises(ValueError):
            io.read(str(filename))


class TestTextReports:
    def test_summary(self, tmp_path):
        filename = tmp_path / "report.txt"
        report = small_report()
        io.write(report, str(filename))
        assert filename.read_text(encoding="utf-8") == report.to_text() + "\n"

    def test_text_is_write_only(self, tmp_path):
        filename = tmp_path / "report.txt"
        io.write(small_report(), str(filename))
        with pytest.raises(ValueError):
            io.read(str(filename))

    def test_render_nested(self):
        lines = TextWriter.render({"b": [1, {"c": Fraction(1, 2)}], "a": "x"})
        assert lines == ["a: x", "b:", "  - 1", "  -", "    c: 1/2"]


def test_unsupported_suffix(tmp_path):
    with pytest.raises(ValueError):
        io.write(small_report(), str(tmp_path / "report.h5"))
