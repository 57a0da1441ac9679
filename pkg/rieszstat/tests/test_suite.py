# test_suite.py
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

import time

from fractions import Fraction

import pytest

import rieszstat.core.constants as const
import rieszstat.settings as settings

from rieszstat.core.closed_forms import ClosedForm
from rieszstat.core.convergence import Witness, check_st_order_conv, is_decreasing_on
from rieszstat.core.exceptions import UnknownPropertyError
from rieszstat.core.generators import with_spikes
from rieszstat.core.lattice import RieszSpace
from rieszstat.core.measures import PrefixBoundsDensity, get_measure
from rieszstat.core.nets import Net
from rieszstat.core.properties import (
    PROPERTIES,
    SCOPE_NOTES,
    TrialContext,
    check_monotone_limit,
    monotone_witness,
)
from rieszstat.core.set_expr import FULL, FiniteList
from rieszstat.core.tail_rules import ClosedTail, HarmonicScale

# wall time allowed for a full default run
SUITE_BUDGET_SECONDS = 60
from rieszstat.core.suite import (
    DEFAULT_MEASURES,
    DEFAULT_SPACES,
    SuiteConfig,
    SuiteReport,
    axiom_self_tests,
    birkhoff_self_test,
    c0_example_report,
    lattice_law_self_test,
    run_all,
    run_property,
)


class TestSuiteConfig:
    def test_defaults(self):
        config = SuiteConfig()
        assert config.to_plain() == {
            "seed": settings.DEFAULT_SEED,
            "trials": settings.DEFAULT_TRIALS,
            "spaces": list(DEFAULT_SPACES),
            "measures": list(DEFAULT_MEASURES),
            "horizon": settings.SUITE_HORIZON,
        }

    def test_schedule(self):
        config = SuiteConfig()
        assert config.schedule(0) == ("rationals", "periodic-density")
        assert config.schedule(2) == ("finsupp", "periodic-density")
        assert config.schedule(4) == ("vector(3)", "prefix-bounds")

    @pytest.mark.parametrize(
        "kwargs",
        [{"trials": -1}, {"spaces": ["reals"]}, {"measures": ["counting"]}, {"spaces": []}],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SuiteConfig(**kwargs)


class TestProperties:
    @pytest.mark.parametrize("measure", DEFAULT_MEASURES)
    @pytest.mark.parametrize("name", list(PROPERTIES))
    def test_property_passes(self, name, measure, use_num_cpus):
        result = run_property(name, SuiteConfig(seed=11, trials=3, measures=[measure]))
        assert result.status == "pass", result.to_text()
        assert result.trials == 3

    def test_unknown_property(self):
        with pytest.raises(UnknownPropertyError):
            run_property("nope", SuiteConfig(trials=1))
        with pytest.raises(KeyError):
            run_property("nope", SuiteConfig(trials=1))

    def test_scope_notes(self):
        result = run_property("dedekind_monotone", SuiteConfig(trials=3))
        assert result.skipped == 1
        assert result.notes == [SCOPE_NOTES["dedekind_monotone"]]

    def test_rationals_only_property(self):
        result = run_property("real_line_coincidence", SuiteConfig(trials=3))
        assert result.skipped == 2
        assert result.status == "pass"

    def test_determinism(self):
        config = SuiteConfig(seed=7, trials=2)
        first = run_property("squeeze", config).to_plain()
        second = run_property("squeeze", config).to_plain()
        assert first == second

    def test_unexpected_error_is_a_failed_trial(self, monkeypatch):
        def broken(ctx):
            raise KeyError("missing cell")

        monkeypatch.setitem(PROPERTIES, "squeeze", broken)
        result = run_property("squeeze", SuiteConfig(trials=3))
        assert result.status == "fail"
        assert result.failed == 3
        failure = result.failures[0]
        assert failure["step"] == "unexpected error"
        assert "KeyError: 'missing cell'" in failure["evidence"]
        assert [f["trial"] for f in result.failures] == [0, 1, 2]


class TestMonotoneOrder:
    space = RieszSpace.rationals()
    spikes = FiniteList((1, 2))

    def spiked_net(self):
        zero, u = self.space.zero(), self.space.element(1)
        tail = ClosedTail(ClosedForm(zero, u.scale(Fraction(1, 2))))
        return with_spikes(Net.from_tail(self.space, tail), self.spikes, u)

    def context(self, measure):
        return TrialContext(
            rng=settings.rng_for(0),
            space=self.space,
            measure=get_measure(measure),
            horizon=settings.SUITE_HORIZON,
        )

    def test_spiked_prefix_stays_decreasing(self):
        net = self.spiked_net()
        assert net.values(3) == [
            self.space.element(1),
            self.space.element(1),
            self.space.element(Fraction(1, 6)),
        ]
        assert is_decreasing_on(net, FULL, settings.SUITE_HORIZON).accepted

    def test_full_index_witness_misses_spikes(self):
        u = self.space.element(1)
        witness = Witness(Net.from_tail(self.space, HarmonicScale(u)), FULL)
        verdict = check_st_order_conv(
            self.spiked_net(), self.space.zero(), witness, PrefixBoundsDensity()
        )
        assert not verdict.accepted
        assert verdict.clause == const.CLAUSE_DOMINATION

    @pytest.mark.parametrize("measure", DEFAULT_MEASURES)
    def test_witness_excludes_spikes(self, measure):
        witness = monotone_witness(self.space.element(1), self.spikes)
        assert [n for n in range(1, 6) if witness.delta.contains(n)] == [3, 4, 5]
        check_monotone_limit(
            self.context(measure), self.spiked_net(), self.space.zero(), witness
        )


class TestUniqueLimit:
    def test_rival_limit_rejected(self):
        space = RieszSpace.rationals()
        one = space.element(1)
        net = Net.from_tail(space, HarmonicScale(one))
        rival = Witness(Net.from_tail(space, HarmonicScale(one.scale(2))), FULL)
        measure = get_measure("periodic-density")
        assert check_st_order_conv(net, space.zero(), rival, measure).accepted
        assert not check_st_order_conv(net, one, rival, measure).accepted


class TestSelfTests:
    def test_birkhoff(self):
        assert birkhoff_self_test(1, 60, DEFAULT_SPACES) == {"samples": 60, "status": "pass"}

    def test_lattice_laws(self):
        result = lattice_law_self_test(1, 60, DEFAULT_SPACES)
        assert result["status"] == "pass"
        assert result["violations"] == []

    def test_axioms(self):
        reports = axiom_self_tests(1, 30, DEFAULT_MEASURES)
        assert [report["measure"] for report in reports] == [
            "periodic-density",
            "prefix-bounds",
            "cocountable",
        ]
        assert all(report["status"] == "pass" for report in reports)


class TestC0Example:
    report = c0_example_report()

    def test_reproduced(self):
        assert self.report["status"] == "pass"
        assert self.report["order_bounded"] is False

    def test_exceptional_set(self):
        assert self.report["exceptional_set"] == "ap(1,2)"
        assert self.report["exceptional_density"] == "1/2 (exact)"

    def test_search_and_relative_density(self):
        assert self.report["witness_search"].startswith("NotFound")
        assert self.report["evens_restriction"]["accepted"]
        relative = self.report["relative_density_evens"]
        assert relative["measure"] == "relative-density:ap(2,2)"
        assert relative["verdict"]["accepted"]

    def test_order_convergence_rejected(self):
        assert all(
            not entry["verdict"]["accepted"] for entry in self.report["order_convergence"]
        )

    def test_default_roster(self):
        assert [entry["measure"] for entry in self.report["measures"]] == ["periodic-density"]

    def test_measure_roster(self):
        report = c0_example_report([PrefixBoundsDensity(), get_measure("periodic-density")])
        assert report["status"] == "pass"
        assert [entry["measure"] for entry in report["measures"]] == [
            "prefix-bounds",
            "periodic-density",
        ]
        for entry in report["measures"]:
            assert entry["exceptional_density"] == "1/2 (exact)"
            assert entry["reproduced"]

    def test_empty_roster(self):
        with pytest.raises(ValueError):
            c0_example_report([])


class TestRunAll:
    @pytest.fixture
    def small_samples(self, monkeypatch):
        monkeypatch.setattr(settings, "BIRKHOFF_SAMPLES", 30)
        monkeypatch.setattr(settings, "AXIOM_SAMPLES", 20)

    def test_zero_trials_warns(self, small_samples):
        with pytest.warns(UserWarning):
            report = run_all(SuiteConfig(trials=0))
        assert isinstance(report, SuiteReport)
        assert report.passed
        assert any("trials=0" in w for w in report.warnings)
        assert set(report.properties) == set(PROPERTIES)

    def test_report_rendering(self, small_samples):
        report = run_all(SuiteConfig(seed=3, trials=1))
        plain = report.to_plain()
        assert plain["schema_version"] == 1
        assert plain["status"] == report.status
        text = report.to_text()
        assert text.startswith("rieszstat suite report (schema 1)")
        assert text.endswith("status: {}".format(report.status))

    def test_reduced_run_within_budget(self, small_samples):
        start = time.perf_counter()
        report = run_all(SuiteConfig(seed=42, trials=25))
        elapsed = time.perf_counter() - start
        assert report.passed, report.to_text()
        assert elapsed < SUITE_BUDGET_SECONDS
        assert settings.POOL is None
