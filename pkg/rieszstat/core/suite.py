# suite.py
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
The theorem suite: seeded trials of every property runner, lattice and measure
self-tests, and the c₀ example report, assembled into a deterministic report.
"""

import logging
import traceback
import warnings

from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import rieszstat.core.constants as const
import rieszstat.io_utils.fileio_serializers as serializers
import rieszstat.settings as settings
import rieszstat.utils.misc as utils

from rieszstat.core.convergence import (
    NotFound,
    Witness,
    check_order_conv,
    check_st_order_conv,
    exceptional_set,
    is_order_bounded,
    witness_search,
)
from rieszstat.core.density import is_exactly
from rieszstat.core.exceptions import (
    ImplementationBugError,
    RieszStatError,
    UnknownPropertyError,
)
from rieszstat.core.generators import (
    c0_example_net,
    random_atom_sets,
    random_element,
    random_periodic_sets,
)
from rieszstat.core.lattice import RieszSpace, birkhoff_check, lattice_law_violations
from rieszstat.core.measures import (
    CoCountable,
    DirectedSetMeasure,
    PeriodicDensity,
    RelativeDensity,
    axioms_check,
    get_measure,
    measure_eval,
)
from rieszstat.core.nets import Net, mask
from rieszstat.core.properties import (
    PROPERTIES,
    SCOPE_NOTES,
    SKIPPED,
    TrialContext,
    TrialFailure,
)
from rieszstat.core.set_expr import ArithProg, SetExpr
from rieszstat.core.tail_rules import GeometricScale, HarmonicScale
from rieszstat.utils.cpu_switch import map_method

if settings.IN_IPYTHON:
    from tqdm.notebook import tqdm
else:
    from tqdm import tqdm

LOGGER = logging.getLogger(__name__)

DEFAULT_SPACES = ("rationals", "vector(3)", "finsupp")
DEFAULT_MEASURES = ("periodic-density", "prefix-bounds")

# failure dumps kept per property
MAX_FAILURE_DUMPS = 10

# triples drawn for the lattice-law self-test
LATTICE_LAW_SAMPLES = 1000

C0_DISCREPANCY_NOTE = (
    "The interleaved net (e1, 0, e2, 0, ...) is unbounded, so it has no order "
    "convergent subnet, yet its subnet along the evens is identically 0. The claim "
    "that a net is statistically order convergent whenever all of its subnets are "
    "is therefore only checked for restrictions to subsets Σ of the witness set Δ "
    "with μ(Σ) = 1 (property subnet_implies)."
)


class SuiteConfig(serializers.Serializable):
    """
    Parameters of a suite run. Identical configurations give identical reports;
    `num_cpus` only affects the run time and is left out of the report.

    Parameters
    ----------
    seed:
        seed of the 64-bit generator; trial t of property i uses (seed, i, t)
    trials:
        trials per property
    spaces:
        space roster, e.g. "rationals", "vector(3)", "finsupp"
    measures:
        measure roster by command-line name
    horizon:
        explicit window handed to the checkers
    """

    def __init__(
        self,
        seed: int = settings.DEFAULT_SEED,
        trials: int = settings.DEFAULT_TRIALS,
        spaces: Sequence[str] = DEFAULT_SPACES,
        measures: Sequence[str] = DEFAULT_MEASURES,
        horizon: int = settings.SUITE_HORIZON,
    ) -> None:
        if trials < 0:
            raise ValueError("trials must be non-negative, got {}".format(trials))
        if not spaces or not measures:
            raise ValueError("space and measure rosters must be nonempty")
        self.seed = seed
        self.trials = trials
        self.spaces = list(spaces)
        self.measures = list(measures)
        self.horizon = horizon
        self.num_cpus = settings.NUM_CPUS
        for name in self.spaces:
            RieszSpace.from_text(name)
        for name in self.measures:
            get_measure(name)

    def to_plain(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "spaces": list(self.spaces),
            "measures": list(self.measures),
            "horizon": self.horizon,
        }

    def schedule(self, t: int) -> Tuple[str, str]:
        """Space and measure of trial t."""
        space = self.spaces[t % len(self.spaces)]
        measure = self.measures[(t // len(self.spaces)) % len(self.measures)]
        return space, measure


class PropertyResult(serializers.Serializable):
    """Outcome of one property: pass iff no trial failed."""

    def __init__(
        self,
        name: str,
        trials: int,
        failed: int = 0,
        skipped: int = 0,
        failures: Optional[List[Dict[str, Any]]] = None,
        notes: Optional[List[str]] = None,
    ) -> None:
        self.name = name
        self.trials = trials
        self.failed = failed
        self.skipped = skipped
        self.failures = failures or []
        self.notes = notes or []

    @property
    def status(self) -> str:
        return "pass" if self.failed == 0 else "fail"

    def to_plain(self) -> Dict[str, Any]:
        return {
            "trials": self.trials,
            "failed": self.failed,
            "skipped": self.skipped,
            "status": self.status,
            "failures": self.failures,
            "notes": self.notes,
        }

    def to_text(self) -> str:
        line = "{:<24} {} ({} trials, {} failed, {} skipped)".format(
            self.name, self.status, self.trials, self.failed, self.skipped
        )
        lines = [line] + ["    note: {}".format(note) for note in self.notes]
        for failure in self.failures:
            lines.append(
                "    trial {} [{} / {}] step '{}'".format(
                    failure["trial"], failure["space"], failure["measure"], failure["step"]
                )
            )
        return "\n".join(lines)


class SuiteReport(serializers.Serializable):
    """
    Versioned suite report. All fields are plain data so the structured rendering
    is byte-identical for identical configurations.
    """

    def __init__(
        self,
        config: Dict[str, Any],
        properties: Dict[str, Dict[str, Any]],
        self_tests: Dict[str, Any],
        axioms: List[Dict[str, Any]],
        c0_example: Dict[str, Any],
        warnings: List[str],
        schema_version: int = const.REPORT_SCHEMA_VERSION,
    ) -> None:
        self.schema_version = schema_version
        self.config = config
        self.properties = properties
        self.self_tests = self_tests
        self.axioms = axioms
        self.c0_example = c0_example
        self.warnings = warnings

    @property
    def passed(self) -> bool:
        return (
            all(entry["status"] == "pass" for entry in self.properties.values())
            and all(entry["status"] == "pass" for entry in self.self_tests.values())
            and all(entry["status"] == "pass" for entry in self.axioms)
            and self.c0_example.get("status") == "pass"
        )

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_plain(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "status": self.status,
            "config": self.config,
            "properties": self.properties,
            "self_tests": self.self_tests,
            "axioms": self.axioms,
            "c0_example": self.c0_example,
            "warnings": self.warnings,
        }

    def to_text(self) -> str:
        config = self.config
        lines = [
            "rieszstat suite report (schema {})".format(self.schema_version),
            "seed {}, {} trials per property, horizon {}".format(
                config["seed"], config["trials"], config["horizon"]
            ),
            "spaces: {}".format(", ".join(config["spaces"])),
            "measures: {}".format(", ".join(config["measures"])),
            "",
            "properties",
        ]
        for name, entry in self.properties.items():
            lines.append(
                "  {:<24} {} ({} trials, {} failed, {} skipped)".format(
                    name, entry["status"], entry["trials"], entry["failed"], entry["skipped"]
                )
            )
            lines += ["      note: {}".format(note) for note in entry["notes"]]
            for failure in entry["failures"]:
                lines.append(
                    "      trial {} [{} / {}] step '{}'".format(
                        failure["trial"],
                        failure["space"],
                        failure["measure"],
                        failure["step"],
                    )
                )
        lines += ["", "self tests"]
        for name, entry in self.self_tests.items():
            lines.append(
                "  {:<24} {} ({} samples)".format(name, entry["status"], entry["samples"])
            )
        lines += ["", "measure axioms"]
        for entry in self.axioms:
            lines.append(
                "  {:<24} {} ({} samples)".format(
                    entry["measure"], entry["status"], entry["samples"]
                )
            )
            for failure in entry["failures"]:
                lines.append(
                    "      {} fails on {} with {}".format(
                        failure["axiom"], failure["sets"], failure["values"]
                    )
                )
        lines += ["", "c0 example: {}".format(self.c0_example.get("status"))]
        lines += ["", "warnings: {}".format(len(self.warnings))]
        lines += ["  {}".format(w) for w in self.warnings]
        lines += ["", "status: {}".format(self.status)]
        return "\n".join(lines)


# ------------------------------------------------------------------------------
# trials


def _run_trial(job: Tuple[str, int, int, int, str, str, int]) -> Dict[str, Any]:
    """One seeded trial; module level so that process pools can pickle it."""
    name, prop_index, t, seed, space_name, measure_name, horizon = job
    ctx = TrialContext(
        rng=settings.rng_for(seed, prop_index, t),
        space=RieszSpace.from_text(space_name),
        measure=get_measure(measure_name),
        horizon=horizon,
    )
    outcome: Dict[str, Any] = {"trial": t, "space": space_name, "measure": measure_name}
    try:
        result = PROPERTIES[name](ctx)
    except TrialFailure as failure:
        outcome.update(status="fail", **failure.to_plain())
        return outcome
    except RieszStatError as error:
        outcome.update(
            status="fail",
            step="error",
            evidence="{}: {}".format(type(error).__name__, error),
            inputs={},
        )
        return outcome
    except Exception as error:
        LOGGER.debug("trial {} of {} raised {!r}".format(t, name, error))
        outcome.update(
            status="fail",
            step="unexpected error",
            evidence=traceback.format_exc(),
            inputs={},
        )
        return outcome
    outcome["status"] = "skipped" if result == SKIPPED else "pass"
    return outcome


def run_property(
    name: str, config: SuiteConfig, target_map: Optional[Callable] = None
) -> PropertyResult:
    """
    Run `config.trials` seeded instances of the named property.

    Parameters
    ----------
    name:
        key of `PROPERTIES`
    config:
        suite configuration
    target_map:
        map to run the trials with; by default a pool for `config.num_cpus` is
        started and closed again around this property

    Raises
    ------
    UnknownPropertyError
        for names outside `PROPERTIES`
    """
    if name not in PROPERTIES:
        raise UnknownPropertyError(
            "unknown property '{}', expected one of {}".format(name, sorted(PROPERTIES))
        )
    if target_map is None:
        with map_method(config.num_cpus) as own_map:
            return run_property(name, config, own_map)
    prop_index = list(PROPERTIES).index(name)
    jobs = [
        (name, prop_index, t, config.seed) + config.schedule(t) + (config.horizon,)
        for t in range(config.trials)
    ]
    with utils.InfoBar(
        "Parallel trials of {} [num_cpus={}]".format(name, config.num_cpus),
        config.num_cpus,
    ):
        outcomes = list(target_map(_run_trial, jobs))
    failures = [outcome for outcome in outcomes if outcome["status"] == "fail"]
    skipped = sum(1 for outcome in outcomes if outcome["status"] == "skipped")
    for failure in failures[:MAX_FAILURE_DUMPS]:
        del failure["status"]
    notes = []
    if name in SCOPE_NOTES and skipped:
        notes.append(SCOPE_NOTES[name])
    result = PropertyResult(
        name,
        config.trials,
        failed=len(failures),
        skipped=skipped,
        failures=failures[:MAX_FAILURE_DUMPS],
        notes=notes,
    )
    LOGGER.debug("property {}: {}".format(name, result.status))
    return result


# ------------------------------------------------------------------------------
# self tests


def birkhoff_self_test(seed: int, samples: int, spaces: Sequence[str]) -> Dict[str, Any]:
    """
    Birkhoff's inequality on seeded quadruples across the space roster.

    Raises
    ------
    ImplementationBugError
        on any violated instance
    """
    rng = settings.rng_for(seed, len(PROPERTIES), 0)
    instances = [RieszSpace.from_text(name) for name in spaces]
    for k in range(samples):
        space = instances[k % len(instances)]
        quadruple = [random_element(rng, space) for _ in range(4)]
        if not birkhoff_check(*quadruple):
            raise ImplementationBugError(
                "Birkhoff inequality fails on {}".format(
                    [x.to_text() for x in quadruple]
                )
            )
    return {"samples": samples, "status": "pass"}


def lattice_law_self_test(
    seed: int, samples: int, spaces: Sequence[str]
) -> Dict[str, Any]:
    rng = settings.rng_for(seed, len(PROPERTIES), 1)
    instances = [RieszSpace.from_text(name) for name in spaces]
    violations: List[Dict[str, Any]] = []
    for k in range(samples):
        space = instances[k % len(instances)]
        triple = [random_element(rng, space) for _ in range(3)]
        failed = lattice_law_violations(*triple)
        if failed and len(violations) < MAX_FAILURE_DUMPS:
            violations.append(
                {"laws": failed, "elements": [x.to_text() for x in triple]}
            )
    return {
        "samples": samples,
        "status": "pass" if not violations else "fail",
        "violations": violations,
    }


def axiom_self_tests(seed: int, samples: int, measures: Sequence[str]) -> List[Dict[str, Any]]:
    """axioms_check for every measure of the roster on sampled periodic sets, and for
    the co-countable measure on sampled atom sets."""
    rng = settings.rng_for(seed, len(PROPERTIES), 2)
    periodic_samples = random_periodic_sets(rng, samples)
    reports = [
        axioms_check(get_measure(name), periodic_samples, seed) for name in measures
    ]
    reports.append(axioms_check(CoCountable(), random_atom_sets(rng, samples), seed))
    return [report.to_plain() for report in reports]


# ------------------------------------------------------------------------------
# c₀ example


def _template_dominating_nets(space: RieszSpace) -> List[Net]:
    scales = [
        space.unit(1),
        space.element({1: 1, 2: 1, 3: 1}),
        space.element({k: 2 for k in range(1, 6)}),
    ]
    nets = [Net.constant(space.zero())]
    for s in scales:
        nets.append(Net.from_tail(space, HarmonicScale(s)))
        nets.append(Net.from_tail(space, GeometricScale(s, Fraction(1, 2))))
    return nets


def _c0_density_entry(
    measure: DirectedSetMeasure, net: Net, exceptional: SetExpr
) -> Dict[str, Any]:
    zero = net.space.zero()
    density = measure_eval(measure, exceptional)
    search = witness_search(net, zero, measure)
    return {
        "measure": measure.to_text(),
        "exceptional_density": density.to_text(),
        "witness_search": search.to_text(),
        "reproduced": is_exactly(density, Fraction(1, 2)) and isinstance(search, NotFound),
    }


def c0_example_report(
    measures: Optional[Sequence[DirectedSetMeasure]] = None,
) -> Dict[str, Any]:
    """
    Reproduce the finitely supported sequence example (e₁, 0, e₂, 0, ...): it is
    not order convergent (unbounded), its exceptional set toward 0 is the odds with
    mass 1/2 under every measure of the roster, no witness exists under any of
    them, its restriction to the evens converges in order, and it is accepted
    under the measure giving the evens mass 1.

    Parameters
    ----------
    measures:
        measure roster on ℕ; the periodic density if omitted. The first measure
        supplies the top-level density and search entries.
    """
    measures = list(measures) if measures is not None else [PeriodicDensity()]
    if not measures:
        raise ValueError("c0 example needs a nonempty measure roster")
    net = c0_example_net()
    space = net.space
    zero = space.zero()

    order_verdicts = [
        {"dominating": y.to_text(), "verdict": check_order_conv(net, zero, y).to_plain()}
        for y in _template_dominating_nets(space)
    ]
    order_rejected = all(not entry["verdict"]["accepted"] for entry in order_verdicts)
    bounded = is_order_bounded(net)

    exceptional = exceptional_set(net, zero, Net.constant(zero))
    by_measure = [_c0_density_entry(measure, net, exceptional) for measure in measures]

    evens = ArithProg(2, 2)
    restricted = check_order_conv(mask(net, evens), zero, Net.constant(zero))
    relative = RelativeDensity(evens)
    accepted = check_st_order_conv(net, zero, Witness(Net.constant(zero), evens), relative)

    reproduced = (
        order_rejected
        and bounded is False
        and all(entry["reproduced"] for entry in by_measure)
        and restricted.accepted
        and accepted.accepted
    )
    return {
        "net": net.to_text(),
        "status": "pass" if reproduced else "fail",
        "order_convergence": order_verdicts,
        "order_bounded": utils.to_plain(bounded),
        "exceptional_set": exceptional.to_text(),
        "exceptional_density": by_measure[0]["exceptional_density"],
        "witness_search": by_measure[0]["witness_search"],
        "measures": by_measure,
        "evens_restriction": restricted.to_plain(),
        "relative_density_evens": {
            "measure": relative.to_text(),
            "verdict": accepted.to_plain(),
        },
        "note": C0_DISCREPANCY_NOTE,
    }


# ------------------------------------------------------------------------------
# full run


def run_all(config: Optional[SuiteConfig] = None) -> SuiteReport:
    """
    Every property, the Birkhoff and lattice-law self-tests, the measure axiom
    checks and the c₀ example, in a fixed order.

    Raises
    ------
    ImplementationBugError
        if the Birkhoff self-test finds a violation
    PoolStartError
        if `config.num_cpus` > 1 and the worker pool cannot be started
    """
    config = config or SuiteConfig()
    report_warnings: List[str] = []
    if config.trials == 0:
        message = "suite run with trials=0: properties pass vacuously"
        warnings.warn(message, UserWarning)
        report_warnings.append(message)

    properties: Dict[str, Dict[str, Any]] = {}
    with map_method(config.num_cpus) as target_map:
        for name in tqdm(
            PROPERTIES, desc="properties", leave=False, disable=settings.PROGRESSBAR_DISABLED
        ):
            result = run_property(name, config, target_map)
            properties[name] = result.to_plain()
            for note in result.notes:
                report_warnings.append("{}: {}".format(name, note))

    self_tests = {
        "birkhoff": birkhoff_self_test(
            config.seed, settings.BIRKHOFF_SAMPLES, config.spaces
        ),
        "lattice_laws": lattice_law_self_test(
            config.seed, LATTICE_LAW_SAMPLES, config.spaces
        ),
    }
    axioms = axiom_self_tests(config.seed, settings.AXIOM_SAMPLES, config.measures)
    report = SuiteReport(
        config=config.to_plain(),
        properties=properties,
        self_tests=self_tests,
        axioms=axioms,
        c0_example=c0_example_report([get_measure(name) for name in config.measures]),
        warnings=report_warnings,
    )
    LOGGER.debug("suite seed {}: {}".format(config.seed, report.status))
    return report
