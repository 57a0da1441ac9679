# rieszstat: statistical order convergence of nets in Riesz spaces
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
"""rieszstat is a Python library for exact verification of statistical order
convergence of nets in Riesz spaces. Index subsets are symbolic expressions with
exact asymptotic densities and directed-set measures, nets are explicit prefixes
followed by closed-form tail rules, and every checker returns a verdict with
concrete evidence. A seeded theorem suite exercises the structural properties of
statistical order convergence and writes deterministic reports."""
############################################################################

import warnings

from rieszstat import settings

# index sets and measures
from rieszstat.core.density import Bounds, Exact, density, prefix_density
from rieszstat.core.index_sets import DirectedIndex
from rieszstat.core.measures import (
    CoCountable,
    OverrideMeasure,
    PeriodicDensity,
    PrefixBoundsDensity,
    RelativeDensity,
    axioms_check,
    get_measure,
    measure_eval,
)
from rieszstat.core.periodic import normalize
from rieszstat.core.set_expr import (
    EMPTY,
    FULL,
    ArithProg,
    CoListed,
    Complement,
    FiniteList,
    Intersection,
    Listed,
    PredicateSampled,
    Union,
)

# Riesz spaces
from rieszstat.core.lattice import (
    RieszElement,
    RieszSpace,
    absolute,
    birkhoff_check,
    inf,
    negative_part,
    positive_part,
    sup,
)

# nets and convergence
from rieszstat.core.convergence import (
    NotFound,
    Witness,
    check_order_conv,
    check_st_decreasing,
    check_st_order_conv,
    exceptional_set,
    infimum_on,
    is_decreasing_on,
    ru_check,
    witness_search,
)
from rieszstat.core.nets import Net, combine, evaluate, mask, subnet
from rieszstat.core.tail_rules import (
    EventuallyConstant,
    GeometricScale,
    HarmonicScale,
    InterleavedUnits,
    Masked,
    SpikeOn,
    Switch,
)
from rieszstat.core.verdicts import Undetermined, Verdict

# theorem suite
from rieszstat.core.suite import SuiteConfig, run_all, run_property

# file IO
from rieszstat.io_utils.fileio import read, write
from rieszstat.io_utils.grammar import parse_element, parse_set_expr, parse_tail
from rieszstat.io_utils.netspec import NetSpecDocument

# for showing rieszstat info
from rieszstat.utils.misc import about

# version
try:
    from rieszstat.version import version as __version__
except ImportError:
    __version__ = "???"
    warnings.warn(
        "rieszstat: missing version information - did rieszstat install correctly?",
        ImportWarning,
    )
