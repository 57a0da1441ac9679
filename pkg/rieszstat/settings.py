"""
rieszstat: statistical order convergence in Riesz spaces
=========================================================

Module-level configuration. Values may be changed at runtime, e.g.
`rieszstat.settings.NUM_CPUS = 4`, and are read by the library at call time.
"""
# settings.py
#
# This file is part of rieszstat: exact verification of statistical order
# convergence of nets in Riesz spaces.
#
#    Copyright (c) 2024 and later, the rieszstat developers
#    All rights reserved.
#
#    This source code is licensed under the BSD-style license found in the
#    LICENSE file in the root directory of this source tree.
#######################################################################################

import warnings

from typing import Any, Optional, Tuple, Type, Union

import numpy as np


# Set format for output of warnings
def warning_on_one_line(
    message: Union[Warning, str],
    category: Type[Warning],
    filename: str,
    lineno: int,
    line: Optional[str] = None,
) -> str:
    return "{}: {}\n {}: {}".format(category.__name__, message, filename, lineno)


warnings.formatwarning = warning_on_one_line


# Function checking whether code is run from a jupyter notebook or inside ipython
def executed_in_ipython():
    try:  # inside ipython, the function get_ipython is always in globals()
        shell = get_ipython().__class__.__name__  # type: ignore
        if shell in ["ZMQInteractiveShell", "TerminalInteractiveShell"]:
            return True
        return False
    except NameError:
        return False


# a switch for displaying of progress bar; default: show only in ipython
if executed_in_ipython():
    PROGRESSBAR_DISABLED = False
    IN_IPYTHON = True
else:
    PROGRESSBAR_DISABLED = True
    IN_IPYTHON = False


# Density bounds -----------------------------------------------------------------------
# horizons k at which prefix ratios |S ∩ [1, k]| / k are evaluated
DEFAULT_HORIZON_SCHEDULE: Tuple[int, ...] = tuple(2**exp for exp in range(10, 21, 2))

# largest period accepted when normalizing boolean combinations of progressions
MAX_PERIOD = 10**6

# Checkers -----------------------------------------------------------------------------
# explicit window used by the convergence checkers before symbolic tail reasoning
CHECK_HORIZON = 64

# upper limit on thresholds found by eventual-sign analysis of closed-form tails;
# beyond it, the analysis reports Undetermined
MAX_THRESHOLD_SEARCH = 4096

# upper limit on candidate indices scanned when looking for a member of a set
MEMBER_SEARCH_CAP = 10**6

# Suite --------------------------------------------------------------------------------
DEFAULT_SEED = 42
DEFAULT_TRIALS = 500
SUITE_HORIZON = 32
BIRKHOFF_SAMPLES = 10000
AXIOM_SAMPLES = 500

# For parallel processing --------------------------------------------------------------
# store processing pool once generated
POOL: Any = None
# number of cores to be used by default in methods that enable parallel processing
NUM_CPUS = 1

# Select multiprocessing library
# Options:  'multiprocessing'
#           'pathos'
MULTIPROC = "pathos"


def rng_for(*entropy: int) -> np.random.Generator:
    """Return the deterministic 64-bit generator (PCG64) keyed by the given
    non-negative integers, e.g. (seed, property index, trial index)."""
    return np.random.default_rng(np.random.SeedSequence([int(e) for e in entropy]))
