# conftest.py  ---  for use with pytest
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

import pytest

import rieszstat
import rieszstat.settings

from rieszstat.core.lattice import RieszSpace

TESTDIR, _ = os.path.split(rieszstat.__file__)
TESTDIR = os.path.join(TESTDIR, "tests", "")  # local rieszstat directory holding tests
DATADIR = os.path.join(TESTDIR, "data", "")  # net-spec fixtures within rieszstat


def pytest_addoption(parser):
    """
    Custom pytest command line option for multi-processing tests: add
    ` --num_cpus 2` to pytest calls.
    """
    parser.addoption(
        "--num_cpus", action="store", default=1, help="number of cores to be used"
    )


@pytest.fixture(scope="session")
def num_cpus(pytestconfig):
    return int(pytestconfig.getoption("num_cpus"))


@pytest.fixture
def use_num_cpus(num_cpus, monkeypatch):
    """Run suite trials on the requested number of cores."""
    monkeypatch.setattr(rieszstat.settings, "NUM_CPUS", num_cpus)
    return num_cpus


@pytest.fixture
def rationals():
    return RieszSpace.rationals()


@pytest.fixture
def plane():
    return RieszSpace.vector(2)


@pytest.fixture
def finsupp():
    return RieszSpace.finsupp()


@pytest.fixture(params=["rationals", "vector(3)", "finsupp"])
def any_space(request):
    return RieszSpace.from_text(request.param)

