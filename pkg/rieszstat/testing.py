# testing.py
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

import pytest

from rieszstat.tests.conftest import TESTDIR


def run():
    """
    Run the pytest scripts for rieszstat.
    """
    # runs tests in rieszstat.tests directory
    pytest.main(["-v", TESTDIR])
