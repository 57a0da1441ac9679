# test_misc.py
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

import sys

from fractions import Fraction

import pytest

import rieszstat.settings as settings
import rieszstat.utils.cpu_switch as cpu_switch
import rieszstat.utils.misc as utils

from rieszstat.core.exceptions import PoolStartError
from rieszstat.core.set_expr import ArithProg
from rieszstat.utils.cpu_switch import close_pool, get_map_method, map_method


class TestPlainData:
    def test_rationals(self):
        assert utils.format_rational(Fraction(-6, 4)) == "-3/2"
        assert utils.format_rational(Fraction(4, 2)) == "2"

    def test_nested(self):
        plain = utils.to_plain(
            {1: [Fraction(1, 2), ArithProg(2, 2)], "flag": True, "none": None}
        )
        assert plain == {"1": ["1/2", "ap(2,2)"], "flag": True, "none": None}

    def test_sets_are_sorted(self):
        assert utils.to_plain(frozenset({3, 1, 2})) == [1, 2, 3]

    def test_remove_nones(self):
        assert utils.remove_nones({"a": 0, "b": None}) == {"a": 0}


def test_about():
    info = utils.about(print_info=False)
    assert info.startswith("rieszstat: statistical order convergence")
    assert "sympy:" in info


class TestMapMethod:
    def test_single_cpu(self):
        assert get_map_method(1) is map

    def test_unknown_flavor(self, monkeypatch):
        monkeypatch.setattr(settings, "MULTIPROC", "threads")
        with pytest.raises(ValueError):
            get_map_method(2)

    def test_pool_closed_after_use(self, monkeypatch):
        pools = []
        factory = FakePool.start(pools)
        monkeypatch.setitem(cpu_switch.POOL_FACTORIES, "multiprocessing", factory)
        monkeypatch.setattr(settings, "MULTIPROC", "multiprocessing")
        with map_method(2) as target_map:
            assert list(target_map(abs, [-1, 2, -3])) == [1, 2, 3]
            assert settings.POOL is pools[0]
        assert settings.POOL is None
        assert pools[0].events == ["close", "join"]

    def test_restart_closes_previous_pool(self, monkeypatch):
        pools = []
        factory = FakePool.start(pools)
        monkeypatch.setitem(cpu_switch.POOL_FACTORIES, "multiprocessing", factory)
        monkeypatch.setattr(settings, "MULTIPROC", "multiprocessing")
        get_map_method(2)
        get_map_method(3)
        assert pools[0].events == ["close", "join"]
        assert pools[1].workers == 3
        close_pool()
        assert pools[1].events == ["close", "join"]
        close_pool()

    def test_missing_pathos(self, monkeypatch):
        monkeypatch.setattr(settings, "MULTIPROC", "pathos")
        monkeypatch.setitem(sys.modules, "pathos", None)
        with pytest.raises(PoolStartError):
            get_map_method(2)
        with pytest.raises(ImportError):
            get_map_method(2)
        assert settings.POOL is None


class FakePool:
    def __init__(self, workers):
        self.workers = workers
        self.events = []

    @classmethod
    def start(cls, pools):
        def factory(workers):
            pools.append(cls(workers))
            return pools[-1]

        return factory

    def map(self, fn, items):
        return [fn(item) for item in items]

    def close(self):
        self.events.append("close")

    def join(self):
        self.events.append("join")
