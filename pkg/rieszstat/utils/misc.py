# misc.py
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

import platform

from fractions import Fraction
from typing import Any, Dict, Optional

import numpy as np
import pyparsing
import sympy
import yaml

from rieszstat.settings import IN_IPYTHON

if IN_IPYTHON:
    from tqdm.notebook import tqdm
else:
    from tqdm import tqdm


class InfoBar:
    """Static one-line bar naming a parallel run, shown only with more than one cpu."""

    def __init__(self, desc: str, num_cpus: int) -> None:
        self.desc = desc
        self.num_cpus = num_cpus
        self.bar: Any = None

    def __enter__(self) -> "InfoBar":
        self.bar = tqdm(
            total=0,
            desc=self.desc,
            bar_format="{desc}",
            leave=False,
            disable=self.num_cpus <= 1,
        )
        return self

    def __exit__(self, *args) -> None:
        if self.bar is not None:
            self.bar.close()
            self.bar = None


def format_rational(value: Fraction) -> str:
    """Rational literal `p/q` (or `p` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def to_plain(value: Any) -> Any:
    """Convert evidence and report entries into str/int/bool/list/dict data that
    serializes identically on every run."""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, "to_text"):
        return value.to_text()
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [to_plain(item) for item in value]
        if isinstance(value, (set, frozenset)):
            items.sort(key=str)
        return items
    return str(value)


def remove_nones(data: Dict[str, Any]) -> Dict[str, Any]:
    return {key: value for key, value in data.items() if value is not None}


def about(print_info: bool = True) -> Optional[str]:
    """Version information for rieszstat and the packages doing its work; printed,
    or returned as a string with `print_info=False`."""
    from rieszstat import __version__

    versions = [
        ("rieszstat", __version__),
        ("numpy", np.__version__),
        ("sympy", sympy.__version__),
        ("pyyaml", yaml.__version__),
        ("pyparsing", pyparsing.__version__),
    ]
    lines = ["rieszstat: statistical order convergence in Riesz spaces", ""]
    lines += ["{:<11}{}".format(name + ":", version) for name, version in versions]
    lines.append("platform:  {} ({})".format(platform.system(), platform.machine()))
    info = "\n".join(lines) + "\n"
    if print_info:
        print(info)
        return None
    return info
