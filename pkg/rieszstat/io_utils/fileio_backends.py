# fileio_backends.py
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
Backends writing IOData to YAML (structured) and plain text (human-readable) files.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List

import yaml

import rieszstat.io_utils.fileio as io
import rieszstat.utils.misc as utils

TYPE_KEY = "__type"


def dump_yaml(data: Any) -> str:
    """Deterministic YAML rendering: sorted keys, block style, UTF-8 text."""
    return yaml.safe_dump(
        data, sort_keys=True, default_flow_style=False, allow_unicode=True
    )


def iodata_to_plain(io_data: io.IOData) -> Dict[str, Any]:
    """Nested mapping with the type name under `__type`."""
    plain: Dict[str, Any] = {TYPE_KEY: io_data.typename}
    plain.update(utils.to_plain(io_data.attributes))
    for name, obj in io_data.objects.items():
        plain[name] = iodata_to_plain(io.serialize(obj))
    return plain


def plain_to_iodata(plain: Dict[str, Any]) -> io.IOData:
    plain = dict(plain)
    typename = plain.pop(TYPE_KEY)
    attributes: Dict[str, Any] = {}
    objects: Dict[str, Any] = {}
    for name, value in plain.items():
        if isinstance(value, dict) and TYPE_KEY in value:
            objects[name] = io.deserialize(plain_to_iodata(value))
        else:
            attributes[name] = value
    return io.IOData(typename, attributes, objects)


class IOWriter(ABC):
    """
    ABC for writing class instance data to file.

    Parameters
    ----------
    filename: str
    """

    def __init__(self, filename: str) -> None:
        self.filename = filename
        self.io_data: io.IOData

    @abstractmethod
    def to_file(self, io_data: io.IOData, **kwargs):
        pass


class YAMLWriter(IOWriter):
    """Writes IOData as a YAML mapping; identical data give identical bytes."""

    def to_file(self, io_data: io.IOData, **kwargs) -> None:
        self.io_data = io_data
        with open(self.filename, mode="w", encoding="utf-8", newline="\n") as stream:
            stream.write(dump_yaml(iodata_to_plain(io_data)))


class TextWriter(IOWriter):
    """Writes the human-readable summary of IOData, or an indented listing of its
    attributes if the object has none."""

    @staticmethod
    def render(value: Any, indent: int = 0) -> List[str]:
        pad = "  " * indent
        if isinstance(value, dict):
            lines = []
            for key in sorted(value):
                item = value[key]
                if isinstance(item, (dict, list)) and item:
                    lines.append("{}{}:".format(pad, key))
                    lines.extend(TextWriter.render(item, indent + 1))
                else:
                    lines.append("{}{}: {}".format(pad, key, item))
            return lines
        if isinstance(value, list):
            lines = []
            for item in value:
                if isinstance(item, (dict, list)):
                    lines.append("{}-".format(pad))
                    lines.extend(TextWriter.render(item, indent + 1))
                else:
                    lines.append("{}- {}".format(pad, item))
            return lines
        return ["{}{}".format(pad, value)]

    def to_file(self, io_data: io.IOData, **kwargs) -> None:
        self.io_data = io_data
        if io_data.summary is not None:
            text = io_data.summary
        else:
            text = "\n".join(self.render(iodata_to_plain(io_data)))
        with open(self.filename, mode="w", encoding="utf-8", newline="\n") as stream:
            stream.write(text.rstrip("\n") + "\n")


class YAMLReader:
    """Reads YAML files written by YAMLWriter."""

    def from_file(self, filename: str, **kwargs) -> io.IOData:
        """
        Returns
        -------
            IOData, with nested typed mappings already turned into objects
        """
        with open(filename, mode="r", encoding="utf-8") as stream:
            plain = yaml.safe_load(stream)
        if not isinstance(plain, dict) or TYPE_KEY not in plain:
            raise ValueError(
                "{} is not a rieszstat report (missing '{}')".format(filename, TYPE_KEY)
            )
        return plain_to_iodata(plain)
