# fileio_serializers.py
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
Conversion between rieszstat report objects and IOData. A report object is stored
through the arguments of its `__init__`: plain data (numbers, strings, rationals,
lists and mappings of those) goes into the attributes, nested report objects into
the objects of the IOData.
"""

import inspect

from typing import TYPE_CHECKING, Any, Dict, List, Type

from typing_extensions import Protocol, runtime_checkable

import rieszstat.utils.misc as utils

if TYPE_CHECKING:
    from rieszstat.io_utils.fileio import IOData


SERIALIZABLE_REGISTRY: Dict[str, Type["Serializable"]] = {}


@runtime_checkable
class Serializable(Protocol):
    """Mix-in for report classes that can be written with `fileio.write` and rebuilt
    with `fileio.read`. Subclasses are registered by class name."""

    def __init_subclass__(cls) -> None:
        super().__init_subclass__()
        if not inspect.isabstract(cls):
            SERIALIZABLE_REGISTRY[cls.__name__] = cls

    @classmethod
    def deserialize(cls, io_data: "IOData") -> "Serializable":
        return cls(**io_data.as_kwargs())

    def serialize(self) -> "IOData":
        """
        IOData holding the `__init__` arguments of this object; the `to_text`
        rendering, if any, travels along as the summary for text reports.
        """
        import rieszstat.io_utils.fileio as io

        attributes: Dict[str, Any] = {}
        objects: Dict[str, Any] = {}
        for name in init_params(type(self)):
            value = getattr(self, name)
            if value is None:
                continue
            if isinstance(value, Serializable):
                objects[name] = value
            else:
                attributes[name] = utils.to_plain(value)
        summary = self.to_text() if hasattr(self, "to_text") else None  # type: ignore
        return io.IOData(type(self).__name__, attributes, objects, summary)

    def filewrite(self, filename: str) -> None:
        """Write this object; the suffix of `filename` selects the format."""
        import rieszstat.io_utils.fileio as io

        io.write(self, filename)

    @classmethod
    def create_from_file(cls, filename: str) -> object:
        """Read a report written by `filewrite` and rebuild the object."""
        import rieszstat.io_utils.fileio as io

        return io.read(filename)


def init_params(cls: type) -> List[str]:
    """Names of the `__init__` parameters of `cls`, the fields that are stored."""
    parameters = inspect.signature(cls.__init__).parameters  # type: ignore
    return [
        name
        for name, parameter in parameters.items()
        if name != "self"
        and parameter.kind not in (parameter.VAR_POSITIONAL, parameter.VAR_KEYWORD)
    ]
