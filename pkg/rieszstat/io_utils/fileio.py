# fileio.py
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
Helper routines for writing reports to files and reading them back.
"""

import os

from typing import TYPE_CHECKING, Any, Dict, Optional, Union

import rieszstat.core.constants as const
import rieszstat.io_utils.fileio_serializers as io_serializers

if TYPE_CHECKING:
    from rieszstat.io_utils.fileio_backends import IOWriter, YAMLReader
    from rieszstat.io_utils.fileio_serializers import Serializable


class IOData:
    """
    Class for processing input/output data: plain attributes, nested objects, and
    an optional human-readable summary used by the text backend.
    """

    def __init__(
        self,
        typename: str,
        attributes: Union[Dict[str, Any], None],
        objects: Any = None,
        summary: Optional[str] = None,
    ) -> None:
        self.typename = typename
        self.attributes = attributes or {}
        self.objects = objects or {}
        self.summary = summary

    def __getitem__(self, name: str) -> Any:
        return self.as_kwargs()[name]

    def as_kwargs(self) -> Dict[str, Any]:
        """Return a joint dictionary of attributes and objects, as used in __init__
        calls"""
        return {**self.attributes, **self.objects}


def serialize(the_object: "Serializable") -> IOData:
    """Turn a report object into IOData, needed for writing data to file."""
    if hasattr(the_object, "serialize"):
        return the_object.serialize()
    raise NotImplementedError(
        "No implementation for writing {} to file".format(type(the_object).__name__)
    )


def deserialize(iodata: IOData) -> Any:
    """Rebuild the registered report class named by `iodata.typename`."""
    cls = io_serializers.SERIALIZABLE_REGISTRY.get(iodata.typename)
    if cls is None:
        raise NotImplementedError(
            "No implementation for converting {} data to Python object.".format(
                iodata.typename
            )
        )
    return cls.deserialize(iodata)


def write(the_object: Any, filename: str) -> None:
    """
    Write `the_object` to a file with name `filename`; the suffix selects the
    format (`.yaml`/`.yml` structured, `.txt` human-readable).

    Parameters
    ----------
    the_object:
        object to be written
    filename:
        Name of file to be written.
    """
    iodata = serialize(the_object)
    writer = IO.get_writer(filename)
    writer.to_file(iodata)


def read(filename: str) -> Any:
    """
    Read a Serializable object from a structured file.

    Parameters
    ----------
    filename:
        Name of file to be read.

    Returns
    -------
        class instance initialized with the data from the file
    """
    reader = IO.get_reader(filename)
    iodata = reader.from_file(filename)
    return deserialize(iodata)


class FileIOFactory:
    """Factory method for choosing reader/writer according to given format"""

    def get_writer(self, file_name: str) -> "IOWriter":
        """
        Based on the extension of the provided file name, return the appropriate
        writer engine.
        """
        import rieszstat.io_utils.fileio_backends as io_backends

        _, suffix = os.path.splitext(file_name)
        if suffix in (".yaml", ".yml"):
            return io_backends.YAMLWriter(file_name)
        if suffix == ".txt":
            return io_backends.TextWriter(file_name)
        raise ValueError(
            "Extension '{}' of given file name '{}' does not match any supported "
            "file type: {}".format(suffix, file_name, const.FILE_TYPES)
        )

    @staticmethod
    def get_reader(file_name: str) -> "YAMLReader":
        """
        Based on the extension of the provided file name, return the appropriate
        reader engine. Text reports are write-only.
        """
        import rieszstat.io_utils.fileio_backends as io_backends

        _, suffix = os.path.splitext(file_name)
        if suffix in (".yaml", ".yml"):
            return io_backends.YAMLReader()
        raise ValueError(
            "Extension '{}' of given file name '{}' does not match any readable "
            "file type: {}".format(suffix, file_name, const.FILE_TYPES[0])
        )


IO = FileIOFactory()
