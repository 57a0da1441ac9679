# descriptors.py
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

# Recap on descriptors: see https://realpython.com/python-descriptors/

from typing import Any, Generic, Type, TypeVar

TargetType = TypeVar("TargetType")


class ReadOnlyProperty(Generic[TargetType]):
    """
    Descriptor for read-only attributes of immutable values (stored in xxx._name).
    The stored value is set once, from `__init__`, through `set_readonly`.
    """

    def __init__(self, target_type: Type[TargetType]):
        super().__init__()
        self.target_type = target_type

    def __set_name__(self, owner, name: str):
        self.public_name = name
        self.name = f"_{name}"

    def __get__(self, instance: Any, *args, **kwargs) -> TargetType:
        if instance is None:  # when accessed on class level rather than instance level
            return self  # type:ignore
        try:
            return instance.__dict__[self.name]
        except KeyError:
            raise AttributeError(
                "'{}' has not been initialized on {}".format(
                    self.public_name, type(instance).__name__
                )
            ) from None

    def __set__(self, instance: Any, value: Any):
        raise AttributeError(
            "Property '{}' is for reading only, cannot assign to it.".format(
                self.public_name
            )
        )


def set_readonly(instance: Any, **values: Any) -> None:
    """Store initial values behind the `ReadOnlyProperty` descriptors of `instance`."""
    for name, value in values.items():
        instance.__dict__["_" + name] = value
