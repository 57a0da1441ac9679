# cpu_switch.py
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

import contextlib
import logging

from typing import Any, Callable, Iterator

import rieszstat.settings as settings

from rieszstat.core.exceptions import PoolStartError

LOGGER = logging.getLogger(__name__)


def _pathos_pool(workers: int) -> Any:
    try:
        import dill
        import pathos
    except ImportError:
        raise PoolStartError(
            "settings.MULTIPROC is 'pathos', but 'pathos'/'dill' cannot be imported;"
            " install rieszstat[pathos] or set settings.MULTIPROC = 'multiprocessing'"
        ) from None
    dill.settings["recurse"] = True
    return pathos.pools.ProcessPool(nodes=workers)


def _multiprocessing_pool(workers: int) -> Any:
    import multiprocessing

    return multiprocessing.Pool(processes=workers)


POOL_FACTORIES = {"pathos": _pathos_pool, "multiprocessing": _multiprocessing_pool}


def get_map_method(num_cpus: int) -> Callable:
    """
    `map` for running independent suite trials. With more than one cpu, a worker
    pool of the flavor `settings.MULTIPROC` is started and kept in `settings.POOL`
    until `close_pool` is called. Every flavor returns results in input order, so
    reports do not depend on `num_cpus`.

    Parameters
    ----------
    num_cpus: int

    Returns
    -------
    function
        `.map` method to be used by caller

    Raises
    ------
    PoolStartError
        if the pool flavor cannot be imported or started
    """
    if num_cpus <= 1:
        return map
    factory = POOL_FACTORIES.get(settings.MULTIPROC)
    if factory is None:
        raise ValueError(
            "settings.MULTIPROC must be one of {}, got '{}'".format(
                sorted(POOL_FACTORIES), settings.MULTIPROC
            )
        )
    close_pool()
    LOGGER.debug("starting {} pool with {} workers".format(settings.MULTIPROC, num_cpus))
    try:
        settings.POOL = factory(num_cpus)
    except (OSError, ImportError) as error:
        if isinstance(error, PoolStartError):
            raise
        raise PoolStartError(
            "cannot start {} pool: {}".format(settings.MULTIPROC, error)
        ) from error
    return settings.POOL.map


def close_pool() -> None:
    """Close and join the pool kept in `settings.POOL`, if any."""
    pool, settings.POOL = settings.POOL, None
    if pool is None:
        return
    LOGGER.debug("closing worker pool")
    pool.close()
    pool.join()
    clear = getattr(pool, "clear", None)
    if clear is not None:
        clear()


@contextlib.contextmanager
def map_method(num_cpus: int) -> Iterator[Callable]:
    """`get_map_method` as a context; the pool is closed on exit."""
    target_map = get_map_method(num_cpus)
    try:
        yield target_map
    finally:
        close_pool()
