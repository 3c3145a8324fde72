# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from orbitwistor.config import defaults

logger = logging.getLogger('orbitwistor.workers')


def sample_streams(seed, count):
    """ Independent generators, one per sample, derived from ``seed``. """
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.default_rng(child) for child in children]


def sample_map(fn, items, threads=None):
    """ ``[fn(item) for item in items]`` on a thread pool.

    Results come back in input order whatever the number of threads.

    """
    items = list(items)
    threads = defaults.threads if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug('%s samples on %s threads', len(items), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
