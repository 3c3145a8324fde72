# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# environment variables override the tolerances of constants.py. the CLI
# ``--tol`` flag overrides ``tolerance`` again for a single invocation.

import logging
import os

from orbitwistor.constants import (
    DEFAULT_RANK_RTOL, DEFAULT_SIGNATURE_RTOL, DEFAULT_TOLERANCE,
)
from orbitwistor.errors import OrbitwistorError

logger = logging.getLogger(__name__)


def _positive_float(name, default):
    raw = os.environ.get(name, default)
    try:
        value = float(raw)
    except (TypeError, ValueError):
        value = -1.0

    if not value > 0:
        logger.error('bad value for %s: "%s"', name, raw)
        raise OrbitwistorError(
            'export {} as a positive number or remove it to use the '
            'default {}'.format(name, default)
        )

    return value


def _threads():
    raw = os.environ.get('THREADS')
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        logger.error('bad value for THREADS: "%s"', raw)
        raise OrbitwistorError('THREADS must be a positive integer')
    return value


tolerance = _positive_float('ORBITWISTOR_TOL', DEFAULT_TOLERANCE)
rank_rtol = _positive_float('ORBITWISTOR_RANK_RTOL', DEFAULT_RANK_RTOL)
signature_rtol = _positive_float(
    'ORBITWISTOR_SIGNATURE_RTOL', DEFAULT_SIGNATURE_RTOL,
)
threads = _threads()

logger.info(
    'tolerance %s, rank rtol %s, signature rtol %s, %s threads',
    tolerance, rank_rtol, signature_rtol, threads,
)
