# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

# Set default logging handler to avoid "No handler found" warnings.
import logging
from logging import NullHandler

from orbitwistor.config.defaults import threads


root = logging.getLogger(__name__)
root.addHandler(NullHandler())

root.info('orbitwistor starting up with %s worker threads', threads)
