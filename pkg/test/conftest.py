# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

from orbitwistor.testing.pytest_plugin import (  # noqa
    pytest_addoption, pytest_configure,
    pauli_triple, rng, sl2, sl2_cone, sl3_cone, write_document,
)
