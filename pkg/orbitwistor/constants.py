# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.

SCHEMA = "orbit-twistor/1"

# boolean verdicts (regularity, reality, D1/D2 membership)
DEFAULT_TOLERANCE = 1e-9
# singular values below RANK_RTOL * reference are treated as zero
DEFAULT_RANK_RTOL = 1e-9
# eigenvalues below SIGNATURE_RTOL * max |eigenvalue| count as zero
DEFAULT_SIGNATURE_RTOL = 1e-8

PENCIL_SAMPLES = 12
PENCIL_FIT_RTOL = 1e-8
E0_CONDITION_LIMIT = 1e8

DEFAULT_STEPS = 16
DEFAULT_NEWTON_TOL = 1e-11
DEFAULT_MAX_NEWTON_ITERS = 25
DEFAULT_MIN_P1 = 1e-8
WEIGHTED = "weighted"
LINEAR = "linear"
PATHS = [WEIGHTED, LINEAR]

# circle on which eigenvalue branches are tracked for the Cartan lift
LIFT_RADIUS = 0.7
LIFT_GRID = 256
LIFT_FIT_RTOL = 1e-8
LIFT_COLLISION_RTOL = 1e-6

LEVEL_GRID = 8

ALE_FD_STEP = 1e-4
ALE_RICHARDSON_FACTOR = 2.0
ALE_RICHARDSON_RTOL = 1e-2

DEFINITE_POSITIVE = "definite+"
DEFINITE_NEGATIVE = "definite-"
INDEFINITE = "indefinite"
UNKNOWN = "unknown"
CLASSES = [DEFINITE_POSITIVE, DEFINITE_NEGATIVE, INDEFINITE, UNKNOWN]

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_NUMERICAL = 4
