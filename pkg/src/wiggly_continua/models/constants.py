"""
Constants and default values shared across the package.

Analysis defaults follow the standing assumptions of the corona
construction: λ = 1/2, M = 4·log 10, ε = 1/100.
"""

import math

#
# Tags
#
TAG_W = "W"
TAG_E = "E"
VALID_TAGS = (TAG_W, TAG_E)

#
# Geometry defaults
#
DEFAULT_RESOLUTION_GUARD = 10.0
DEFAULT_KERNEL_TOLERANCE = 1e-9
DEFAULT_BETA_CACHE_SIZE = 65536

#
# Multiscale defaults
#
DEFAULT_LAMBDA = 0.5
DEFAULT_BETA0 = 0.05
DEFAULT_POROSITY_EPSILON = 1.0 / 6.0
DEFAULT_PROBE_POINTS = 32  # Sample points the pointwise scans run at

#
# Corona defaults
#
DEFAULT_BUDGET = 4.0 * math.log(10.0)
DEFAULT_EPSILON = 0.01
DEFAULT_N_MAX = 6
DEFAULT_PROBE_COUNT = 1000
LEMMA_CONSTANT = 10.0
LEMMA_DIAGNOSTIC_CONSTANT = 23.0
GOOD_BALL_FRACTION = 0.01

#
# Dimension defaults
#
DEFAULT_QUANTILE = 0.1
DEFAULT_BOX_GUARD = 2.0
DEFAULT_MAX_AUDIT_ATOMS = 256
DEFAULT_LOCAL_SCALES = 5
BOX_COARSE_FRACTION = 0.25
MASS_BOUND_SLACK = 0.1

#
# File formats
#
DATASET_FORMAT = "wiggly-dataset"
REPORT_FORMAT = "wiggly-report"
CORPUS_FORMAT = "wiggly-corpus"
SCHEMA_VERSION = 1
COORDINATE_FORMAT = ".17g"
