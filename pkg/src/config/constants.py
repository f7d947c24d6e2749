"""Numeric defaults shared by the algebra, series and verification layers.

Everything tunable lives here so that CLI configs and tests read the same
values.
"""

# Truncation order used when a command does not specify one
DEFAULT_ORDER = 50

# Default bounds for the verification suite
DEFAULT_MAX_WEIGHT = 7
DEFAULT_KMAX = 8

# Exact factorials/binomials below this bound are served from a table
FACTORIAL_MEMO_BOUND = 64

# Span solves use at least SPAN_ORDER_FACTOR * rank coefficient rows
SPAN_ORDER_FACTOR = 2

# Upper limit for the adaptive span order; beyond it the certificate is
# reported as saturated instead of growing further
MAX_SPAN_ORDER = 400

# Memo sizes for the product recursions and series evaluation
PRODUCT_CACHE_SIZE = 1 << 16
SERIES_CACHE_SIZE = 1 << 14
EXPANSION_CACHE_SIZE = 1 << 14

# Environment variable that overrides the report directory
REPORTS_ENV_VAR = "QBRACKETS_REPORTS_BASE"
