"""Constants for polylink."""

DOMAIN = "polylink"

EXIT_OK = 0
EXIT_PROPERTY_VIOLATED = 1
EXIT_INVALID_INPUT = 2
EXIT_TIME_LIMIT = 3

FORMAT_TEXT = "text"
FORMAT_JSON = "json"

# Targets with these suffixes are read as graph edge lists.
EDGE_LIST_SUFFIXES = (".edges", ".txt")

# Exhaustive searches poll the deadline every this many expansions.
DEADLINE_POLL_INTERVAL = 256

DEFAULT_LOG_LEVEL = "info"
DEFAULT_WORKERS = 1
DEFAULT_PAIRING_SAMPLE = 200

# Vertex caps per verification suite; larger corpus entries are skipped.
DEFAULT_SUITE_MAX_VERTICES = {
    "pnm-linkedness": 12,
    "connectivity": 17,
    "rooted-subdivision": 12,
    "general-linkage": 11,
    "simplex-face-linkage": 11,
    "upper-witness": 17,
    "cofacet": 17,
    "classification": 12,
    "complement": 17,
    "table": 0,
}

# Stable report field names.
FIELD_DIM = "dim"
FIELD_F0 = "f0"
FIELD_GAMMA = "gamma"
FIELD_LINKEDNESS = "linkedness"
FIELD_WITNESS_PAIRING = "witness_pairing"
FIELD_CANONICAL_FORM = "canonical_form"
FIELD_CLASSIFICATION = "classification"
FIELD_PAPER_DISCREPANCY = "paper_discrepancy"

# Exact k(d) for small d, imported from the literature rather than computed:
# k(3) = 1 and every 4- and 5-polytope is 2-linked.
IMPORTED_SMALL_K = {1: 1, 2: 1, 3: 1, 4: 2, 5: 2}
TABLE_MAX_DIM = 15

SUITE_ALL = "all"
SUITES = tuple(DEFAULT_SUITE_MAX_VERTICES)

LOG_LEVELS = ("critical", "error", "warning", "info", "debug")
