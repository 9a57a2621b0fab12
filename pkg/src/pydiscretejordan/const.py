"""Constants for pydiscretejordan."""

__all__ = [
    # Document format
    "DCX_FORMAT_VERSION",
    "DCX_HEADER",
    "RECORD_VERTEX",
    "RECORD_EDGE",
    "RECORD_CELL",
    "RECORD_U3",
    "RECORD_META",
    "COMMENT_PREFIX",
    "LIST_SEPARATOR",
    "FORBIDDEN_ID_CHARS",
    # Pseudo node tags
    "CELL_TAG",
    "EDGE_TAG",
    # Enumeration and search defaults
    "MIN_CYCLE_LEN",
    "AUTO_MAX_LEN_VERTEX_LIMIT",
    "MINIMALITY_SEARCH_VERTEX_LIMIT",
    "DEFAULT_MAX_CYCLE_LEN",
    "DEFAULT_MAX_STEPS",
    "DEFAULT_SUITE_MAX_LEN",
    # Fixture parameter ranges
    "GRID_MIN_SIZE",
    "TORUS_MIN_SIZE",
    "MOEBIUS_MIN_LENGTH",
    "DEFAULT_GRID_SIZE",
    "DEFAULT_TORUS_SIZE",
    "DEFAULT_MOEBIUS_LENGTH",
    # Exit codes
    "EXIT_OK",
    "EXIT_FAILED",
    "EXIT_INDETERMINATE",
    "EXIT_INPUT_ERROR",
]

# Document format
DCX_FORMAT_VERSION = 1
DCX_HEADER = "DCX"
RECORD_VERTEX = "V"
RECORD_EDGE = "E"
RECORD_CELL = "C"
RECORD_U3 = "U3"
RECORD_META = "M"
COMMENT_PREFIX = "#"
LIST_SEPARATOR = ","
# Vertex ids are opaque, but these would break the line format or pseudo tags
FORBIDDEN_ID_CHARS = frozenset(",:# \t")

# Pseudo node tags in augmented incidence structures
CELL_TAG = "cell"
EDGE_TAG = "edge"

# Enumeration and search defaults
MIN_CYCLE_LEN = 3  # A simple cycle in a simple graph has at least 3 vertices
AUTO_MAX_LEN_VERTEX_LIMIT = 20  # Above this, cycle length bounds must be explicit
MINIMALITY_SEARCH_VERTEX_LIMIT = 16  # Exhaustive 3-cell minimality search ceiling
DEFAULT_MAX_CYCLE_LEN = 8
DEFAULT_MAX_STEPS = 12
DEFAULT_SUITE_MAX_LEN = 10

# Fixture parameter ranges
GRID_MIN_SIZE = 2
TORUS_MIN_SIZE = 3  # Smaller wraps would create duplicate edges
MOEBIUS_MIN_LENGTH = 3
DEFAULT_GRID_SIZE = 3
DEFAULT_TORUS_SIZE = 4
DEFAULT_MOEBIUS_LENGTH = 5

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INDETERMINATE = 2
EXIT_INPUT_ERROR = 3
