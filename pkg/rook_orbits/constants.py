"""
Constants used throughout the rook_orbits package.
"""

# =============================================================================
# Random Sampling
# =============================================================================

DEFAULT_SEED: int = 7
DEFAULT_SAMPLES: int = 200              # orbit samples per check

# Random rationals p/q: p uniform in [-bound, bound], q drawn from the tuple
SAMPLE_NUMERATOR_BOUND: int = 9
SAMPLE_DENOMINATORS: tuple[int, ...] = (1, 2, 3)

# Random linear forms in the G2 partition check zero a coordinate with
# this probability so that every branch of the classifier is reached
ZERO_COORDINATE_PROBABILITY: float = 0.5

DEFAULT_PARTITION_FORMS: int = 1000     # forms drawn by the G2 partition check
DEFAULT_RANDOM_TABLES: int = 5          # rescaled G2 tables per verification
DEFAULT_ANDRE_FORMS: int = 500          # forms per size in the type A check
DEFAULT_DIMENSION_PLACEMENTS: int = 50  # random placements in the type A dimension check


# =============================================================================
# Reports
# =============================================================================

REPORT_SCHEMA_VERSION: int = 1
OUTPUT_FORMATS: tuple[str, ...] = ('text', 'json')

STATUS_PASS: str = 'PASS'
STATUS_FLAG: str = 'FLAG'
STATUS_FAIL: str = 'FAIL'
STATUS_SKIP: str = 'SKIP'

PROGRESS_EVERY: int = 50                # log a progress line every N items
MAX_COUNTEREXAMPLES: int = 5            # counterexamples kept per failing check


# =============================================================================
# F4 Data File
# =============================================================================

DATA_ENV_VAR: str = 'ROOK_ORBITS_DATA'
DATA_SCHEMA_VERSION: int = 1
DATA_PACKAGE_DIR: str = 'data'
DATA_FILE_NAME: str = 'f4_tables.json'

EXPECTED_MAXIMAL_PLACEMENTS: int = 24
EXPECTED_EXCEPTIONAL_PLACEMENTS: int = 8
EXPECTED_TABLE_ROWS: int = 24
EXPECTED_PROP42_TRIPLES: int = 26


# =============================================================================
# Root Systems
# =============================================================================

SUPPORTED_FAMILIES: tuple[str, ...] = ('A', 'G', 'F')
MAX_TYPE_A_RANK: int = 12               # keeps enumerations desk-sized
