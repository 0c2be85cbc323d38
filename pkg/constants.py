import os
from fractions import Fraction

MONOID_ELEMENT_CAP = int(os.getenv("MONOID_ELEMENT_CAP", "1_000_000"))
ENUMERATION_GUARD = int(os.getenv("ENUMERATION_GUARD", "10_000_000"))
FUT_STATE_LIMIT = int(os.getenv("FUT_STATE_LIMIT", "20"))

LIMIT_EPSILON = Fraction(os.getenv("LIMIT_EPSILON", "1/64"))
MIN_SERIES_LENGTH = int(os.getenv("MIN_SERIES_LENGTH", "64"))

REGEX_CACHE_SIZE = int(os.getenv("REGEX_CACHE_SIZE", "128"))
# the parser recurses once per parenthesis level
REGEX_MAX_NESTING = int(os.getenv("REGEX_MAX_NESTING", "100"))
MAX_INPUT_SIZE = int(os.getenv("MAX_INPUT_SIZE", "200_000"))

DEBUG = os.getenv("DEBUG", "false").lower() == "true"

if not 0 < LIMIT_EPSILON < 1:
    raise ValueError(f"LIMIT_EPSILON {LIMIT_EPSILON} must lie strictly between 0 and 1.")
