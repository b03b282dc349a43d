"""Resource caps and shared defaults.

The one knob governing every exhaustive q^n scan is the enumeration cap,
overridable through the environment variable QTHRESHOLD_ENUM_CAP.
"""

import os

from .errors import EnumerationCapError

DEFAULT_ENUM_CAP = 1 << 24
CODEWORD_CAP = 1 << 20

# Confidence parameter for Monte Carlo half-widths unless overridden.
DEFAULT_CONFIDENCE = 1e-6

# Rows per block in chunked scans over F_q^n or sample batches.
CHUNK_ROWS = 1 << 16

ENUM_CAP_ENV = "QTHRESHOLD_ENUM_CAP"


def enum_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None:
        return DEFAULT_ENUM_CAP
    try:
        value = int(raw)
    except ValueError as exc:
        raise EnumerationCapError(
            f"{ENUM_CAP_ENV} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise EnumerationCapError(f"{ENUM_CAP_ENV} must be positive, got {value}")
    return value


def check_enum_cap(size: int, what: str) -> None:
    """Raise EnumerationCapError when an exhaustive scan of `size` items
    would exceed the configured cap."""
    cap = enum_cap()
    if size > cap:
        raise EnumerationCapError(
            f"{what} needs {size} items, above the enumeration cap {cap} "
            f"(override with {ENUM_CAP_ENV})")
