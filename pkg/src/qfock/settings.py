import os

DEFAULT_DIM_CAP = 4096  # largest dense d^n block (P_n, Gram levels, full-basis levels)
DIM_CAP_ENV = "QFOCK_DIM_CAP"
LOG_LEVEL_ENV = "QFOCK_LOG_LEVEL"

# Above this n, S_n is never enumerated (8! = 40320 permutation applications)
MAX_ENUMERATED_LEVEL = 8


def dim_cap() -> int:
    """Cap on d^n allocations, read from the environment on every call"""
    raw = os.environ.get(DIM_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_DIM_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{DIM_CAP_ENV} must be a positive integer, got {raw!r}")
    return cap


def log_level() -> str:
    return os.environ.get(LOG_LEVEL_ENV, "INFO").upper()
