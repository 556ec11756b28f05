class GuardViolation(ValueError):
    """A vector reaches outside the levels (or foreign-letter count) on which an operator is exact"""


class BasisMismatch(ValueError):
    """Two vectors or operators live on different truncated bases"""


class DimensionCapExceeded(ValueError):
    """A dense d^n allocation would exceed QFOCK_DIM_CAP"""


class ResolutionExhausted(ValueError):
    """The truncated spectrum has too few atoms for the requested Rademacher index"""


class UsageError(ValueError):
    """Invalid command line input (exit status 2)"""
