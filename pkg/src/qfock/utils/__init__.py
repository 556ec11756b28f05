from .errors import (
    GuardViolation,
    BasisMismatch,
    DimensionCapExceeded,
    ResolutionExhausted,
    UsageError,
)
from .report_encoder import ReportEncoder, dump_report, write_csv, format_float

__all__ = [
    'GuardViolation',
    'BasisMismatch',
    'DimensionCapExceeded',
    'ResolutionExhausted',
    'UsageError',
    'ReportEncoder',
    'dump_report',
    'write_csv',
    'format_float',
]
