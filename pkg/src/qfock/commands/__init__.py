from .check_result import CheckResult, run_check
from .verify import VerifyCommand
from .factoriality import FactorialityCommand
from .table import TableCommand

__all__ = [
    'CheckResult',
    'run_check',
    'VerifyCommand',
    'FactorialityCommand',
    'TableCommand',
]
