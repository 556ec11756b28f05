from .fock_operator import FockOperator
from .primitives import (
    creation_left,
    creation_right,
    annihilation_left,
    annihilation_right,
    gaussian_left,
    gaussian_right,
)
from .operator_factory import OperatorFactory
from .reversal import reversal_s, reversal_operator
from .wick import (
    WickTerm,
    wick_expand,
    right_wick_expand,
    w_left,
    w_right,
    w_right_direct,
    apply_e_symbol,
)
from .identities import (
    adjoint_check,
    q_commutation_residual,
    wick_vacuum_residual,
    symbol_swap_residual,
    commutator_residual,
    reversal_conjugation_residual,
    symbol_adjoint_residual,
    operator_norm,
)

__all__ = [
    'FockOperator',
    'creation_left',
    'creation_right',
    'annihilation_left',
    'annihilation_right',
    'gaussian_left',
    'gaussian_right',
    'OperatorFactory',
    'reversal_s',
    'reversal_operator',
    'WickTerm',
    'wick_expand',
    'right_wick_expand',
    'w_left',
    'w_right',
    'w_right_direct',
    'apply_e_symbol',
    'adjoint_check',
    'q_commutation_residual',
    'wick_vacuum_residual',
    'symbol_swap_residual',
    'commutator_residual',
    'reversal_conjugation_residual',
    'symbol_adjoint_residual',
    'operator_norm',
]
