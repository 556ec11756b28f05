from .jacobi import JacobiData, build_jacobi
from .rademacher import RademacherVector, rademacher_signs, rademacher_vector, spectral_quantiles, symmetry_residuals
from .decay import (
    DecayReport,
    DecayStep,
    commutator_range_vector,
    default_cut,
    jacobi_size,
    weak_decay_experiment,
    working_basis,
)
from .estimate import EstimateReport, EstimateRow, key_estimate_check

__all__ = [
    'JacobiData',
    'build_jacobi',
    'RademacherVector',
    'rademacher_signs',
    'rademacher_vector',
    'spectral_quantiles',
    'symmetry_residuals',
    'DecayReport',
    'DecayStep',
    'commutator_range_vector',
    'default_cut',
    'jacobi_size',
    'weak_decay_experiment',
    'working_basis',
    'EstimateReport',
    'EstimateRow',
    'key_estimate_check',
]
