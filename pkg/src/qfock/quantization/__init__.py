from .quantize import (
    ContractionMap,
    first_quantization,
    second_quantization_vector,
    conditional_expectation_e,
)
from .moments import (
    TraceValue,
    vacuum_trace,
    gaussian_moment,
    gaussian_moment_oracle,
    moment_table,
)

__all__ = [
    'ContractionMap',
    'first_quantization',
    'second_quantization_vector',
    'conditional_expectation_e',
    'TraceValue',
    'vacuum_trace',
    'gaussian_moment',
    'gaussian_moment_oracle',
    'moment_table',
]
