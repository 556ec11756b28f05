from .basis import FockBasis, Word, VACUUM, E_LETTER, remove_letter, foreign_count
from .vector import FockVector
from .symmetrizer import (
    Symmetrizer,
    pn_matrix,
    rnk_matrix,
    factorization_residual,
    apply_pn,
    insertion_gram,
    gram_min_eigenvalue,
    positivity_margin,
)
from .inner_product import (
    level_gram,
    q_inner,
    q_inner_arrays,
    q_norm,
    q_norm_array,
    gram_matrix,
    embed_norm_check,
)

__all__ = [
    'FockBasis',
    'Word',
    'VACUUM',
    'E_LETTER',
    'remove_letter',
    'foreign_count',
    'FockVector',
    'Symmetrizer',
    'pn_matrix',
    'rnk_matrix',
    'factorization_residual',
    'apply_pn',
    'insertion_gram',
    'gram_min_eigenvalue',
    'positivity_margin',
    'level_gram',
    'q_inner',
    'q_inner_arrays',
    'q_norm',
    'q_norm_array',
    'gram_matrix',
    'embed_norm_check',
]
