"""
精确有理数线性代数
"""

from .matrix import Matrix, Vector, matrix, qq, rref
from .subspace import (
    Subspace,
    kernel,
    image,
    kernel_image,
    solve,
    subspace_sum,
    subspace_intersect,
    subspace_contains,
    push_forward,
)
from .polynomial import (
    minimal_polynomial,
    squarefree_part,
    jordan_chevalley,
    exp_nilpotent,
    is_semisimple,
)

__all__ = [
    'Matrix',
    'Vector',
    'matrix',
    'qq',
    'rref',
    'Subspace',
    'kernel',
    'image',
    'kernel_image',
    'solve',
    'subspace_sum',
    'subspace_intersect',
    'subspace_contains',
    'push_forward',
    'minimal_polynomial',
    'squarefree_part',
    'jordan_chevalley',
    'exp_nilpotent',
    'is_semisimple',
]
