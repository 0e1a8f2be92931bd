"""
Lie 代数核心：结构常数、理想与构造
"""

from .algebra import (
    LieAlgebra,
    LinearMap,
    validate_lie,
    ad,
    bracket_space,
    is_subalgebra,
    is_ideal,
    subalgebra,
    is_derivation,
    is_automorphism,
)
from .ideals import (
    center,
    centralizer,
    normalizer,
    series,
    c_infty,
    derived_algebra,
    killing_radical,
    radical,
    nilradical,
    classify_flags,
    ideal_generated,
    is_nilpotent_subalgebra,
    is_characteristic_ideal,
)
from .constructions import quotient, direct_product, inner_automorphism, product_subspace

__all__ = [
    'LieAlgebra',
    'LinearMap',
    'validate_lie',
    'ad',
    'bracket_space',
    'is_subalgebra',
    'is_ideal',
    'subalgebra',
    'is_derivation',
    'is_automorphism',
    'center',
    'centralizer',
    'normalizer',
    'series',
    'c_infty',
    'derived_algebra',
    'killing_radical',
    'radical',
    'nilradical',
    'classify_flags',
    'ideal_generated',
    'is_nilpotent_subalgebra',
    'is_characteristic_ideal',
    'quotient',
    'direct_product',
    'product_subspace',
    'inner_automorphism',
]
