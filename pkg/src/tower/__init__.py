"""
正规化子塔、导子塔迭代与分类
"""

from .models import (
    TowerCase,
    NormalizerChain,
    GhatResult,
    TowerStep,
    FastPathCheck,
    SchenkmanBound,
    TowerReport,
    ProductDerLedger,
)
from .normalizers import normalizer_tower
from .iteration import ghat_trivial_center, tower_iterate, schenkman_bound, is_k_times_perfect, direct_dimensions
from .products import product_der_split, cross_maps_dim

__all__ = [
    'TowerCase',
    'NormalizerChain',
    'GhatResult',
    'TowerStep',
    'FastPathCheck',
    'SchenkmanBound',
    'TowerReport',
    'ProductDerLedger',
    'normalizer_tower',
    'ghat_trivial_center',
    'tower_iterate',
    'schenkman_bound',
    'is_k_times_perfect',
    'direct_dimensions',
    'product_der_split',
    'cross_maps_dim',
]
