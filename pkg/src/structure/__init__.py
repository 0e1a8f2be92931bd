"""
Levi 分解、m.c.r. 子代数 Γ 与 Γ-三元组
"""

from .models import GammaTriple, TripleCheck, MuRepresentation
from .levi import levi_subalgebra, nilpotent_supplement, radical_derived_series
from .gamma import (
    mcr_gamma,
    gamma_split,
    gamma_triple,
    check_triple,
    verify_triple,
    push_triple,
    quotient_triple,
    triple_projection,
    split_vector,
    mu_rep,
    reductive_part,
    gamma_ideal,
    joint_kernel,
    joint_image,
)

__all__ = [
    'GammaTriple',
    'TripleCheck',
    'MuRepresentation',
    'levi_subalgebra',
    'nilpotent_supplement',
    'radical_derived_series',
    'mcr_gamma',
    'gamma_split',
    'gamma_triple',
    'check_triple',
    'verify_triple',
    'push_triple',
    'quotient_triple',
    'triple_projection',
    'split_vector',
    'mu_rep',
    'reductive_part',
    'gamma_ideal',
    'joint_kernel',
    'joint_image',
]
