"""
导子代数、Θ、B 与 Φ 律组装
"""

from .models import (
    DerivationSpace,
    GammaCentralizer,
    BAlgebra,
    CompletenessWitness,
    AssembledAlgebra,
    VERIFIED,
    UNVERIFIED_HYPOTHESIS,
)
from .derivation_space import derivation_space, centralizing_coordinates
from .theta import der_gamma_centralizer, b_algebra, normalizer_in_b, is_complete, codim_one_defect
from .assembly import (
    assemble_phi,
    assemble_degenerate,
    identify_with_algebra,
    identify_with_derivations,
    complete_hull,
    reconstruct_derivations,
)

__all__ = [
    'DerivationSpace',
    'GammaCentralizer',
    'BAlgebra',
    'CompletenessWitness',
    'AssembledAlgebra',
    'VERIFIED',
    'UNVERIFIED_HYPOTHESIS',
    'derivation_space',
    'centralizing_coordinates',
    'der_gamma_centralizer',
    'b_algebra',
    'normalizer_in_b',
    'is_complete',
    'codim_one_defect',
    'assemble_phi',
    'assemble_degenerate',
    'identify_with_algebra',
    'identify_with_derivations',
    'complete_hull',
    'reconstruct_derivations',
]
