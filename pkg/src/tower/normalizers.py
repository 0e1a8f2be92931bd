"""
B 中的正规化子塔
"""

import logging

from errors import InputError, InvariantViolation
from exactla.matrix import commutator, flatten, unflatten
from exactla.subspace import Subspace, subspace_contains
from derivations.models import BAlgebra
from derivations.theta import normalizer_in_b
from .models import NormalizerChain

logger = logging.getLogger(__name__)


def _is_closed(w: Subspace, size: int) -> bool:
    mats = [unflatten(r, size) for r in w.rows]
    return all(w.contains_vector(flatten(commutator(x, y))) for i, x in enumerate(mats) for y in mats[i + 1:])


def normalizer_tower(b: BAlgebra, start: Subspace) -> NormalizerChain:
    """
    迭代 W ↦ N_B(W) 直到稳定

    Args:
        b: B
        start: B 中对换位子封闭的子空间（展平矩阵）

    Returns:
        NormalizerChain，members[0] = start

    Raises:
        InputError: start 不在 B 中或不封闭
    """
    if not subspace_contains(b.space, start):
        raise InputError("normalizer tower start must lie in B")
    if not _is_closed(start, b.m_dim):
        raise InputError("normalizer tower start must be closed under the commutator")

    members = [start]
    while True:
        nxt = normalizer_in_b(b, members[-1])
        if nxt == members[-1]:
            break
        if not subspace_contains(nxt, members[-1]) or len(members) > b.dim + 1:
            raise InvariantViolation("normalizer chain increasing", f"step {len(members)}")
        members.append(nxt)
        logger.debug(f"normalizer tower step {len(members) - 1}: dim {nxt.dim}")

    chain = NormalizerChain(members=tuple(members), stable_index=len(members) - 1)
    logger.info(f"normalizer tower stable after {chain.stable_index} steps: dims {chain.dims}")
    return chain
