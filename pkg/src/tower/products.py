"""
直积的导子分解
"""

import logging
from typing import Any, List

from sympy import QQ

from errors import InvariantViolation
from exactla.matrix import entries, _raw
from exactla.subspace import kernel
from derivations.derivation_space import derivation_space
from liecore.algebra import LieAlgebra
from liecore.constructions import direct_product
from liecore.ideals import center, derived_algebra
from .models import ProductDerLedger

logger = logging.getLogger(__name__)


def cross_maps_dim(source: LieAlgebra, target: LieAlgebra) -> int:
    """
    线性映射 M: source → Z(target) 且 M([source, source]) = 0 的空间维数

    未知量为 M 的元素 M[r, c]，按行主序编号 r * n1 + c
    """
    n1, n2 = source.dim, target.dim
    if n1 == 0 or n2 == 0:
        return 0
    rows: List[List[Any]] = []
    for v in derived_algebra(source).rows:
        for r in range(n2):
            row = [QQ.zero] * (n1 * n2)
            for c, x in enumerate(v):
                row[r * n1 + c] = x
            rows.append(row)
    for a in entries(center(target).annihilator()):
        for c in range(n1):
            row = [QQ.zero] * (n1 * n2)
            for r, x in enumerate(a):
                row[r * n1 + c] = x
            rows.append(row)
    if not rows:
        return n1 * n2
    return kernel(_raw(rows, n1 * n2)).dim


def product_der_split(g1: LieAlgebra, g2: LieAlgebra) -> ProductDerLedger:
    """
    dim Der(g1 × g2) = dim Der g1 + dim Der g2 + dim I12 + dim I21

    Raises:
        InvariantViolation: 四项之和与直接求解不符
    """
    der1 = derivation_space(g1).dim
    der2 = derivation_space(g2).dim
    i12 = cross_maps_dim(g1, g2)
    i21 = cross_maps_dim(g2, g1)
    dense = derivation_space(direct_product(g1, g2)).dim
    ledger = ProductDerLedger(der1=der1, der2=der2, i12=i12, i21=i21, total=der1 + der2 + i12 + i21, dense=dense)
    if ledger.total != dense:
        raise InvariantViolation("Der(g1 × g2) splits into four summands", f"{ledger.as_tuple()} vs {dense}")
    logger.debug(f"product derivation ledger {ledger.as_tuple()}, total {ledger.total}")
    return ledger
