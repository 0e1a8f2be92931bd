"""
导子代数 Der g

未知量为导子矩阵 D 的元素，按行主序编号：d_{a,b} 对应下标 a * n + b
"""

import logging
from itertools import combinations
from typing import Any, List, Sequence

from sympy import QQ

from errors import InvariantViolation
from exactla.matrix import Matrix, commutator, entries, flatten, from_columns, _raw
from exactla.subspace import Subspace, kernel, stack_solve
from liecore.algebra import LieAlgebra, is_derivation
from .models import DerivationSpace

logger = logging.getLogger(__name__)


def leibniz_system(g: LieAlgebra) -> List[List[Any]]:
    """
    D[x_i, x_j] = [D x_i, x_j] + [x_i, D x_j] 的系数行（i < j，逐分量）

    Returns:
        非零方程行列表，每行长度 n²
    """
    n = g.dim
    ad = [entries(m) for m in g.ad_basis]
    rows: List[List[Any]] = []
    for i, j in combinations(range(n), 2):
        bracket = g.basis_bracket(i, j)
        for c in range(n):
            row = [QQ.zero] * (n * n)
            for k, coeff in enumerate(bracket):
                if coeff:
                    row[c * n + k] += coeff
            for a in range(n):
                # [x_a, x_j]_c 与 [x_i, x_a]_c
                row[a * n + i] -= ad[a][c][j]
                row[a * n + j] -= ad[i][c][a]
            if any(row):
                rows.append(row)
    return rows


def derivation_space(g: LieAlgebra, verify: bool = True) -> DerivationSpace:
    """
    求解 Der g

    Args:
        g: Lie 代数
        verify: 是否验证 Leibniz 恒等式、Jacobi 恒等式与 ad g 为理想

    Returns:
        DerivationSpace（RREF 规范基）

    Raises:
        InvariantViolation: 验证失败
    """
    n = g.dim
    rows = leibniz_system(g)
    logger.debug(f"Der({g.name or g.dim}): {len(rows)} equations x {n * n} unknowns")
    space = kernel(_raw(rows, n * n)) if rows else Subspace.full(n * n)
    der = DerivationSpace(g, space)

    if verify:
        for idx, d in enumerate(der.basis):
            if not is_derivation(g, d):
                raise InvariantViolation("Leibniz identity", f"basis derivation D{idx + 1}")
        if not der.inner_is_ideal():
            raise InvariantViolation("ad g is an ideal of Der g")
    logger.debug(f"Der({g.name or g.dim}) has dimension {der.dim}, inner part {der.inner.dim}")
    return der


def centralizing_coordinates(basis: Sequence[Matrix], mats: Sequence[Matrix], size: int) -> Subspace:
    """
    {c : [Σ c_a basis_a, x] = 0，对所有 x ∈ mats}

    Returns:
        basis 坐标下的子空间
    """
    if not basis:
        return Subspace.zero(0)
    blocks = [from_columns([flatten(commutator(b, x)) for b in basis], size * size) for x in mats]
    return stack_solve(blocks, len(basis))
