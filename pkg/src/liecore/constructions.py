"""
商代数、直积与内自同构
"""

import logging
from itertools import combinations
from typing import Any, Sequence, Tuple

from sympy import QQ

from errors import DimensionMismatchError, NotAnIdealError
from exactla.matrix import Matrix, from_columns, vector_is_zero
from exactla.polynomial import exp_nilpotent
from exactla.subspace import Subspace
from .algebra import LieAlgebra, LinearMap, is_ideal, validate_lie

logger = logging.getLogger(__name__)


def quotient(g: LieAlgebra, ideal: Subspace, name: str = "") -> Tuple[LieAlgebra, Matrix]:
    """
    商代数 g / ideal

    商空间的基取 ideal 的 RREF 基的非主元列对应的标准基向量

    Args:
        g: Lie 代数
        ideal: 理想

    Returns:
        (商代数, 投影矩阵)，投影矩阵形状为 dim(g/ideal) × dim g

    Raises:
        NotAnIdealError: 子空间不是理想
    """
    if not is_ideal(g, ideal):
        raise NotAnIdealError("quotient needs an ideal")
    cols = ideal.complement_columns()

    def project(v: Sequence[Any]):
        rest = ideal.reduce(v)
        return tuple(rest[c] for c in cols)

    table = {}
    for a, b in combinations(range(len(cols)), 2):
        v = project(g.basis_bracket(cols[a], cols[b]))
        if not vector_is_zero(v):
            table[(a, b)] = v
    names = [g.basis_names[c] for c in cols]
    q = validate_lie(len(cols), table, names, name or (f"{g.name}/ideal" if g.name else ""))
    projection = from_columns([project(g.basis_vector(j)) for j in range(g.dim)], len(cols))
    return q, projection


def direct_product(g1: LieAlgebra, g2: LieAlgebra, name: str = "") -> LieAlgebra:
    """
    直积 g1 × g2，g1 的基在前

    基名冲突时分别加后缀 _1 / _2
    """
    names1, names2 = list(g1.basis_names), list(g2.basis_names)
    if set(names1) & set(names2):
        names1 = [f"{n}_1" for n in names1]
        names2 = [f"{n}_2" for n in names2]
    n = g1.dim + g2.dim
    table = {}
    for i, j, v in g1.structure:
        table[(i, j)] = tuple(v) + tuple([QQ.zero] * g2.dim)
    for i, j, v in g2.structure:
        table[(g1.dim + i, g1.dim + j)] = tuple([QQ.zero] * g1.dim) + tuple(v)
    label = name or (f"{g1.name}*{g2.name}" if g1.name and g2.name else "")
    return validate_lie(n, table, names1 + names2, label)


def inner_automorphism(g: LieAlgebra, x: Sequence[Any]) -> LinearMap:
    """
    exp(ad x)

    Raises:
        NotNilpotentError: ad x 不是幂零的
    """
    return LinearMap(g, exp_nilpotent(g.ad_matrix(x)))


def product_subspace(g1: LieAlgebra, g2: LieAlgebra, u1: Subspace, u2: Subspace) -> Subspace:
    """
    u1 × u2 ⊆ g1 × g2，坐标与 direct_product 的基顺序一致

    Raises:
        DimensionMismatchError: 子空间与因子的维数不符
    """
    if u1.ambient_dim != g1.dim or u2.ambient_dim != g2.dim:
        raise DimensionMismatchError(
            f"subspaces live in K^{u1.ambient_dim} and K^{u2.ambient_dim}, factors have dims {g1.dim}, {g2.dim}"
        )
    pad1 = (QQ.zero,) * g2.dim
    pad2 = (QQ.zero,) * g1.dim
    vectors = [tuple(v) + pad1 for v in u1.rows] + [pad2 + tuple(v) for v in u2.rows]
    return Subspace.span(vectors, g1.dim + g2.dim)
