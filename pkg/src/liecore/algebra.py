"""
结构常数表示的 Lie 代数

[x_i, x_j] = Σ_k c_ij^k x_k，只存 i < j 的非零项，反对称性由存储方式保证
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from sympy import QQ

from errors import DimensionMismatchError, InputError, JacobiViolationError
from exactla.matrix import (
    Matrix,
    Vector,
    apply,
    from_columns,
    linear_combination,
    qq,
    rref,
    unit_vector,
    vector_is_zero,
    vec_add,
    vec_sub,
)
from exactla.subspace import Subspace

logger = logging.getLogger(__name__)

StructureEntry = Tuple[int, int, Vector]


@dataclass(frozen=True)
class LieAlgebra:
    """
    有限维 Lie 代数

    structure 为按 (i, j) 排序的 (i, j, [x_i, x_j]) 三元组，i < j 且向量非零
    """
    dim: int
    basis_names: Tuple[str, ...]
    structure: Tuple[StructureEntry, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.basis_names) != self.dim:
            raise DimensionMismatchError(f"{len(self.basis_names)} basis names for dimension {self.dim}")

    @cached_property
    def brackets(self) -> Dict[Tuple[int, int], Vector]:
        return {(i, j): v for i, j, v in self.structure}

    @cached_property
    def ad_basis(self) -> List[Matrix]:
        """ad x_i 的矩阵列表，第 j 列为 [x_i, x_j]"""
        return [from_columns([self.basis_bracket(i, j) for j in range(self.dim)], self.dim) for i in range(self.dim)]

    @property
    def is_abelian(self) -> bool:
        return not self.structure

    def zero_vector(self) -> Vector:
        return tuple([QQ.zero] * self.dim)

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def basis_bracket(self, i: int, j: int) -> Vector:
        """[x_i, x_j]"""
        if i == j:
            return self.zero_vector()
        if i < j:
            return self.brackets.get((i, j), self.zero_vector())
        v = self.brackets.get((j, i))
        return tuple(-a for a in v) if v is not None else self.zero_vector()

    def bracket(self, x: Sequence[Any], y: Sequence[Any]) -> Vector:
        """任意两向量的括号"""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError(f"bracket of vectors of lengths {len(x)}, {len(y)} in dimension {self.dim}")
        acc = [QQ.zero] * self.dim
        for i, j, v in self.structure:
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for k, a in enumerate(v):
                    if a:
                        acc[k] += c * a
        return tuple(acc)

    def ad_matrix(self, x: Sequence[Any]) -> Matrix:
        if len(x) != self.dim:
            raise DimensionMismatchError(f"vector of length {len(x)} in dimension {self.dim}")
        return linear_combination(x, self.ad_basis, (self.dim, self.dim))

    def full(self) -> Subspace:
        return Subspace.full(self.dim)

    def zero(self) -> Subspace:
        return Subspace.zero(self.dim)

    def has_same_brackets(self, other: "LieAlgebra") -> bool:
        return self.dim == other.dim and self.structure == other.structure

    def __repr__(self) -> str:
        label = self.name or "LieAlgebra"
        return f"{label}(dim={self.dim}, brackets={len(self.structure)})"


@dataclass(frozen=True)
class LinearMap:
    """代数上的线性映射（导子、内导子、Γ 的元素）"""
    algebra: LieAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.algebra.dim, self.algebra.dim):
            raise DimensionMismatchError(
                f"map of shape {self.matrix.shape} on an algebra of dimension {self.algebra.dim}"
            )

    def __call__(self, v: Sequence[Any]) -> Vector:
        return apply(self.matrix, v)


def _normalize_brackets(dim: int, brackets: Mapping[Tuple[int, int], Any]) -> Tuple[StructureEntry, ...]:
    table: Dict[Tuple[int, int], List[Any]] = {}
    for (i, j), coeffs in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionMismatchError(f"bracket index ({i + 1}, {j + 1}) outside 1..{dim}")
        if isinstance(coeffs, Mapping):
            v = [QQ.zero] * dim
            for k, c in coeffs.items():
                if not 0 <= k < dim:
                    raise DimensionMismatchError(f"coefficient index {k + 1} outside 1..{dim}")
                v[k] = qq(c)
        else:
            if len(coeffs) != dim:
                raise DimensionMismatchError(f"bracket vector of length {len(coeffs)} in dimension {dim}")
            v = [qq(c) for c in coeffs]
        if i == j:
            if not vector_is_zero(v):
                raise InputError(f"[x{i + 1}, x{i + 1}] must vanish")
            continue
        key, sign = ((i, j), 1) if i < j else ((j, i), -1)
        v = [sign * a for a in v]
        if key in table:
            if table[key] != v:
                raise InputError(f"conflicting values for bracket ({key[0] + 1}, {key[1] + 1})")
            continue
        table[key] = v
    return tuple((i, j, tuple(v)) for (i, j), v in sorted(table.items()) if not vector_is_zero(v))


def jacobi_violation(g: LieAlgebra) -> Optional[Tuple[int, int, int]]:
    """第一个 Jacobi 恒等式失败的基三元组，全部成立时返回 None"""
    if not g.structure:
        return None
    for i, j, k in combinations(range(g.dim), 3):
        a = g.bracket(g.basis_vector(i), g.basis_bracket(j, k))
        b = g.bracket(g.basis_vector(j), g.basis_bracket(k, i))
        c = g.bracket(g.basis_vector(k), g.basis_bracket(i, j))
        if not vector_is_zero(vec_add(vec_add(a, b), c)):
            return (i, j, k)
    return None


def validate_lie(
    dim: int,
    brackets: Mapping[Tuple[int, int], Any],
    basis_names: Optional[Sequence[str]] = None,
    name: str = "",
) -> LieAlgebra:
    """
    由原始结构常数构造并验证 Lie 代数

    Args:
        dim: 维数
        brackets: {(i, j): 向量或 {k: 系数}}，下标从 0 开始
        basis_names: 基向量名称，默认 x1..xn
        name: 代数名称

    Returns:
        验证通过的 LieAlgebra

    Raises:
        JacobiViolationError: 某个基三元组不满足 Jacobi 恒等式
        DimensionMismatchError: 下标或向量长度与维数不符
    """
    if dim < 0:
        raise DimensionMismatchError(f"negative dimension {dim}")
    names = tuple(basis_names) if basis_names is not None else tuple(f"x{i + 1}" for i in range(dim))
    g = LieAlgebra(dim, names, _normalize_brackets(dim, brackets), name)
    violation = jacobi_violation(g)
    if violation is not None:
        raise JacobiViolationError(violation, names)
    logger.debug(f"validated {g!r}")
    return g


def ad(g: LieAlgebra, x: Sequence[Any]) -> LinearMap:
    """y ↦ [x, y]"""
    return LinearMap(g, g.ad_matrix(x))


def bracket_space(g: LieAlgebra, u: Subspace, v: Subspace) -> Subspace:
    """[u, v] 的张成"""
    return Subspace.span([g.bracket(a, b) for a in u.rows for b in v.rows], g.dim)


def is_subalgebra(g: LieAlgebra, w: Subspace) -> bool:
    return all(w.contains_vector(g.bracket(a, b)) for a, b in combinations(w.rows, 2))


def is_ideal(g: LieAlgebra, w: Subspace) -> bool:
    return all(w.contains_vector(apply(m, b)) for m in g.ad_basis for b in w.rows)


def subalgebra(g: LieAlgebra, w: Subspace, name: str = "") -> Tuple[LieAlgebra, Matrix]:
    """
    子代数在其 RREF 基下的结构常数

    Args:
        g: 外围代数
        w: 子代数（必须对括号封闭）

    Returns:
        (子代数, 嵌入矩阵)，嵌入矩阵的第 a 列为第 a 个基向量
    """
    if not is_subalgebra(g, w):
        raise InputError("subspace is not closed under the bracket")
    names = [g.basis_names[p] for p in w.pivots]
    table = {}
    for a, b in combinations(range(w.dim), 2):
        v = g.bracket(w.rows[a], w.rows[b])
        if not vector_is_zero(v):
            table[(a, b)] = w.coordinates(v)
    sub = LieAlgebra(w.dim, tuple(names), _normalize_brackets(w.dim, table), name)
    return sub, from_columns(list(w.rows), g.dim)


def is_derivation(g: LieAlgebra, d: Matrix) -> bool:
    """D[x_i, x_j] = [D x_i, x_j] + [x_i, D x_j]"""
    images = [apply(d, g.basis_vector(i)) for i in range(g.dim)]
    for i, j in combinations(range(g.dim), 2):
        lhs = apply(d, g.basis_bracket(i, j))
        rhs = vec_add(g.bracket(images[i], g.basis_vector(j)), g.bracket(g.basis_vector(i), images[j]))
        if not vector_is_zero(vec_sub(lhs, rhs)):
            return False
    return True


def is_automorphism(g: LieAlgebra, phi: Matrix) -> bool:
    """可逆且保持全部括号"""
    if phi.shape != (g.dim, g.dim):
        raise DimensionMismatchError(f"map of shape {phi.shape} on an algebra of dimension {g.dim}")
    if rref(phi)[2] != g.dim:
        return False
    images = [apply(phi, g.basis_vector(i)) for i in range(g.dim)]
    return all(
        apply(phi, g.basis_bracket(i, j)) == g.bracket(images[i], images[j])
        for i, j in combinations(range(g.dim), 2)
    )

