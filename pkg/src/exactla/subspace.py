"""
子空间与线性方程组

子空间以简化行阶梯形 (RREF) 基存储，两子空间相等当且仅当 RREF 基逐元素相同
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from sympy import QQ

from errors import DimensionMismatchError
from .matrix import (
    Matrix,
    Vector,
    apply,
    combine,
    from_columns,
    entries,
    matrix,
    rref,
    transpose,
    unit_vector,
    vector_is_zero,
    _raw,
)


@dataclass(frozen=True)
class Subspace:
    """固定环境空间 K^n 中的子空间（RREF 基，无零行）"""

    ambient_dim: int
    rows: Tuple[Tuple[Any, ...], ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, vectors: Sequence[Sequence[Any]], ambient_dim: int) -> "Subspace":
        """
        由任意向量组张成子空间

        Args:
            vectors: 向量列表
            ambient_dim: 环境维数

        Returns:
            规范化后的子空间
        """
        vectors = [tuple(QQ.convert(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        vectors = [v for v in vectors if not vector_is_zero(v)]
        if not vectors or ambient_dim == 0:
            return cls.zero(ambient_dim)
        reduced, pivots, rank = rref(_raw([list(v) for v in vectors], ambient_dim))
        rows = entries(reduced)[:rank]
        return cls(ambient_dim, tuple(tuple(r) for r in rows), tuple(pivots))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)), tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> List[Vector]:
        return list(self.rows)

    @property
    def is_zero(self) -> bool:
        return not self.rows

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def as_matrix(self) -> Matrix:
        """行为基向量的 dim × n 矩阵"""
        return _raw([list(r) for r in self.rows], self.ambient_dim)

    def reduce(self, v: Sequence[Any]) -> Vector:
        """消去主元坐标后的余项；v 属于子空间当且仅当余项为零"""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        rest = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = rest[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        rest[j] -= c * x
        return tuple(rest)

    def contains_vector(self, v: Sequence[Any]) -> bool:
        return vector_is_zero(self.reduce(v))

    def coordinates(self, v: Sequence[Any]) -> Vector:
        """
        向量在 RREF 基下的坐标

        Raises:
            ValueError: 向量不在子空间中
        """
        if not self.contains_vector(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def vector(self, coords: Sequence[Any]) -> Vector:
        """由坐标还原向量"""
        return combine(coords, self.rows, self.ambient_dim)

    def complement_columns(self) -> List[int]:
        """非主元列，对应标准基向量张成一个补空间"""
        pivots = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in pivots]

    def annihilator(self) -> Matrix:
        """
        零化矩阵 A：v 属于子空间当且仅当 A v = 0

        Returns:
            (n - dim) × n 矩阵
        """
        if self.dim == 0:
            return _raw([list(unit_vector(self.ambient_dim, i)) for i in range(self.ambient_dim)], self.ambient_dim)
        return kernel(self.as_matrix()).as_matrix()

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={list(self.pivots)})"


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatchError(f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")


def kernel_from_rref(reduced_rows: List[List[Any]], pivots: Sequence[int], ncols: int) -> Subspace:
    free = [c for c in range(ncols) if c not in set(pivots)]
    vectors = []
    for f in free:
        v = [QQ.zero] * ncols
        v[f] = QQ.one
        for i, p in enumerate(pivots):
            v[p] = -reduced_rows[i][f]
        vectors.append(v)
    return Subspace.span(vectors, ncols)


def kernel(m: Matrix) -> Subspace:
    """零空间"""
    nrows, ncols = m.shape
    if nrows == 0:
        return Subspace.full(ncols)
    reduced, pivots, _ = rref(m)
    return kernel_from_rref(entries(reduced), pivots, ncols)


def image(m: Matrix) -> Subspace:
    """列空间"""
    nrows, ncols = m.shape
    if ncols == 0:
        return Subspace.zero(nrows)
    return Subspace.span(entries(transpose(m)), nrows)


def kernel_image(m: Matrix) -> Tuple[Subspace, Subspace]:
    """
    核与像

    Args:
        m: 任意形状矩阵

    Returns:
        (核, 像)，dim 核 + dim 像 = 列数
    """
    return kernel(m), image(m)


def solve(a: Matrix, b: Sequence[Any]) -> Tuple[Optional[Vector], Subspace]:
    """
    求解 a·x = b

    Args:
        a: 系数矩阵
        b: 右端列向量

    Returns:
        (特解或 None, 齐次方程的解空间)
    """
    nrows, ncols = a.shape
    if len(b) != nrows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {nrows} equations")
    if nrows == 0:
        return tuple([QQ.zero] * ncols), Subspace.full(ncols)
    rows = [list(r) + [b[i]] for i, r in enumerate(entries(a))] if ncols else [[b[i]] for i in range(nrows)]
    reduced, pivots, _ = rref(_raw(rows, ncols + 1))
    reduced_rows = entries(reduced)
    a_pivots = [p for p in pivots if p < ncols]
    null = kernel_from_rref(reduced_rows, a_pivots, ncols)
    if ncols in pivots:
        return None, null
    x = [QQ.zero] * ncols
    for i, p in enumerate(a_pivots):
        x[p] = reduced_rows[i][ncols]
    return tuple(x), null


def stack_solve(blocks: Sequence[Matrix], ncols: int) -> Subspace:
    """多个约束矩阵纵向拼接后的零空间"""
    rows: List[List[Any]] = []
    for block in blocks:
        if block.shape[1] != ncols:
            raise DimensionMismatchError(f"constraint block with {block.shape[1]} columns, expected {ncols}")
        rows.extend(entries(block))
    if not rows:
        return Subspace.full(ncols)
    return kernel(_raw(rows, ncols))


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.span(list(u.rows) + list(v.rows), u.ambient_dim)


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus 交：[u | u] 与 [v | 0] 拼接后取左半为零的行"""
    _check_ambient(u, v)
    n = u.ambient_dim
    if u.is_zero or v.is_zero:
        return Subspace.zero(n)
    rows = [list(r) + list(r) for r in u.rows] + [list(r) + [QQ.zero] * n for r in v.rows]
    reduced, _, rank = rref(_raw(rows, 2 * n))
    tails = [row[n:] for row in entries(reduced)[:rank] if vector_is_zero(row[:n])]
    return Subspace.span(tails, n)


def subspace_contains(u: Subspace, v: Subspace) -> bool:
    """v ⊆ u"""
    _check_ambient(u, v)
    return all(u.contains_vector(r) for r in v.rows)


def push_forward(m: Matrix, w: Subspace) -> Subspace:
    """线性映射下子空间的像"""
    if m.shape[1] != w.ambient_dim:
        raise DimensionMismatchError(f"map with {m.shape[1]} columns applied to ambient dimension {w.ambient_dim}")
    return Subspace.span([apply(m, r) for r in w.rows], m.shape[0])


def is_direct_sum(parts: Sequence[Subspace], whole: Subspace) -> bool:
    """parts 之和为 whole 且维数相加相等"""
    total = Subspace.zero(whole.ambient_dim)
    for part in parts:
        _check_ambient(part, whole)
        total = subspace_sum(total, part)
    return total == whole and sum(p.dim for p in parts) == whole.dim


def restrict(m: Matrix, w: Subspace) -> Matrix:
    """
    m|_w 在 w 的 RREF 坐标下的矩阵

    Raises:
        ValueError: w 不是 m 的不变子空间
    """
    return from_columns([w.coordinates(apply(m, v)) for v in w.rows], w.dim)
