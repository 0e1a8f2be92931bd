"""
导子代数相关的数据模型
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from errors import InvariantViolation, JacobiViolationError
from exactla.matrix import Matrix, commutator, flatten, from_columns, unflatten
from exactla.subspace import Subspace
from liecore.algebra import LieAlgebra, is_ideal, validate_lie
from structure.models import GammaTriple

VERIFIED = "verified"
UNVERIFIED_HYPOTHESIS = "unverified-hypothesis"


@dataclass(frozen=True)
class DerivationSpace:
    """
    Der g

    space 为展平（行主序）后导子矩阵张成的 RREF 子空间，basis 与其行一一对应
    """
    algebra: LieAlgebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def basis(self) -> Tuple[Matrix, ...]:
        n = self.algebra.dim
        return tuple(unflatten(r, n) for r in self.space.rows)

    def coordinates(self, d: Matrix) -> Tuple[Any, ...]:
        """
        Raises:
            ValueError: d 不是导子
        """
        return self.space.coordinates(flatten(d))

    def matrix(self, coords: Sequence[Any]) -> Matrix:
        return unflatten(self.space.vector(coords), self.algebra.dim)

    @cached_property
    def as_algebra(self) -> LieAlgebra:
        """
        Der g 在 basis 下的结构常数

        Raises:
            InvariantViolation: 换位子不封闭或不满足 Jacobi 恒等式
        """
        table = {}
        for a, b in combinations(range(self.dim), 2):
            try:
                table[(a, b)] = self.coordinates(commutator(self.basis[a], self.basis[b]))
            except ValueError:
                raise InvariantViolation("Der g closed under commutator", f"basis pair ({a + 1}, {b + 1})")
        names = [f"D{a + 1}" for a in range(self.dim)]
        label = f"Der({self.algebra.name})" if self.algebra.name else ""
        try:
            return validate_lie(self.dim, table, names, label)
        except JacobiViolationError as e:
            raise InvariantViolation("Der g satisfies Jacobi", str(e))

    @cached_property
    def _inner_columns(self) -> List[Tuple[Any, ...]]:
        columns = []
        for i, ad_x in enumerate(self.algebra.ad_basis):
            try:
                columns.append(self.coordinates(ad_x))
            except ValueError:
                raise InvariantViolation("inner derivations are derivations", f"ad {self.algebra.basis_names[i]}")
        return columns

    @property
    def ad_embedding(self) -> Matrix:
        """dim Der × dim g 矩阵，第 i 列为 ad x_i 的坐标"""
        return from_columns(self._inner_columns, self.dim)

    @property
    def inner(self) -> Subspace:
        """ad g 在 Der g 坐标下的子空间"""
        return Subspace.span(self._inner_columns, self.dim)

    @property
    def all_inner(self) -> bool:
        return self.inner.dim == self.dim

    def inner_is_ideal(self) -> bool:
        return is_ideal(self.as_algebra, self.inner)

    def summary(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "inner_dim": self.inner.dim,
            "outer_dim": self.dim - self.inner.dim,
            "all_inner": self.all_inner,
        }


@dataclass(frozen=True)
class GammaCentralizer:
    """
    (Der g)^Γ 与 Θ: δ ↦ δ|_m
    """
    space: Subspace
    """展平后的 n×n 矩阵空间中的子空间"""

    basis: Tuple[Matrix, ...]
    theta: Tuple[Matrix, ...]
    """与 basis 对应的限制矩阵（m 的 RREF 坐标）"""

    m_dim: int
    split_holds: bool
    """Der g = ad s ⊕ ad m ⊕ (Der g)^Γ"""

    hypothesis: str = VERIFIED

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def theta_image(self) -> Subspace:
        return Subspace.span([flatten(y) for y in self.theta], self.m_dim * self.m_dim)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "theta_rank": self.theta_image.dim,
            "split_holds": self.split_holds,
            "hypothesis": self.hypothesis,
        }


@dataclass(frozen=True)
class BAlgebra:
    """
    B = (Der n̂)^Γ|_m，以 m 的 RREF 坐标下的矩阵表示
    """
    m_dim: int
    space: Subspace
    """展平后的 m_dim × m_dim 矩阵空间中的子空间"""

    source: str = "(Der n̂)^Γ|_m"
    hypothesis: str = VERIFIED

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def basis(self) -> Tuple[Matrix, ...]:
        return tuple(unflatten(r, self.m_dim) for r in self.space.rows)

    def contains(self, x: Matrix) -> bool:
        return self.space.contains_vector(flatten(x))

    def to_dict(self) -> Dict[str, Any]:
        return {"m_dim": self.m_dim, "dim": self.dim, "source": self.source, "hypothesis": self.hypothesis}


@dataclass(frozen=True)
class CompletenessWitness:
    """is_complete 的结果及失败原因"""

    complete: bool
    dim: int
    center_dim: int
    der_dim: int
    reason: str
    normalizer_criterion: Optional[bool] = None
    """给出三元组时 N_B(μ(k)) = μ(k) 的结果"""

    def __bool__(self) -> bool:
        return self.complete

    def to_dict(self) -> Dict[str, Any]:
        return {
            "complete": self.complete,
            "dim": self.dim,
            "center_dim": self.center_dim,
            "der_dim": self.der_dim,
            "reason": self.reason,
            "normalizer_criterion": self.normalizer_criterion,
        }


@dataclass(frozen=True)
class AssembledAlgebra:
    """
    s ⊕ nsub ⊕ m 上按 Φ 律组装的代数

    基的顺序：s 的 RREF 基，nsub 的 RREF 基（展平矩阵），m 的 RREF 基
    """
    algebra: LieAlgebra
    triple: GammaTriple
    nsub: Subspace
    degenerate: bool = False
    """m = 0 且 k ≠ 0：B 平凡，结果取 s ⊕ k"""

    hypothesis: str = VERIFIED
    k_dim: int = 0
    """退化结果中 k 块的维数，基排在 s 之后"""

    @property
    def blocks(self) -> Tuple[int, int, int]:
        return (self.triple.s.dim, self.nsub.dim, self.triple.m.dim)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def to_dict(self) -> Dict[str, Any]:
        ds, dn, dm = self.blocks
        return {
            "dim": self.dim,
            "blocks": {"s": ds, "k": self.k_dim, "nsub": dn, "m": dm},
            "degenerate": self.degenerate,
            "hypothesis": self.hypothesis,
        }
