"""
Γ-分解的数据模型
"""

from dataclasses import dataclass, field, fields
from typing import Any, Dict, List, Tuple

from exactla.matrix import Matrix
from exactla.subspace import Subspace


@dataclass(frozen=True)
class GammaTriple:
    """
    Γ-三元组 (s, k, m)

    g = s ⊕ k ⊕ m，k = g^Γ，m = Γ·r
    """
    s: Subspace
    """Levi 子代数"""

    k: Subspace
    """Γ 的公共核，幂零子代数且 [s, k] = 0"""

    m: Subspace
    """Γ·r，r = m ⊕ k"""

    gamma: Tuple[Matrix, ...]
    """Γ 的一组基（导子矩阵，展平后为 RREF 行）"""

    h: Subspace
    """构造 Γ 时使用的幂零补"""

    @property
    def ambient_dim(self) -> int:
        return self.s.ambient_dim

    @property
    def dims(self) -> Tuple[int, int, int]:
        return (self.s.dim, self.k.dim, self.m.dim)

    def __repr__(self) -> str:
        return (
            f"GammaTriple("
            f"s={self.s.dim}, k={self.k.dim}, m={self.m.dim}, "
            f"gamma={len(self.gamma)}"
            f")"
        )


@dataclass(frozen=True)
class TripleCheck:
    """三元组公理逐条验证结果"""

    levi: bool
    """s 为子代数，s ∩ r = 0，dim s + dim r = dim g"""

    k_nilpotent_subalgebra: bool
    s_k_commute: bool
    m_in_radical: bool
    radical_split: bool
    """r = m ⊕ k"""

    sk_acts_onto_m: bool
    """[s ⊕ k, m] = m"""

    direct_sum: bool
    gamma_derivations: bool
    gamma_kills_k: bool
    gamma_preserves_s: bool

    @property
    def ok(self) -> bool:
        return all(getattr(self, f.name) for f in fields(self))

    @property
    def failures(self) -> List[str]:
        return [f.name for f in fields(self) if not getattr(self, f.name)]

    def to_dict(self) -> Dict[str, bool]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class MuRepresentation:
    """
    μ: k → gl(m)，x ↦ ad x|_m

    矩阵以 m 的 RREF 坐标表示，按 k 的基排列
    """
    mu: Tuple[Matrix, ...]
    nhat: Subspace
    """n̂ = m + [m, m]"""

    ker_mu: Subspace
    injective: bool
    center_identity: bool
    """Z(g) = Z(k) ∩ ker μ"""

    lower_central_identity: bool
    """C^p(g) = s + C^p(k) + n̂ 对所有 p 成立"""

    image: Subspace = field(repr=False)
    """μ(k) 作为 gl(m) 中展平矩阵的子空间"""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nhat_dim": self.nhat.dim,
            "ker_mu_dim": self.ker_mu.dim,
            "injective": self.injective,
            "center_identity": self.center_identity,
            "lower_central_identity": self.lower_central_identity,
        }
