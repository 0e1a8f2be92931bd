"""
导子塔的数据模型
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from derivations.models import AssembledAlgebra
from exactla.subspace import Subspace
from liecore.algebra import LieAlgebra


class TowerCase(Enum):
    """导子塔分类"""
    COMPLETE = "case1_complete"
    K_TIMES_PERFECT = "case2_K_times_perfect"
    DIVERGENT_SUSPECTED = "case3_divergent_suspected"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class NormalizerChain:
    """
    N_B^0 = start，N_B^{p+1} = N_B(N_B^p)

    members 严格递增直到 stable_index，最后一项等于自身的正规化子
    """
    members: Tuple[Subspace, ...]
    stable_index: int

    @property
    def limit(self) -> Subspace:
        return self.members[-1]

    @property
    def dims(self) -> List[int]:
        return [w.dim for w in self.members]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dims": self.dims,
            "stable_index": self.stable_index,
        }


@dataclass(frozen=True)
class GhatResult:
    """ĝ = s ⊕ N̂_B(μ(k)) ⊕ m"""

    assembled: AssembledAlgebra
    chain: NormalizerChain
    predicted: Tuple[int, ...]
    """dim s + dim N_B^p(μ(k)) + dim m"""

    @property
    def algebra(self) -> LieAlgebra:
        return self.assembled.algebra

    @property
    def dim(self) -> int:
        return self.assembled.dim


@dataclass(frozen=True)
class TowerStep:
    """g_n 的统计量"""

    index: int
    dim: int
    center_dim: int
    radical_dim: int
    nilradical_dim: int
    derived_codim: int
    der_dim: int
    complete: bool

    @property
    def non_nilpotent_radical(self) -> bool:
        return self.radical_dim != self.nilradical_dim

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "dim": self.dim,
            "center_dim": self.center_dim,
            "radical_dim": self.radical_dim,
            "nilradical_dim": self.nilradical_dim,
            "derived_codim": self.derived_codim,
            "der_dim": self.der_dim,
            "complete": self.complete,
            "non_nilpotent_radical": self.non_nilpotent_radical,
        }


@dataclass(frozen=True)
class FastPathCheck:
    """正规化子塔给出的维数与直接迭代的比较"""

    ghat_dim: int
    q: int
    predicted: Tuple[int, ...]
    """dim s + dim N_B^p(μ(k)) + dim m，p = 0..q"""

    agrees: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"ghat_dim": self.ghat_dim, "q": self.q, "predicted": list(self.predicted), "agrees": self.agrees}


@dataclass(frozen=True)
class SchenkmanBound:
    """dim ĝ ≤ dim Der(C^∞(g)) + dim Z(C^∞(g))"""

    bound: int
    ghat_dim: int
    hull_dim: int
    holds: bool

    def to_dict(self) -> Dict[str, Any]:
        return {"bound": self.bound, "ghat_dim": self.ghat_dim, "hull_dim": self.hull_dim, "holds": self.holds}


@dataclass(frozen=True)
class TowerReport:
    """导子塔 g_0 = g，g_{n+1} = Der(g_n) 的逐步记录与分类"""

    steps: Tuple[TowerStep, ...]
    case: TowerCase
    terminal: Optional[LieAlgebra] = field(default=None, repr=False)
    fast_path: Optional[FastPathCheck] = None
    bound: Optional[SchenkmanBound] = None
    violations: Tuple[str, ...] = ()

    @property
    def dimensions(self) -> List[int]:
        """[dim g_0, dim g_1, ...]，末项为最后一步的 dim Der"""
        return [s.dim for s in self.steps] + [self.steps[-1].der_dim]

    @property
    def q(self) -> Optional[int]:
        return self.fast_path.q if self.fast_path else None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dimensions": self.dimensions,
            "case": self.case.value,
            "steps": [s.to_dict() for s in self.steps],
            "terminal_dim": self.terminal.dim if self.terminal is not None else None,
            "q": self.q,
            "fast_path": self.fast_path.to_dict() if self.fast_path else None,
            "bound": self.bound.to_dict() if self.bound else None,
            "violations": list(self.violations),
        }


@dataclass(frozen=True)
class ProductDerLedger:
    """Der(g1 × g2) = Der g1 ⊕ Der g2 ⊕ I12 ⊕ I21 的维数"""

    der1: int
    der2: int
    i12: int
    """g1 → Z(g2)，在 [g1, g1] 上为零"""

    i21: int
    total: int
    dense: int
    """直接求解 Der(g1 × g2) 的维数"""

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.der1, self.der2, self.i12, self.i21)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "der1": self.der1,
            "der2": self.der2,
            "i12": self.i12,
            "i21": self.i21,
            "total": self.total,
            "dense": self.dense,
        }
