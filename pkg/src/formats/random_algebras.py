"""
随机可解扩张 t ⋉ V

t 是交换代数，作用在交换理想 V = K^n 上：[t_a, v_j] = Σ_i A_a[i, j] v_i。
作用矩阵两两交换，并用整数幺模矩阵 P = L·U 共轭，保证结构常数为小整数。
"""

import logging
from typing import List, Optional, Sequence

import numpy as np
from sympy import QQ

from errors import InputError
from exactla.matrix import Matrix, entries, inverse, matrix, mul
from liecore.algebra import LieAlgebra, validate_lie
from liecore.constructions import direct_product
from .catalog import abelian

logger = logging.getLogger(__name__)

EXTENSION_FAMILIES = ("toral", "jordan", "filiform")

# 各族的最小维数
_MIN_DIMS = {"toral": 3, "jordan": 3, "filiform": 5}


def _unimodular(rng: np.random.Generator, n: int, spread: int = 1) -> Matrix:
    """L·U，L 单位下三角、U 单位上三角，det = 1"""
    lower = np.tril(rng.integers(-spread, spread + 1, size=(n, n)), -1) + np.eye(n, dtype=np.int64)
    upper = np.triu(rng.integers(-spread, spread + 1, size=(n, n)), 1) + np.eye(n, dtype=np.int64)
    return matrix((lower @ upper).tolist())


def _conjugate(p: Matrix, p_inv: Matrix, rows: Sequence[Sequence[int]]) -> Matrix:
    return mul(mul(p, matrix(rows)), p_inv)


def _extension(actions: List[Matrix], name: str) -> LieAlgebra:
    """t_1..t_r 在前，v_1..v_n 在后"""
    r = len(actions)
    n = actions[0].shape[0] if actions else 0
    table = {}
    for a, m in enumerate(actions):
        rows = entries(m)
        for j in range(n):
            col = {r + i: rows[i][j] for i in range(n) if rows[i][j]}
            if col:
                table[(a, r + j)] = col
    names = [f"t{a + 1}" for a in range(r)] + [f"v{j + 1}" for j in range(n)]
    return validate_lie(r + n, table, names, name)


def _check_size(rank: int, n: int) -> None:
    if rank < 1 or n < 1:
        raise InputError(f"extension needs rank >= 1 and module dimension >= 1, got ({rank}, {n})")


def random_toral_extension(
    rng: np.random.Generator,
    rank: int = 1,
    n: int = 2,
    weight_range: int = 3,
    trivial_center: bool = True,
) -> LieAlgebra:
    """
    交换可对角化作用 t ⋉ K^n

    Args:
        rng: numpy 随机数生成器
        rank: dim t
        n: dim V
        weight_range: 对角元取自 [-weight_range, weight_range]
        trivial_center: 为 True 时每个坐标至少有一个非零权，且 D_a 线性无关

    Raises:
        InputError: trivial_center 要求 rank ≤ n
    """
    _check_size(rank, n)
    if trivial_center and rank > n:
        raise InputError(f"a toral action of rank {rank} on K^{n} always has a center")

    while True:
        weights = rng.integers(-weight_range, weight_range + 1, size=(rank, n))
        if not trivial_center:
            break
        if np.all(np.any(weights != 0, axis=0)) and np.linalg.matrix_rank(weights) == rank:
            break

    p = _unimodular(rng, n)
    p_inv = inverse(p)
    actions = [_conjugate(p, p_inv, np.diag(weights[a]).tolist()) for a in range(rank)]
    g = _extension(actions, f"toral({rank},{n})")
    logger.debug(f"random toral extension with weights {weights.tolist()}")
    return g


def random_jordan_extension(
    rng: np.random.Generator,
    n: int = 2,
    weight_range: int = 3,
    trivial_center: bool = True,
) -> LieAlgebra:
    """
    一维 t 以 λI + N 作用于 K^n，N 严格上三角且超对角线非零

    λ ≠ 0 时中心为零；导子塔的正规化子链长度随 n 增长
    """
    _check_size(1, n)
    low = 1 if trivial_center else 0
    scalar = int(rng.integers(low, weight_range + 1)) * (1 if rng.integers(0, 2) else -1)
    nilpotent = np.triu(rng.integers(-1, 2, size=(n, n)), 2)
    for i in range(n - 1):
        nilpotent[i, i + 1] = 1
    action = scalar * np.eye(n, dtype=np.int64) + nilpotent

    p = _unimodular(rng, n)
    g = _extension([_conjugate(p, inverse(p), action.tolist())], f"jordan({n})")
    logger.debug(f"random jordan extension with scalar {scalar}")
    return g


def random_filiform_extension(rng: np.random.Generator, n: int = 4, weight_range: int = 3) -> LieAlgebra:
    """
    一维 t 以对角权作用于标准 filiform 代数 [e1, e_i] = e_{i+1}（2 ≤ i < n）

    e1 的权为 λ，e_i 的权为 (i − 2 + j)λ，j ∈ [−(n − 3), −1]。
    零权元 e_{2−j} = [e1, e_{1−j}] 落在 k 中且不在中心，
    所以 [m, m] 有非零的 k 分量，而 Z(g) = 0

    Raises:
        InputError: n < 4
    """
    if n < 4:
        raise InputError(f"filiform extensions need n >= 4, got {n}")
    scalar = int(rng.integers(1, weight_range + 1)) * (1 if rng.integers(0, 2) else -1)
    shift = -int(rng.integers(1, n - 2))
    weights = [scalar] + [(i - 2 + shift) * scalar for i in range(2, n + 1)]

    table = {(0, i + 1): {i + 1: w} for i, w in enumerate(weights) if w}
    for i in range(2, n):
        table[(1, i)] = {i + 1: 1}
    names = ["t"] + [f"e{i}" for i in range(1, n + 1)]
    g = validate_lie(n + 1, table, names, f"filiform({n})")
    logger.debug(f"random filiform extension with weights {weights}")
    return g


def random_solvable_extension(
    rng: np.random.Generator,
    family: Optional[str] = None,
    max_dim: int = 8,
    central_summand: Optional[bool] = None,
) -> LieAlgebra:
    """
    随机选择扩张族，可附加一维中心直和项

    Args:
        family: toral、jordan、filiform 或 None（在维数允许的族中随机）
        max_dim: 结果维数上界（至少 3，filiform 至少 5）
        central_summand: 是否乘以 abelian(1)，None 时随机
    """
    if max_dim < 3:
        raise InputError(f"random extensions need max_dim >= 3, got {max_dim}")
    if family is None:
        choices = [f for f in EXTENSION_FAMILIES if max_dim >= _MIN_DIMS[f]]
        family = choices[int(rng.integers(0, len(choices)))]
    if family not in EXTENSION_FAMILIES:
        raise InputError(f"unknown extension family {family!r}; known: {', '.join(EXTENSION_FAMILIES)}")
    if max_dim < _MIN_DIMS[family]:
        raise InputError(f"{family} extensions need max_dim >= {_MIN_DIMS[family]}, got {max_dim}")
    if central_summand is None:
        central_summand = bool(rng.integers(0, 2)) and max_dim > _MIN_DIMS[family]
    budget = max_dim - (1 if central_summand else 0)

    if family == "toral":
        n = int(rng.integers(1, min(4, budget - 1) + 1))
        rank = int(rng.integers(1, min(n, budget - n) + 1))
        g = random_toral_extension(rng, rank=rank, n=n)
    elif family == "jordan":
        n = int(rng.integers(1, min(4, budget - 1) + 1))
        g = random_jordan_extension(rng, n=n)
    else:
        n = int(rng.integers(4, min(6, budget - 1) + 1))
        g = random_filiform_extension(rng, n=n)

    if central_summand:
        g = direct_product(g, abelian(1), name=f"{g.name}*abelian(1)")
    return g


def random_extensions(seed: int, count: int, max_dim: int = 8, trivial_center: bool = False) -> List[LieAlgebra]:
    """按种子生成 count 个扩张；trivial_center 时不附加中心项"""
    rng = np.random.default_rng(seed)
    central = False if trivial_center else None
    return [random_solvable_extension(rng, max_dim=max_dim, central_summand=central) for _ in range(count)]


def random_rational_matrix(rng: np.random.Generator, n: int = 4, spread: int = 3, denominator: int = 2) -> Matrix:
    """元素为 p/q 的随机矩阵，|p| ≤ spread，1 ≤ q ≤ denominator"""
    nums = rng.integers(-spread, spread + 1, size=(n, n))
    dens = rng.integers(1, denominator + 1, size=(n, n))
    return matrix([[QQ(int(nums[i, j]), int(dens[i, j])) for j in range(n)] for i in range(n)])
