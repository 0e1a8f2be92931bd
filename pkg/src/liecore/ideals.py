"""
中心、中心化子、正规化子、导出列与降中心列、根基与幂零根基
"""

import logging
from typing import Any, Dict, List, Sequence, Tuple

from sympy import QQ

from errors import DimensionMismatchError, InputError, NotAnIdealError
from exactla.matrix import (
    Matrix,
    apply,
    entries,
    flatten,
    identity,
    mul,
    trace_of_product,
    unflatten,
    _raw,
)
from exactla.subspace import Subspace, stack_solve, subspace_sum
from .algebra import LieAlgebra, LinearMap, bracket_space, is_ideal, subalgebra

logger = logging.getLogger(__name__)

DERIVED = "derived"
LOWER_CENTRAL = "lower_central"


def _check(g: LieAlgebra, w: Subspace) -> None:
    if w.ambient_dim != g.dim:
        raise DimensionMismatchError(f"subspace of ambient dimension {w.ambient_dim} in an algebra of dimension {g.dim}")


def centralizer(g: LieAlgebra, w: Subspace) -> Subspace:
    """{x : [x, w] = 0}"""
    _check(g, w)
    return stack_solve([g.ad_matrix(b) for b in w.rows], g.dim)


def center(g: LieAlgebra) -> Subspace:
    """全部 ad x_i 的公共核"""
    return stack_solve(g.ad_basis, g.dim)


def normalizer(g: LieAlgebra, w: Subspace) -> Subspace:
    """{x : [x, w] ⊆ w}"""
    _check(g, w)
    if w.is_full:
        return g.full()
    annihilator = w.annihilator()
    return stack_solve([mul(annihilator, g.ad_matrix(b)) for b in w.rows], g.dim)


def series(g: LieAlgebra, kind: str = DERIVED) -> List[Subspace]:
    """
    导出列或降中心列，严格下降直到稳定

    Args:
        g: Lie 代数
        kind: "derived" 或 "lower_central"

    Returns:
        子空间列表，最后一项为稳定项
    """
    if kind not in (DERIVED, LOWER_CENTRAL):
        raise InputError(f"unknown series kind: {kind}")
    members = [g.full()]
    while True:
        last = members[-1]
        left = last if kind == DERIVED else g.full()
        nxt = bracket_space(g, left, last)
        if nxt == last:
            return members
        members.append(nxt)


def derived_algebra(g: LieAlgebra) -> Subspace:
    return bracket_space(g, g.full(), g.full())


def c_infty(g: LieAlgebra) -> Subspace:
    """降中心列的稳定项 C^∞(g)"""
    return series(g, LOWER_CENTRAL)[-1]


def killing_matrix(g: LieAlgebra) -> Matrix:
    rows = [[trace_of_product(a, b) for b in g.ad_basis] for a in g.ad_basis]
    return _raw(rows, g.dim)


def killing_radical(g: LieAlgebra) -> Tuple[Matrix, Subspace]:
    """
    Killing 矩阵与根基

    根基 = [g, g] 关于 Killing 型的正交补（特征 0）

    Returns:
        (Killing 矩阵, 根基)
    """
    killing = killing_matrix(g)
    derived = derived_algebra(g)
    if derived.is_zero:
        return killing, g.full()
    kill_rows = entries(killing)
    rows = [
        [sum((d[i] * kill_rows[i][j] for i in range(g.dim)), QQ.zero) for j in range(g.dim)]
        for d in derived.rows
    ]
    return killing, stack_solve([_raw(rows, g.dim)], g.dim)


def radical(g: LieAlgebra) -> Subspace:
    return killing_radical(g)[1]


def _associative_closure(generators: Sequence[Matrix], size: int) -> List[Matrix]:
    """由生成元与单位阵张成的结合代数的一组基（左乘闭包）"""
    basis = Subspace.span([flatten(identity(size))] + [flatten(m) for m in generators], size * size)
    frontier = [unflatten(r, size) for r in basis.rows]
    while frontier:
        found = []
        for a in generators:
            for b in frontier:
                v = flatten(mul(a, b))
                if not basis.contains_vector(v):
                    basis = Subspace.span(list(basis.rows) + [v], size * size)
                    found.append(unflatten(v, size))
        frontier = found
    return [unflatten(r, size) for r in basis.rows]


def nilradical(g: LieAlgebra) -> Subspace:
    """
    最大幂零理想

    在根基 r 上取 ad_r 生成的结合代数 A（含单位），
    返回 {x ∈ r : tr(ad_r x · b) = 0, ∀ b ∈ A}
    """
    r = radical(g)
    if r.is_zero:
        return r
    sub, _ = subalgebra(g, r)
    algebra_basis = _associative_closure(sub.ad_basis, sub.dim)
    logger.debug(f"nilradical: radical dim {r.dim}, associative closure dim {len(algebra_basis)}")
    rows = [[trace_of_product(ad_x, b) for ad_x in sub.ad_basis] for b in algebra_basis]
    coords = stack_solve([_raw(rows, sub.dim)], sub.dim)
    return Subspace.span([r.vector(c) for c in coords.rows], g.dim)


def classify_flags(g: LieAlgebra) -> Dict[str, bool]:
    """solvable / nilpotent / semisimple / perfect / abelian"""
    derived = series(g, DERIVED)
    lower = series(g, LOWER_CENTRAL)
    flags = {
        "solvable": derived[-1].is_zero,
        "nilpotent": lower[-1].is_zero,
        "semisimple": radical(g).is_zero,
        "perfect": derived_algebra(g) == g.full(),
        "abelian": g.is_abelian,
    }
    return flags


def ideal_generated(g: LieAlgebra, w: Subspace) -> Subspace:
    """包含 w 的最小理想"""
    _check(g, w)
    current = w
    while True:
        nxt = subspace_sum(current, bracket_space(g, g.full(), current))
        if nxt == current:
            return current
        current = nxt


def is_nilpotent_subalgebra(g: LieAlgebra, w: Subspace) -> bool:
    """子代数 w 自身作为 Lie 代数是否幂零"""
    current = w
    while not current.is_zero:
        nxt = bracket_space(g, w, current)
        if nxt == current:
            return False
        current = nxt
    return True


def is_characteristic_ideal(g: LieAlgebra, w: Subspace, ders: Sequence[Any]) -> bool:
    """
    理想 w 是否被全部导子保持

    Args:
        g: Lie 代数
        w: 理想
        ders: 张成 Der g 的矩阵（或带 matrix 属性的映射）

    Raises:
        NotAnIdealError: w 不是理想
    """
    _check(g, w)
    if not is_ideal(g, w):
        raise NotAnIdealError("characteristic test needs an ideal")
    for d in ders:
        m = d.matrix if isinstance(d, LinearMap) else d
        if not all(w.contains_vector(apply(m, b)) for b in w.rows):
            return False
    return True
