"""
Levi 子代数与幂零补
"""

import logging
from itertools import combinations
from typing import Any, List

from sympy import QQ

from errors import InvariantViolation
from exactla.matrix import Vector, apply, combine, entries, is_zero, vec_sub, _raw
from exactla.polynomial import semisimple_part
from exactla.subspace import Subspace, kernel, solve, subspace_intersect
from liecore.algebra import LieAlgebra, is_subalgebra, subalgebra
from liecore.ideals import DERIVED, LOWER_CENTRAL, radical, series

logger = logging.getLogger(__name__)


def _correct_lift(
    g: LieAlgebra,
    lift: List[Vector],
    alpha: dict,
    current: Subspace,
    target: Subspace,
) -> List[Vector]:
    """
    把提升向量 y_c 修正为 y_c + z_c（z_c ∈ current），使括号缺陷落入 target

    缺陷 d_ab = [y_a, y_b] − Σ α_ab^c y_c
    条件 d_ab + [y_a, z_b] − [y_b, z_a] − Σ α_ab^c z_c ∈ target
    """
    n_lift = len(lift)
    width = current.dim
    annihilator = entries(target.annihilator())
    if not annihilator or width == 0:
        return lift
    ads = [g.ad_matrix(y) for y in lift]
    # ad(y_a) w_t
    moved = [[apply(ad_y, w) for w in current.rows] for ad_y in ads]

    rows: List[List[Any]] = []
    rhs: List[Any] = []
    for a, b in combinations(range(n_lift), 2):
        defect = vec_sub(g.bracket(lift[a], lift[b]), combine(alpha[(a, b)], lift, g.dim))
        # 未知量 u_{c,t} 的列序号 c * width + t
        block = [[QQ.zero] * g.dim for _ in range(n_lift * width)]
        for t in range(width):
            for i in range(g.dim):
                block[b * width + t][i] += moved[a][t][i]
                block[a * width + t][i] -= moved[b][t][i]
        for c, coeff in enumerate(alpha[(a, b)]):
            if coeff:
                for t, w in enumerate(current.rows):
                    for i in range(g.dim):
                        block[c * width + t][i] -= coeff * w[i]
        for ann in annihilator:
            rows.append([sum((ann[i] * col[i] for i in range(g.dim)), QQ.zero) for col in block])
            rhs.append(-sum((ann[i] * defect[i] for i in range(g.dim)), QQ.zero))

    if not rows:
        return lift
    particular, _ = solve(_raw(rows, n_lift * width), rhs)
    if particular is None:
        raise InvariantViolation("Levi lift solvable", f"stage of dimension {current.dim}")
    corrected = []
    for c, y in enumerate(lift):
        z = combine(particular[c * width:(c + 1) * width], current.rows, g.dim)
        corrected.append(tuple(a + b for a, b in zip(y, z)))
    return corrected


def levi_subalgebra(g: LieAlgebra) -> Subspace:
    """
    Levi 子代数

    先把 g/r 的基提升为标准基向量（r 的非主元列），
    再沿 r 的导出列逐层求解线性方程修正提升

    Returns:
        s，满足 s ∩ r = 0，s ⊕ r = g，s 对括号封闭
    """
    r = radical(g)
    if r.is_full:
        return g.zero()
    if r.is_zero:
        return g.full()

    cols = r.complement_columns()
    lift = [g.basis_vector(c) for c in cols]
    # g/r 在补空间基下的结构常数
    alpha = {}
    for a, b in combinations(range(len(cols)), 2):
        rest = r.reduce(g.basis_bracket(cols[a], cols[b]))
        alpha[(a, b)] = tuple(rest[c] for c in cols)

    stages = radical_derived_series(g, r)
    for current, target in zip(stages, stages[1:]):
        logger.debug(f"Levi correction: stage dim {current.dim} -> {target.dim}")
        lift = _correct_lift(g, lift, alpha, current, target)

    s = Subspace.span(lift, g.dim)
    if s.dim != len(cols) or not is_subalgebra(g, s) or not subspace_intersect(s, r).is_zero:
        raise InvariantViolation("Levi subalgebra closed", f"dim s = {s.dim}, dim r = {r.dim}")
    return s


def radical_derived_series(g: LieAlgebra, r: Subspace) -> List[Subspace]:
    """可解理想 r 的导出列（在 g 中计算），以零子空间结尾"""
    sub, _ = subalgebra(g, r)
    members = [Subspace.span([r.vector(c) for c in w.rows], g.dim) for w in series(sub, DERIVED)]
    if not members[-1].is_zero:
        raise InvariantViolation("radical solvable", f"derived series stops at dimension {members[-1].dim}")
    return members


def nilpotent_supplement(q: LieAlgebra) -> Subspace:
    """
    幂零补 h：h 是幂零子代数且 h + C^∞(q) = q

    若 q 幂零则返回 q；否则取第一个 (ad x)_S ≠ 0 的基向量 x，
    在 ker (ad x)_S 上递归

    Args:
        q: 可解 Lie 代数

    Returns:
        q 中的子空间
    """
    if series(q, LOWER_CENTRAL)[-1].is_zero:
        return q.full()

    for i in range(q.dim):
        delta = semisimple_part(q.ad_basis[i])
        if not is_zero(delta):
            break
    else:
        raise InvariantViolation("Engel", "non-nilpotent algebra with nilpotent adjoint basis")

    fixed = kernel(delta)
    logger.debug(f"nilpotent supplement: split along {q.basis_names[i]}, kernel dim {fixed.dim} of {q.dim}")
    inner, _ = subalgebra(q, fixed)
    h_inner = nilpotent_supplement(inner)
    return Subspace.span([fixed.vector(c) for c in h_inner.rows], q.dim)
