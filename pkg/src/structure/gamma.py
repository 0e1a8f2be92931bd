"""
m.c.r. 子代数 Γ 与 Γ-三元组

Γ = ad s + (ad h)_S，k = g^Γ，m = Γ·r
"""

import logging
from itertools import combinations
from typing import Any, List, Sequence, Tuple

from sympy import QQ

from errors import InvariantViolation, TripleAxiomError
from exactla.matrix import (
    Matrix,
    Vector,
    apply,
    commutator,
    entries,
    flatten,
    from_columns,
    inverse,
    is_zero,
    mul,
    unflatten,
    _raw,
)
from exactla.polynomial import is_semisimple, semisimple_part
from exactla.subspace import (
    Subspace,
    is_direct_sum,
    push_forward,
    restrict,
    stack_solve,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from liecore.algebra import LieAlgebra, bracket_space, is_derivation, is_ideal, is_subalgebra, subalgebra
from liecore.constructions import quotient
from liecore.ideals import (
    LOWER_CENTRAL,
    c_infty,
    center,
    centralizer,
    ideal_generated,
    is_nilpotent_subalgebra,
    nilradical,
    radical,
    series,
)
from .levi import levi_subalgebra, nilpotent_supplement
from .models import GammaTriple, MuRepresentation, TripleCheck

logger = logging.getLogger(__name__)


def _span_matrices(mats: Sequence[Matrix], size: int) -> Tuple[Matrix, ...]:
    """矩阵组张成空间的规范基（展平后 RREF）"""
    space = Subspace.span([flatten(m) for m in mats], size * size)
    return tuple(unflatten(r, size) for r in space.rows)


def joint_kernel(gamma: Sequence[Matrix], dim: int) -> Subspace:
    return stack_solve(list(gamma), dim)


def joint_image(gamma: Sequence[Matrix], w: Subspace) -> Subspace:
    """Σ γ(w)"""
    vectors = [apply(m, v) for m in gamma for v in w.rows]
    return Subspace.span(vectors, w.ambient_dim)


def mcr_gamma(g: LieAlgebra) -> Tuple[Tuple[Matrix, ...], Subspace, Subspace]:
    """
    构造 m.c.r. 子代数 Γ = ad s + (ad h)_S

    Returns:
        (Γ 的基, s, h)

    Raises:
        InvariantViolation: 构造出的 Γ 不满足交换性、半单性或导子条件
    """
    s = levi_subalgebra(g)
    r = radical(g)
    q = subspace_intersect(r, centralizer(g, s))
    q_algebra, _ = subalgebra(g, q)
    h_coords = nilpotent_supplement(q_algebra)
    h = Subspace.span([q.vector(c) for c in h_coords.rows], g.dim)

    ad_s = [g.ad_matrix(v) for v in s.rows]
    toral = [semisimple_part(g.ad_matrix(v)) for v in h.rows]
    toral = [t for t in toral if not is_zero(t)]

    for t in toral:
        if not is_semisimple(t):
            raise InvariantViolation("semisimple part squarefree")
        if not is_derivation(g, t):
            raise InvariantViolation("semisimple part is a derivation")
    for a, b in combinations(toral, 2):
        if not is_zero(commutator(a, b)):
            raise InvariantViolation("toral parts commute")
    for a in toral:
        if any(not is_zero(commutator(a, x)) for x in ad_s):
            raise InvariantViolation("toral parts commute with ad s")

    gamma = _span_matrices(ad_s + toral, g.dim)
    logger.debug(f"Γ: dim s = {s.dim}, dim h = {h.dim}, dim Γ = {len(gamma)}")
    return gamma, s, h


def gamma_split(g: LieAlgebra, gamma: Sequence[Matrix]) -> Tuple[Subspace, Subspace]:
    """
    g = g^Γ ⊕ Γ·g

    Returns:
        (不动子空间, 像)

    Raises:
        InvariantViolation: 分解不是直和，或 [g^Γ, Γ·g] ⊄ Γ·g
    """
    fixed = joint_kernel(gamma, g.dim)
    img = joint_image(gamma, g.full())
    if not is_direct_sum([fixed, img], g.full()):
        raise InvariantViolation("g = g^Γ ⊕ Γ·g", f"dims {fixed.dim} + {img.dim} in {g.dim}")
    if not subspace_contains(img, bracket_space(g, fixed, img)):
        raise InvariantViolation("[g^Γ, Γ·g] ⊆ Γ·g")
    return fixed, img


def check_triple(g: LieAlgebra, t: GammaTriple) -> TripleCheck:
    """逐条验证三元组公理及 Γ 相关的不变量"""
    r = radical(g)
    s, k, m = t.s, t.k, t.m
    return TripleCheck(
        levi=is_subalgebra(g, s) and subspace_intersect(s, r).is_zero and s.dim + r.dim == g.dim,
        k_nilpotent_subalgebra=is_subalgebra(g, k) and is_nilpotent_subalgebra(g, k),
        s_k_commute=bracket_space(g, s, k).is_zero,
        m_in_radical=subspace_contains(r, m),
        radical_split=is_direct_sum([m, k], r),
        sk_acts_onto_m=bracket_space(g, subspace_sum(s, k), m) == m,
        direct_sum=is_direct_sum([s, k, m], g.full()),
        gamma_derivations=all(is_derivation(g, x) for x in t.gamma),
        gamma_kills_k=all(is_zero(mul(x, from_columns(list(k.rows), g.dim))) for x in t.gamma) if k.dim else True,
        gamma_preserves_s=all(subspace_contains(s, push_forward(x, s)) for x in t.gamma),
    )


def verify_triple(g: LieAlgebra, t: GammaTriple) -> GammaTriple:
    check = check_triple(g, t)
    if not check.ok:
        raise TripleAxiomError("Γ-triple axioms", ", ".join(check.failures))
    return t


def gamma_triple(g: LieAlgebra) -> GammaTriple:
    """
    Γ-三元组：k = g^Γ，m = Σ γ(r)，s 取构造 Γ 时的 Levi 子代数

    Raises:
        TripleAxiomError: 公理验证失败
    """
    gamma, s, h = mcr_gamma(g)
    k = joint_kernel(gamma, g.dim)
    m = joint_image(gamma, radical(g))
    triple = GammaTriple(s=s, k=k, m=m, gamma=gamma, h=h)
    logger.info(f"Γ-triple of {g.name or 'algebra'}: dim s = {s.dim}, dim k = {k.dim}, dim m = {m.dim}")
    return verify_triple(g, triple)


def push_triple(g: LieAlgebra, t: GammaTriple, phi: Matrix) -> GammaTriple:
    """
    自同构 φ 下的三元组 (φs, φk, φm)，Γ 换为 φΓφ^{-1}
    """
    phi_inv = inverse(phi)
    gamma = _span_matrices([mul(mul(phi, x), phi_inv) for x in t.gamma], g.dim)
    return GammaTriple(
        s=push_forward(phi, t.s),
        k=push_forward(phi, t.k),
        m=push_forward(phi, t.m),
        gamma=gamma,
        h=push_forward(phi, t.h),
    )


def quotient_triple(g: LieAlgebra, t: GammaTriple, ideal: Subspace) -> Tuple[LieAlgebra, GammaTriple]:
    """
    商映射 π: g → g/I 下的三元组 (πs, πk, πm)

    Γ 换为诱导作用 πγσ，σ 把商空间的基送回 I 的 RREF 基的非主元列

    Returns:
        (商代数, 三元组)

    Raises:
        NotAnIdealError: I 不是理想
        InvariantViolation: Γ 不保持 I
    """
    q, projection = quotient(g, ideal)
    if not all(subspace_contains(ideal, push_forward(x, ideal)) for x in t.gamma):
        raise InvariantViolation("Γ preserves the ideal")
    section = from_columns([g.basis_vector(c) for c in ideal.complement_columns()], g.dim)
    gamma = _span_matrices([mul(mul(projection, x), section) for x in t.gamma], q.dim)
    pushed = GammaTriple(
        s=push_forward(projection, t.s),
        k=push_forward(projection, t.k),
        m=push_forward(projection, t.m),
        gamma=gamma,
        h=push_forward(projection, t.h),
    )
    logger.debug(f"triple pushed to {q.name or 'quotient'}: dims {pushed.dims}")
    return q, pushed


def triple_projection(t: GammaTriple) -> Matrix:
    """
    坐标变换矩阵：v ↦ (s 坐标, k 坐标, m 坐标)

    列为 s、k、m 的 RREF 基向量组成的方阵之逆
    """
    basis = list(t.s.rows) + list(t.k.rows) + list(t.m.rows)
    return inverse(from_columns(basis, t.ambient_dim))


def split_vector(t: GammaTriple, projection: Matrix, v: Sequence[Any]) -> Tuple[Vector, Vector, Vector]:
    coords = apply(projection, v)
    ds, dk = t.s.dim, t.k.dim
    return coords[:ds], coords[ds:ds + dk], coords[ds + dk:]


def mu_matrix(g: LieAlgebra, m: Subspace, x: Sequence[Any]) -> Matrix:
    """ad x|_m 在 m 的 RREF 坐标下的矩阵"""
    try:
        return restrict(g.ad_matrix(x), m)
    except ValueError:
        raise InvariantViolation("[k, m] ⊆ m")


def mu_rep(g: LieAlgebra, t: GammaTriple) -> MuRepresentation:
    """
    μ 表示、n̂ 与中心判据

    Raises:
        InvariantViolation: [k, m] ⊄ m，或 n̂ 的两种刻画不一致
    """
    mu = tuple(mu_matrix(g, t.m, x) for x in t.k.rows)
    nhat = subspace_sum(t.m, bracket_space(g, t.m, t.m))
    if nhat != subspace_intersect(c_infty(g), nilradical(g)):
        raise InvariantViolation("n̂ = C^∞(g) ∩ n")
    if not (is_ideal(g, nhat) and is_nilpotent_subalgebra(g, nhat)):
        raise InvariantViolation("n̂ is a nilpotent ideal")

    size = t.m.dim
    flat = [flatten(x) for x in mu]
    if t.k.dim and size:
        relation = _raw([[v[i] for v in flat] for i in range(size * size)], t.k.dim)
        kernel_coords = stack_solve([relation], t.k.dim)
    else:
        kernel_coords = Subspace.full(t.k.dim)
    ker_mu = Subspace.span([t.k.vector(c) for c in kernel_coords.rows], g.dim)
    image = Subspace.span(flat, size * size)

    z = center(g)
    z_k = subspace_intersect(centralizer(g, t.k), t.k)
    center_identity = subspace_intersect(z_k, ker_mu) == z
    injective = ker_mu.is_zero
    if injective != z.is_zero:
        raise InvariantViolation("μ injective ⟺ Z(g) = 0", f"dim ker μ = {ker_mu.dim}, dim Z = {z.dim}")

    return MuRepresentation(
        mu=mu,
        nhat=nhat,
        ker_mu=ker_mu,
        injective=injective,
        center_identity=center_identity,
        lower_central_identity=_lower_central_identity(g, t, nhat),
        image=image,
    )


def _first_series_mismatch(g: LieAlgebra, w: Subspace, offset: Subspace) -> int:
    """
    比较 C^p(g) 与 offset + C^p(w)，p 取到两列都稳定

    Returns:
        第一个不相等的 p（从 1 开始），全部相等时返回 0
    """
    lower_g = series(g, LOWER_CENTRAL)
    lower_w = subalgebra_lower_central(g, w)
    for p in range(max(len(lower_g), len(lower_w))):
        cg = lower_g[min(p, len(lower_g) - 1)]
        cw = lower_w[min(p, len(lower_w) - 1)]
        if cg != subspace_sum(offset, cw):
            return p + 1
    return 0


def _lower_central_identity(g: LieAlgebra, t: GammaTriple, nhat: Subspace) -> bool:
    """C^p(g) = s + C^p(k) + n̂"""
    return _first_series_mismatch(g, t.k, subspace_sum(t.s, nhat)) == 0


def reductive_part(g: LieAlgebra, gamma: Sequence[Matrix]) -> Subspace:
    """
    {x : ad x ∈ Γ}，验证为 Γ 稳定的子代数
    """
    size = g.dim * g.dim
    span = Subspace.span([flatten(x) for x in gamma], size)
    annihilator = entries(span.annihilator())
    if not annihilator:
        return g.full()
    columns = [flatten(ad_x) for ad_x in g.ad_basis]
    rows = [[sum((a[i] * col[i] for i in range(size)), QQ.zero) for col in columns] for a in annihilator]
    part = stack_solve([_raw(rows, g.dim)], g.dim)
    if not is_subalgebra(g, part) or not all(subspace_contains(part, push_forward(x, part)) for x in gamma):
        raise InvariantViolation("reductive part Γ-stable subalgebra")
    return part


def gamma_ideal(g: LieAlgebra, gamma: Sequence[Matrix]) -> Subspace:
    """
    p = Γ·g + [Γ·g, Γ·g]

    Raises:
        InvariantViolation: p 不是 Γ·g 生成的理想，或 C^p(g) = p + C^p(g^Γ) 不成立
    """
    img = joint_image(gamma, g.full())
    p = subspace_sum(img, bracket_space(g, img, img))
    if p != ideal_generated(g, img):
        raise InvariantViolation("p is the ideal generated by Γ·g")

    mismatch = _first_series_mismatch(g, joint_kernel(gamma, g.dim), p)
    if mismatch:
        raise InvariantViolation("C^p(g) = p + C^p(g^Γ)", f"step {mismatch}")
    return p


def subalgebra_lower_central(g: LieAlgebra, w: Subspace) -> List[Subspace]:
    """子代数 w 自身的降中心列 C^1(w) = w, C^{p+1}(w) = [w, C^p(w)]"""
    members = [w]
    while True:
        nxt = bracket_space(g, w, members[-1])
        if nxt == members[-1]:
            return members
        members.append(nxt)
