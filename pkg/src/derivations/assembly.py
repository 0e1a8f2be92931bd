"""
Φ 律组装

在 s ⊕ nsub ⊕ m 上定义括号：
    [s, s]、[s, m] 取自 g；[s, nsub] = 0；
    [y1, y2] = y1·y2 − y2·y1；[y, z] = y·z；
    [z1, z2] = μ(k 分量) + m 分量
"""

import logging
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import QQ

from errors import AssemblyError, JacobiViolationError
from exactla.matrix import (
    Matrix,
    apply,
    column,
    commutator,
    flatten,
    from_columns,
    linear_combination,
    unflatten,
    vector_is_zero,
)
from exactla.subspace import Subspace, solve
from liecore.algebra import LieAlgebra, validate_lie
from liecore.ideals import center
from structure.gamma import gamma_triple, mu_rep, split_vector, triple_projection
from structure.models import GammaTriple, MuRepresentation
from .derivation_space import derivation_space
from .models import (
    UNVERIFIED_HYPOTHESIS,
    VERIFIED,
    AssembledAlgebra,
    DerivationSpace,
    GammaCentralizer,
)
from .theta import b_algebra, der_gamma_centralizer, is_complete, normalizer_in_b

logger = logging.getLogger(__name__)


def _zeros(n: int) -> Tuple[Any, ...]:
    return tuple([QQ.zero] * n)


def assemble_phi(
    g: LieAlgebra,
    t: GammaTriple,
    nsub: Subspace,
    mu: Optional[MuRepresentation] = None,
    name: str = "",
) -> AssembledAlgebra:
    """
    按 Φ 律在 s ⊕ nsub ⊕ m 上组装 Lie 代数

    Args:
        g: 原代数
        t: 已验证的 Γ-三元组
        nsub: gl(m) 中（展平后）的子代数，通常为 μ(k)、N̂_B(μ(k)) 或 B
        mu: μ 表示，缺省时重新计算

    Returns:
        AssembledAlgebra，基依次为 s、nsub、m 的 RREF 基

    Raises:
        AssemblyError: nsub 不封闭，[m, m] 的 k 分量经 μ 后不在 nsub 中，
            或组装结果不满足 Jacobi 恒等式
    """
    mu = mu or mu_rep(g, t)
    ds, dn, dm = t.s.dim, nsub.dim, t.m.dim
    if nsub.ambient_dim != dm * dm:
        raise AssemblyError("nsub ⊆ gl(m)", f"ambient {nsub.ambient_dim}, dim m = {dm}")
    dim = ds + dn + dm
    projection = triple_projection(t)
    ys = [unflatten(r, dm) for r in nsub.rows]
    table: Dict[Tuple[int, int], Tuple[Any, ...]] = {}

    def split(v: Sequence[Any]):
        return split_vector(t, projection, v)

    for a, b in combinations(range(ds), 2):
        cs, ck, cm = split(g.bracket(t.s.rows[a], t.s.rows[b]))
        if not (vector_is_zero(ck) and vector_is_zero(cm)):
            raise AssemblyError("[s, s] ⊆ s")
        table[(a, b)] = cs + _zeros(dn + dm)

    for a in range(ds):
        for b in range(dm):
            cs, ck, cm = split(g.bracket(t.s.rows[a], t.m.rows[b]))
            if not (vector_is_zero(cs) and vector_is_zero(ck)):
                raise AssemblyError("[s, m] ⊆ m")
            table[(a, ds + dn + b)] = _zeros(ds + dn) + cm

    for a, b in combinations(range(dn), 2):
        try:
            coords = nsub.coordinates(flatten(commutator(ys[a], ys[b])))
        except ValueError:
            raise AssemblyError("nsub closed under commutator", f"pair ({a + 1}, {b + 1})")
        table[(ds + a, ds + b)] = _zeros(ds) + coords + _zeros(dm)

    for a in range(dn):
        for b in range(dm):
            table[(ds + a, ds + dn + b)] = _zeros(ds + dn) + column(ys[a], b)

    for a, b in combinations(range(dm), 2):
        cs, ck, cm = split(g.bracket(t.m.rows[a], t.m.rows[b]))
        if not vector_is_zero(cs):
            raise AssemblyError("[m, m] has no s component")
        lifted = flatten(linear_combination(ck, mu.mu, (dm, dm)))
        try:
            coords = nsub.coordinates(lifted)
        except ValueError:
            raise AssemblyError("μ([m, m]_k) ⊆ nsub", f"pair ({a + 1}, {b + 1})")
        table[(ds + dn + a, ds + dn + b)] = _zeros(ds) + coords + cm

    names = [g.basis_names[p] for p in t.s.pivots]
    names += [f"b{i + 1}" for i in range(dn)]
    names += [g.basis_names[p] for p in t.m.pivots]
    label = name or (f"Φ({g.name})" if g.name else "")
    try:
        algebra = validate_lie(dim, table, names, label)
    except JacobiViolationError as e:
        raise AssemblyError("Φ-law satisfies Jacobi", str(e))

    logger.debug(f"assembled {label or 'algebra'}: blocks ({ds}, {dn}, {dm})")
    return AssembledAlgebra(
        algebra=algebra,
        triple=t,
        nsub=nsub,
        hypothesis=VERIFIED if center(g).is_zero else UNVERIFIED_HYPOTHESIS,
    )


def assemble_degenerate(g: LieAlgebra, t: GammaTriple, name: str = "") -> AssembledAlgebra:
    """
    m = 0 时的退化结果 s ⊕ k，括号取自 g

    Raises:
        AssemblyError: m ≠ 0
    """
    if not t.m.is_zero:
        raise AssemblyError("m = 0 in a degenerate hull", f"dim m = {t.m.dim}")
    projection = triple_projection(t)
    basis = list(t.s.rows) + list(t.k.rows)
    table: Dict[Tuple[int, int], Tuple[Any, ...]] = {}
    for a, b in combinations(range(len(basis)), 2):
        cs, ck, _ = split_vector(t, projection, g.bracket(basis[a], basis[b]))
        table[(a, b)] = tuple(cs) + tuple(ck)

    names = [g.basis_names[p] for p in t.s.pivots] + [g.basis_names[p] for p in t.k.pivots]
    algebra = validate_lie(len(basis), table, names, name)
    return AssembledAlgebra(
        algebra=algebra,
        triple=t,
        nsub=Subspace.zero(0),
        degenerate=True,
        hypothesis=VERIFIED if center(g).is_zero else UNVERIFIED_HYPOTHESIS,
        k_dim=t.k.dim,
    )


def _check_homomorphism(source: LieAlgebra, target: LieAlgebra, psi: Matrix, invariant: str) -> None:
    images = [column(psi, i) for i in range(source.dim)]
    for i, j in combinations(range(source.dim), 2):
        lhs = apply(psi, source.basis_bracket(i, j))
        rhs = target.bracket(images[i], images[j])
        if lhs != rhs:
            raise AssemblyError(invariant, f"basis pair ({source.basis_names[i]}, {source.basis_names[j]})")


def identify_with_algebra(assembled: AssembledAlgebra, g: LieAlgebra, mu: MuRepresentation) -> Matrix:
    """
    nsub = μ(k) 时的同构 s + k + m → s + μ(k) + m

    Returns:
        dim assembled × dim g 矩阵

    Raises:
        AssemblyError: μ(k) 不在 nsub 中，或映射不保持括号
    """
    t = assembled.triple
    ds, dn, dm = assembled.blocks
    columns: List[Tuple[Any, ...]] = []
    projection = triple_projection(t)
    for j in range(g.dim):
        cs, ck, cm = split_vector(t, projection, g.basis_vector(j))
        lifted = flatten(linear_combination(ck, mu.mu, (dm, dm)))
        try:
            coords = assembled.nsub.coordinates(lifted)
        except ValueError:
            raise AssemblyError("μ(k) ⊆ nsub")
        columns.append(cs + coords + cm)
    phi = from_columns(columns, assembled.dim)
    _check_homomorphism(g, assembled.algebra, phi, "s + k + m ≅ s + μ(k) + m")
    return phi


def identify_with_derivations(
    assembled: AssembledAlgebra,
    der: DerivationSpace,
    centralizer: GammaCentralizer,
) -> Matrix:
    """
    Ψ: s ⊕ N_B(μ(k)) ⊕ m → Der g

    s_a ↦ ad s_a，y ↦ Θ^{-1}(y)，m_b ↦ ad m_b

    Returns:
        dim Der g × dim assembled 矩阵（Der g 的 RREF 坐标）

    Raises:
        AssemblyError: y 不在 Θ 的像中，Ψ 不可逆，或不保持括号
    """
    g = der.algebra
    t = assembled.triple
    dm = t.m.dim
    n = g.dim
    columns: List[Tuple[Any, ...]] = []
    for v in t.s.rows:
        columns.append(der.coordinates(g.ad_matrix(v)))

    theta = from_columns([flatten(y) for y in centralizer.theta], dm * dm)
    for row in assembled.nsub.rows:
        coeffs, _ = solve(theta, row)
        if coeffs is None:
            raise AssemblyError("nsub ⊆ Θ((Der g)^Γ)")
        delta = linear_combination(coeffs, centralizer.basis, (n, n))
        columns.append(der.coordinates(delta))

    for v in t.m.rows:
        columns.append(der.coordinates(g.ad_matrix(v)))

    psi = from_columns(columns, der.dim)
    if assembled.dim != der.dim or Subspace.span(columns, der.dim).dim != der.dim:
        raise AssemblyError("Ψ bijective", f"dim {assembled.dim} vs Der dimension {der.dim}")
    _check_homomorphism(assembled.algebra, der.as_algebra, psi, "Ψ preserves brackets")
    return psi


def complete_hull(
    g: LieAlgebra,
    t: Optional[GammaTriple] = None,
    mu: Optional[MuRepresentation] = None,
) -> AssembledAlgebra:
    """
    完备包 g' = s ⊕ B ⊕ m

    m = 0 且 k ≠ 0 时 B 平凡，结果取 s ⊕ k 并标记为退化

    Raises:
        AssemblyError: 组装失败，或 Z(g) = 0 时结果不完备
    """
    t = t or gamma_triple(g)
    label = f"hull({g.name})" if g.name else ""
    if t.m.is_zero and not t.k.is_zero:
        hull = assemble_degenerate(g, t, name=label)
    else:
        mu = mu or mu_rep(g, t)
        hull = assemble_phi(g, t, b_algebra(g, t, mu).space, mu, name=label)
    witness = is_complete(hull.algebra)
    if not witness.complete:
        if hull.hypothesis == VERIFIED:
            raise AssemblyError("s ⊕ B ⊕ m is complete", witness.reason)
        logger.warning(f"hull of {g.name or 'algebra'} is not complete ({witness.reason})")
    if hull.degenerate:
        logger.info(f"hull of {g.name or 'algebra'} is degenerate: m = 0, result is s ⊕ k")
    logger.info(f"complete hull of {g.name or 'algebra'}: dim {hull.dim}")
    return hull


def reconstruct_derivations(
    g: LieAlgebra,
    t: Optional[GammaTriple] = None,
    der: Optional[DerivationSpace] = None,
) -> Tuple[AssembledAlgebra, Matrix]:
    """
    s ⊕ N_B(μ(k)) ⊕ m ≅ Der g（Z(g) = 0）

    Returns:
        (组装结果, Ψ)
    """
    t = t or gamma_triple(g)
    der = der or derivation_space(g)
    mu = mu_rep(g, t)
    centralizer = der_gamma_centralizer(g, t, der)
    b = b_algebra(g, t, mu, centralizer)
    nsub = normalizer_in_b(b, mu.image)
    if centralizer.hypothesis == VERIFIED and nsub != centralizer.theta_image:
        raise AssemblyError("Θ((Der g)^Γ) = N_B(μ(k))", f"dims {centralizer.theta_image.dim} vs {nsub.dim}")
    assembled = assemble_phi(g, t, nsub, mu, name=f"Der({g.name})" if g.name else "")
    return assembled, identify_with_derivations(assembled, der, centralizer)
