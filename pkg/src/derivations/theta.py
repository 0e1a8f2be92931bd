"""
(Der g)^Γ、Θ、B = (Der n̂)^Γ|_m 与完备性判据
"""

import logging
from typing import Optional, Tuple

from errors import InputError, InvariantViolation, NotAnIdealError
from exactla.matrix import apply, commutator, flatten, from_columns, mul, unflatten, vector_is_zero
from exactla.subspace import (
    Subspace,
    is_direct_sum,
    push_forward,
    restrict,
    stack_solve,
    subspace_contains,
)
from liecore.algebra import LieAlgebra, subalgebra
from liecore.ideals import center, is_characteristic_ideal
from structure.gamma import mu_rep
from structure.models import GammaTriple, MuRepresentation
from .derivation_space import centralizing_coordinates, derivation_space
from .models import (
    UNVERIFIED_HYPOTHESIS,
    VERIFIED,
    BAlgebra,
    CompletenessWitness,
    DerivationSpace,
    GammaCentralizer,
)

logger = logging.getLogger(__name__)


def _hypothesis(g: LieAlgebra) -> str:
    return VERIFIED if center(g).is_zero else UNVERIFIED_HYPOTHESIS


def der_gamma_centralizer(
    g: LieAlgebra,
    t: GammaTriple,
    der: Optional[DerivationSpace] = None,
) -> GammaCentralizer:
    """
    (Der g)^Γ = {D ∈ Der g : [D, γ] = 0}，以及 Θ(δ) = δ|_m

    Raises:
        InvariantViolation: δ(s) ≠ 0、δ(k) ⊄ k、δ(m) ⊄ m，
            或 Z(g) = 0 时 Der g = ad s ⊕ ad m ⊕ (Der g)^Γ 不成立
    """
    der = der or derivation_space(g)
    n = g.dim
    coords = centralizing_coordinates(der.basis, t.gamma, n)
    space = Subspace.span([der.space.vector(c) for c in coords.rows], n * n)
    basis = tuple(unflatten(r, n) for r in space.rows)

    theta = []
    for idx, d in enumerate(basis):
        if any(not vector_is_zero(apply(d, v)) for v in t.s.rows):
            raise InvariantViolation("δ(s) = 0", f"centralizer element {idx + 1}")
        if not subspace_contains(t.k, push_forward(d, t.k)):
            raise InvariantViolation("δ(k) ⊆ k", f"centralizer element {idx + 1}")
        try:
            theta.append(restrict(d, t.m))
        except ValueError:
            raise InvariantViolation("δ(m) ⊆ m", f"centralizer element {idx + 1}")

    ad_s = Subspace.span([flatten(g.ad_matrix(v)) for v in t.s.rows], n * n)
    ad_m = Subspace.span([flatten(g.ad_matrix(v)) for v in t.m.rows], n * n)
    split_holds = is_direct_sum([ad_s, ad_m, space], der.space)
    hypothesis = _hypothesis(g)

    result = GammaCentralizer(
        space=space,
        basis=basis,
        theta=tuple(theta),
        m_dim=t.m.dim,
        split_holds=split_holds,
        hypothesis=hypothesis,
    )
    if hypothesis == VERIFIED:
        if not split_holds:
            raise InvariantViolation(
                "Der g = ad s ⊕ ad m ⊕ (Der g)^Γ",
                f"dims {ad_s.dim} + {ad_m.dim} + {space.dim} vs {der.dim}",
            )
        if result.theta_image.dim != space.dim:
            raise InvariantViolation("Θ injective", f"rank {result.theta_image.dim} of {space.dim}")
    else:
        logger.warning(f"{g.name or 'algebra'} has nonzero center; Θ statements are unverified")
    return result


def b_algebra(
    g: LieAlgebra,
    t: GammaTriple,
    mu: Optional[MuRepresentation] = None,
    centralizer: Optional[GammaCentralizer] = None,
) -> BAlgebra:
    """
    B = (Der n̂)^Γ|_m

    Raises:
        InvariantViolation: Γ 不保持 n̂，限制映射不单，B 不封闭，
            μ(k) ⊄ B，或 Θ 的像不在 B 中
    """
    mu = mu or mu_rep(g, t)
    nhat = mu.nhat
    size = t.m.dim
    if nhat.is_zero:
        return BAlgebra(m_dim=size, space=Subspace.zero(size * size), hypothesis=_hypothesis(g))

    nalg, _ = subalgebra(g, nhat)
    der_n = derivation_space(nalg)
    try:
        gamma_n = [restrict(x, nhat) for x in t.gamma]
    except ValueError:
        raise InvariantViolation("Γ·n̂ ⊆ n̂")
    coords = centralizing_coordinates(der_n.basis, gamma_n, nhat.dim)

    # m 在 n̂ 坐标下的基；δ 作用后换回 m 的 RREF 坐标
    m_in_n = [nhat.coordinates(v) for v in t.m.rows]
    restricted = []
    for c in coords.rows:
        delta = der_n.matrix(c)
        columns = []
        for v in m_in_n:
            image = nhat.vector(apply(delta, v))
            if not t.m.contains_vector(image):
                raise InvariantViolation("(Der n̂)^Γ preserves m")
            columns.append(t.m.coordinates(image))
        restricted.append(flatten(from_columns(columns, size)))

    space = Subspace.span(restricted, size * size)
    if space.dim != coords.dim:
        raise InvariantViolation("restriction (Der n̂)^Γ → B injective", f"{coords.dim} -> {space.dim}")
    b = BAlgebra(m_dim=size, space=space, hypothesis=_hypothesis(g))

    for x in b.basis:
        for y in b.basis:
            if not b.contains(commutator(x, y)):
                raise InvariantViolation("B closed under commutator")
    if not subspace_contains(space, mu.image):
        raise InvariantViolation("μ(k) ⊆ B")
    if centralizer is not None and not subspace_contains(space, centralizer.theta_image):
        raise InvariantViolation("Θ((Der g)^Γ) ⊆ B")
    logger.debug(f"B: dim {b.dim} on m of dimension {size}, (Der n̂) dimension {der_n.dim}")
    return b


def normalizer_in_b(b: BAlgebra, w: Subspace) -> Subspace:
    """
    N_B(W) = {x ∈ B : [x, W] ⊆ W}

    Args:
        b: B
        w: 展平后的矩阵子空间

    Returns:
        展平后的矩阵子空间
    """
    if not b.basis:
        return b.space
    annihilator = w.annihilator()
    blocks = []
    for row in w.rows:
        y = unflatten(row, b.m_dim)
        columns = [flatten(commutator(x, y)) for x in b.basis]
        blocks.append(mul(annihilator, from_columns(columns, b.m_dim * b.m_dim)))
    coords = stack_solve(blocks, b.dim)
    return Subspace.span([b.space.vector(c) for c in coords.rows], b.m_dim * b.m_dim)


def is_complete(
    g: LieAlgebra,
    der: Optional[DerivationSpace] = None,
    triple: Optional[GammaTriple] = None,
) -> CompletenessWitness:
    """
    Z(g) = 0 且 Der g = ad g

    给出三元组且 Z(g) = 0 时，与 N_B(μ(k)) = μ(k) 交叉验证

    Raises:
        InvariantViolation: 两种判据不一致
    """
    der = der or derivation_space(g)
    z = center(g)
    if not z.is_zero:
        reason = "nonzero center"
    elif der.dim != g.dim:
        reason = "outer derivations"
    else:
        reason = "complete"
    complete = reason == "complete"

    criterion = None
    if triple is not None and z.is_zero:
        mu = mu_rep(g, triple)
        b = b_algebra(g, triple, mu)
        criterion = normalizer_in_b(b, mu.image) == mu.image
        if criterion != complete:
            raise InvariantViolation("complete ⟺ N_B(μ(k)) = μ(k)", f"{complete} vs {criterion}")

    return CompletenessWitness(
        complete=complete,
        dim=g.dim,
        center_dim=z.dim,
        der_dim=der.dim,
        reason=reason,
        normalizer_criterion=criterion,
    )


def codim_one_defect(g: LieAlgebra, a: Subspace, der: Optional[DerivationSpace] = None) -> Tuple[int, int]:
    """
    余维 1 特征理想 a 的两个差值

    Returns:
        (dim Der g − dim g, dim Der g|_a − dim ad g|_a)

    Raises:
        InputError: a 的余维不是 1
        NotAnIdealError: a 不是特征理想
    """
    der = der or derivation_space(g)
    if g.dim - a.dim != 1:
        raise InputError(f"ideal of codimension {g.dim - a.dim}, expected 1")
    if not is_characteristic_ideal(g, a, der.basis):
        raise NotAnIdealError("ideal is not characteristic")

    embedding = from_columns(list(a.rows), g.dim)
    size = g.dim * a.dim
    der_rank = Subspace.span([flatten(mul(d, embedding)) for d in der.basis], size).dim
    ad_rank = Subspace.span([flatten(mul(x, embedding)) for x in g.ad_basis], size).dim
    defect = (der.dim - g.dim, der_rank - ad_rank)
    if defect[0] != defect[1]:
        logger.warning(f"codimension-one defects differ: {defect[0]} vs {defect[1]}")
    return defect

