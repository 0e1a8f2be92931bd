"""
导子塔迭代与分类

直接迭代 g_{n+1} = Der(g_n) 总是可用；Z(g) = 0 时另有正规化子塔捷径
ĝ = s ⊕ N̂_B(μ(k)) ⊕ m
"""

import logging
from typing import List, Optional, Tuple

from errors import InputError, InvariantViolation, NonTrivialCenterError
from exactla.subspace import subspace_intersect
from derivations.assembly import assemble_phi, complete_hull
from derivations.derivation_space import derivation_space
from derivations.models import DerivationSpace
from derivations.theta import b_algebra, is_complete
from liecore.algebra import LieAlgebra, subalgebra
from liecore.ideals import c_infty, center, derived_algebra, nilradical, radical
from structure.gamma import gamma_triple, mu_rep
from .models import FastPathCheck, GhatResult, SchenkmanBound, TowerCase, TowerReport, TowerStep
from .normalizers import normalizer_tower

logger = logging.getLogger(__name__)

FAST_PATH_MODES = ("auto", "on", "off")


def _require_trivial_center(g: LieAlgebra) -> None:
    z = center(g)
    if not z.is_zero:
        raise NonTrivialCenterError(f"{g.name or 'algebra'} has a center of dimension {z.dim}")


def direct_dimensions(g: LieAlgebra, count: int) -> List[int]:
    """[dim g_0, ..., dim g_{count-1}]，逐步求解导子代数"""
    dims = [g.dim]
    current = g
    for _ in range(count - 1):
        current = derivation_space(current).as_algebra
        dims.append(current.dim)
    return dims


def ghat_trivial_center(g: LieAlgebra, cross_check: bool = True) -> GhatResult:
    """
    ĝ = s ⊕ N̂_B(μ(k)) ⊕ m

    Args:
        g: 中心平凡的 Lie 代数
        cross_check: 是否用直接迭代验证每个中间维数

    Raises:
        NonTrivialCenterError: Z(g) ≠ 0
        InvariantViolation: ĝ 不完备，或中间维数与直接迭代不符
    """
    _require_trivial_center(g)
    t = gamma_triple(g)
    mu = mu_rep(g, t)
    b = b_algebra(g, t, mu)
    chain = normalizer_tower(b, mu.image)
    predicted = tuple(t.s.dim + w.dim + t.m.dim for w in chain.members)

    assembled = assemble_phi(g, t, chain.limit, mu, name=f"ghat({g.name})" if g.name else "")
    witness = is_complete(assembled.algebra)
    if not witness.complete:
        raise InvariantViolation("ĝ is complete", witness.reason)

    if cross_check:
        direct = direct_dimensions(g, len(predicted))
        if list(predicted) != direct:
            raise InvariantViolation("dim (s ⊕ N_B^p ⊕ m) = dim g_p", f"{list(predicted)} vs {direct}")

    logger.info(f"ĝ of {g.name or 'algebra'}: dim {assembled.dim}, q = {chain.stable_index}")
    return GhatResult(assembled=assembled, chain=chain, predicted=predicted)


def _step(index: int, h: LieAlgebra, der: DerivationSpace) -> TowerStep:
    z = center(h)
    return TowerStep(
        index=index,
        dim=h.dim,
        center_dim=z.dim,
        radical_dim=radical(h).dim,
        nilradical_dim=nilradical(h).dim,
        derived_codim=h.dim - derived_algebra(h).dim,
        der_dim=der.dim,
        complete=z.is_zero and der.dim == h.dim,
    )


def is_k_times_perfect(h: LieAlgebra, der: Optional[DerivationSpace] = None) -> bool:
    """
    h ≅ K × [h, h]，[h, h] 完美且完备，且 dim Der h = dim h
    """
    der = der or derivation_space(h)
    if der.dim != h.dim:
        return False
    z = center(h)
    if z.dim != 1:
        return False
    d = derived_algebra(h)
    if not subspace_intersect(z, d).is_zero or z.dim + d.dim != h.dim:
        return False
    sub, _ = subalgebra(h, d)
    if not derived_algebra(sub).is_full:
        return False
    return is_complete(sub).complete


def _violations(steps: Tuple[TowerStep, ...]) -> List[str]:
    found = []
    for prev, cur in zip(steps, steps[1:]):
        if cur.dim < prev.dim:
            found.append(f"dimension decreased at step {cur.index}: {prev.dim} -> {cur.dim}")
        if prev.non_nilpotent_radical and not cur.non_nilpotent_radical:
            found.append(f"non-nilpotent radical lost at step {cur.index}")
    for s in steps:
        if s.der_dim == s.dim and s.center_dim and s.derived_codim not in (0, 1):
            found.append(f"codimension of [g, g] is {s.derived_codim} at step {s.index}")
    return found


def _fast_path_check(ghat: GhatResult, report_dims: List[int], case: TowerCase, steps: Tuple[TowerStep, ...]) -> FastPathCheck:
    predicted = list(ghat.predicted)
    stable = predicted + [predicted[-1]] * max(0, len(report_dims) - len(predicted))
    agrees = all(a == b for a, b in zip(stable, report_dims))
    if case == TowerCase.COMPLETE and steps[-1].dim != ghat.dim:
        agrees = False
    return FastPathCheck(ghat_dim=ghat.dim, q=ghat.chain.stable_index, predicted=ghat.predicted, agrees=agrees)


def tower_iterate(
    g: LieAlgebra,
    max_steps: int = 16,
    fast_path: str = "auto",
    divergence_window: int = 3,
) -> TowerReport:
    """
    迭代导子塔并分类

    Args:
        g: 起始代数
        max_steps: 最多计算的导子代数个数
        fast_path: auto（Z(g) = 0 时运行）、on 或 off
        divergence_window: 判定疑似发散所需的连续严格增长次数

    Returns:
        TowerReport

    Raises:
        InputError: 参数不合法
        NonTrivialCenterError: fast_path = on 且 Z(g) ≠ 0
        InvariantViolation: 捷径与直接迭代的维数不符
    """
    if max_steps < 1:
        raise InputError(f"max_steps must be at least 1, got {max_steps}")
    if fast_path not in FAST_PATH_MODES:
        raise InputError(f"fast path mode must be one of {', '.join(FAST_PATH_MODES)}, got {fast_path!r}")

    steps: List[TowerStep] = []
    case = TowerCase.UNDETERMINED
    terminal = None
    current = g
    for index in range(max_steps):
        der = derivation_space(current)
        step = _step(index, current, der)
        steps.append(step)
        logger.info(
            f"tower step {index}: dim {step.dim}, center {step.center_dim}, "
            f"Der {step.der_dim}, complete {step.complete}"
        )
        if step.complete:
            case, terminal = TowerCase.COMPLETE, current
            break
        if is_k_times_perfect(current, der):
            case, terminal = TowerCase.K_TIMES_PERFECT, current
            break
        current = der.as_algebra

    dims = [s.dim for s in steps] + [steps[-1].der_dim]
    if case == TowerCase.UNDETERMINED:
        tail = dims[-(divergence_window + 1):]
        if len(tail) == divergence_window + 1 and all(a < b for a, b in zip(tail, tail[1:])):
            case = TowerCase.DIVERGENT_SUSPECTED
            logger.warning(f"tower of {g.name or 'algebra'} still growing after {max_steps} steps: {dims}")

    fast = None
    bound = None
    run_fast = fast_path == "on" or (fast_path == "auto" and steps[0].center_dim == 0)
    if run_fast:
        ghat = ghat_trivial_center(g, cross_check=False)
        fast = _fast_path_check(ghat, dims, case, tuple(steps))
        if not fast.agrees:
            raise InvariantViolation("normalizer tower agrees with direct tower", f"{list(fast.predicted)} vs {dims}")
        bound = schenkman_bound(g, ghat)

    report = TowerReport(
        steps=tuple(steps),
        case=case,
        terminal=terminal,
        fast_path=fast,
        bound=bound,
        violations=tuple(_violations(tuple(steps))),
    )
    for v in report.violations:
        logger.warning(f"tower diagnostics: {v}")
    logger.info(f"tower of {g.name or 'algebra'}: dims {report.dimensions}, {case.value}")
    return report


def schenkman_bound(g: LieAlgebra, ghat: Optional[GhatResult] = None) -> SchenkmanBound:
    """
    dim ĝ ≤ dim Der(C^∞(g)) + dim Z(C^∞(g))，并检查 dim(s ⊕ B ⊕ m) 不超过同一上界

    Raises:
        NonTrivialCenterError: Z(g) ≠ 0
    """
    _require_trivial_center(g)
    sub, _ = subalgebra(g, c_infty(g))
    bound = derivation_space(sub).dim + center(sub).dim
    ghat = ghat or ghat_trivial_center(g, cross_check=False)
    hull = complete_hull(g, ghat.assembled.triple)
    holds = ghat.dim <= bound and hull.dim <= bound
    if not holds:
        logger.warning(f"Schenkman bound {bound} fails: dim ĝ = {ghat.dim}, dim hull = {hull.dim}")
    return SchenkmanBound(bound=bound, ghat_dim=ghat.dim, hull_dim=hull.dim, holds=holds)
