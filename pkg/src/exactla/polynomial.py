"""
矩阵多项式
最小多项式、无平方部分、Jordan–Chevalley 分解与幂零矩阵的指数
"""

import logging
from math import factorial
from typing import Any, List, Sequence, Tuple

from sympy import QQ, Poly, Symbol

from errors import DimensionMismatchError, InvariantViolation, NotNilpotentError, ZeroPolynomialError
from .matrix import (
    Matrix,
    add,
    commutator,
    entries,
    flatten,
    identity,
    is_nilpotent,
    is_square,
    is_zero,
    mul,
    scale,
    sub,
    zeros,
    _raw,
)
from .subspace import solve

logger = logging.getLogger(__name__)

_T = Symbol("t")

# 系数列表一律按降幂排列，首项在前
Coefficients = List[Any]


def _to_poly(coeffs: Sequence[Any]) -> Poly:
    return Poly([QQ.to_sympy(QQ.convert(c)) for c in coeffs], _T, domain=QQ)


def _from_poly(p: Poly) -> Coefficients:
    return [QQ.from_sympy(c) for c in p.all_coeffs()]


def minimal_polynomial(m: Matrix) -> Coefficients:
    """
    首一最小多项式（迭代 Krylov 张成）

    Args:
        m: 方阵

    Returns:
        降幂系数列表
    """
    if not is_square(m):
        raise DimensionMismatchError(f"minimal polynomial needs a square matrix, got {m.shape}")
    n = m.shape[0]
    if n == 0:
        return [QQ.one]

    powers = [flatten(identity(n))]
    current = identity(n)
    for degree in range(1, n + 1):
        current = mul(current, m)
        target = flatten(current)
        # 列为 I, M, ..., M^{degree-1}
        basis = _raw([[p[r] for p in powers] for r in range(n * n)], len(powers))
        particular, _ = solve(basis, target)
        if particular is not None:
            # M^d = Σ c_i M^i  ⇒  t^d − Σ c_i t^i
            return [QQ.one] + [-c for c in reversed(particular)]
        powers.append(target)
    raise InvariantViolation("Cayley-Hamilton", f"no relation among the first {n + 1} powers")


def squarefree_part(p: Sequence[Any]) -> Coefficients:
    """
    无平方部分 p / gcd(p, p')，首一

    Raises:
        ZeroPolynomialError: p 为零多项式
    """
    poly = _to_poly(p)
    if poly.is_zero:
        raise ZeroPolynomialError("the zero polynomial has no squarefree part")
    if poly.degree() == 0:
        return [QQ.one]
    reduced = poly.quo(poly.gcd(poly.diff(_T)))
    return _from_poly(reduced.monic())


def poly_at_matrix(coeffs: Sequence[Any], m: Matrix) -> Matrix:
    """Horner 法求 p(M)"""
    n = m.shape[0]
    result = zeros(n, n)
    for c in coeffs:
        result = add(mul(result, m), scale(identity(n), c))
    return result


def is_semisimple(m: Matrix) -> bool:
    """最小多项式无平方因子（有理数域上即绝对半单）"""
    p = minimal_polynomial(m)
    return squarefree_part(p) == p


def jordan_chevalley(m: Matrix) -> Tuple[Matrix, Matrix]:
    """
    Jordan–Chevalley 分解 m = s + n

    在 Q[t]/(P) 中对无平方部分 f 做 Newton 迭代：
    s ← s − f(s)·f'(s)^{-1}，直到 f(s) ≡ 0，P 为最小多项式

    Args:
        m: 方阵

    Returns:
        (半单部分, 幂零部分)，两者都是 m 的多项式
    """
    n = m.shape[0]
    if n == 0:
        return m, m

    minpoly = _to_poly(minimal_polynomial(m))
    f = _to_poly(squarefree_part(_from_poly(minpoly)))
    df = f.diff(_T)
    s = Poly(_T, _T, domain=QQ)

    for step in range(minpoly.degree() + 2):
        residual = f.compose(s).rem(minpoly)
        if residual.is_zero:
            break
        correction = df.compose(s).rem(minpoly).invert(minpoly)
        s = (s - residual * correction).rem(minpoly)
    else:
        raise InvariantViolation("Newton iteration converges", f"minimal polynomial degree {minpoly.degree()}")

    logger.debug(f"Jordan–Chevalley: deg P = {minpoly.degree()}, deg f = {f.degree()}, {step} Newton steps")
    s_part = poly_at_matrix(_from_poly(s), m)
    n_part = sub(m, s_part)
    return s_part, n_part


def semisimple_part(m: Matrix) -> Matrix:
    return jordan_chevalley(m)[0]


def check_jordan_chevalley(m: Matrix, s_part: Matrix, n_part: Matrix) -> bool:
    """四个条件：和、交换、s 半单、n 幂零"""
    return (
        entries(add(s_part, n_part)) == entries(m)
        and is_zero(commutator(s_part, n_part))
        and is_semisimple(s_part)
        and is_nilpotent(n_part)
    )


def exp_nilpotent(n: Matrix) -> Matrix:
    """
    幂零矩阵的指数（有限级数）

    Raises:
        NotNilpotentError: 矩阵不是幂零的
    """
    if not is_square(n) or not is_nilpotent(n):
        raise NotNilpotentError("exponential requires a nilpotent matrix")
    size = n.shape[0]
    result = identity(size)
    term = identity(size)
    for k in range(1, size + 1):
        term = mul(term, n)
        if is_zero(term):
            break
        result = add(result, scale(term, QQ(1, factorial(k))))
    return result
