"""
有理数稠密矩阵
以 sympy 的 DomainMatrix(QQ) 为底层，不做任何舍入
"""

import re
from typing import Any, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from errors import DimensionMismatchError, InputError

# 矩阵作用在列向量上：第 j 列是第 j 个基向量的像
Matrix = DomainMatrix
Vector = Tuple[Any, ...]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def qq(value: Any):
    """
    转换为 QQ 元素

    Args:
        value: 整数、QQ 元素或 "p" / "p/q" 字符串

    Returns:
        QQ 元素
    """
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise InputError(f"not a rational number: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise InputError(f"zero denominator in {value!r}")
        return QQ(numerator, denominator)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    return QQ(int(value))


def matrix(rows: Sequence[Sequence[Any]], cols: int = None) -> Matrix:
    """
    由嵌套列表构造矩阵

    Args:
        rows: 行列表，元素可为整数/字符串/QQ
        cols: 列数（rows 为空时必须提供）

    Returns:
        DomainMatrix
    """
    data = [[qq(x) for x in row] for row in rows]
    if cols is None:
        if not data:
            raise DimensionMismatchError("column count required for a matrix without rows")
        cols = len(data[0])
    if any(len(row) != cols for row in data):
        raise DimensionMismatchError("ragged matrix rows")
    return DomainMatrix(data, (len(data), cols), QQ)


def _raw(rows: List[List[Any]], cols: int) -> Matrix:
    # rows 已经是 QQ 元素
    return DomainMatrix(rows, (len(rows), cols), QQ)


def zeros(nrows: int, ncols: int) -> Matrix:
    return _raw([[QQ.zero] * ncols for _ in range(nrows)], ncols)


def identity(n: int) -> Matrix:
    return _raw([[QQ.one if i == j else QQ.zero for j in range(n)] for i in range(n)], n)


def entries(m: Matrix) -> List[List[Any]]:
    """矩阵元素（行主序嵌套列表）"""
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return [[] for _ in range(nrows)]
    return [list(row) for row in m.to_list()]


def from_columns(columns: Sequence[Sequence[Any]], nrows: int) -> Matrix:
    """由列向量构造矩阵"""
    rows = [[columns[j][i] for j in range(len(columns))] for i in range(nrows)]
    return _raw(rows, len(columns))


def column(m: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in entries(m))


def apply(m: Matrix, v: Sequence[Any]) -> Vector:
    """矩阵作用于向量"""
    nrows, ncols = m.shape
    if len(v) != ncols:
        raise DimensionMismatchError(f"vector of length {len(v)} for a {nrows}x{ncols} matrix")
    return tuple(sum((a * b for a, b in zip(row, v)), QQ.zero) for row in entries(m))


def mul(a: Matrix, b: Matrix) -> Matrix:
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    if 0 in a.shape or 0 in b.shape:
        return zeros(a.shape[0], b.shape[1])
    return a.matmul(b)


def add(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot add {a.shape} and {b.shape}")
    return _raw([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(entries(a), entries(b))], a.shape[1])


def sub(a: Matrix, b: Matrix) -> Matrix:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot subtract {b.shape} from {a.shape}")
    return _raw([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(entries(a), entries(b))], a.shape[1])


def scale(m: Matrix, c: Any) -> Matrix:
    c = qq(c)
    return _raw([[c * x for x in row] for row in entries(m)], m.shape[1])


def transpose(m: Matrix) -> Matrix:
    nrows, ncols = m.shape
    rows = entries(m)
    return _raw([[rows[i][j] for i in range(nrows)] for j in range(ncols)], nrows)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return sub(mul(a, b), mul(b, a))


def linear_combination(coeffs: Sequence[Any], mats: Sequence[Matrix], shape: Tuple[int, int]) -> Matrix:
    """Σ c_i M_i"""
    nrows, ncols = shape
    acc = [[QQ.zero] * ncols for _ in range(nrows)]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for i, row in enumerate(entries(m)):
            acc_row = acc[i]
            for j, x in enumerate(row):
                if x:
                    acc_row[j] += c * x
    return _raw(acc, ncols)


def is_zero(m: Matrix) -> bool:
    return all(x == 0 for row in entries(m) for x in row)


def is_square(m: Matrix) -> bool:
    return m.shape[0] == m.shape[1]


def trace_of_product(a: Matrix, b: Matrix):
    """tr(AB)，不构造乘积"""
    ra, rb = entries(a), entries(b)
    return sum((ra[i][j] * rb[j][i] for i in range(len(ra)) for j in range(len(rb))), QQ.zero)


def power(m: Matrix, k: int) -> Matrix:
    result = identity(m.shape[0])
    for _ in range(k):
        result = mul(result, m)
    return result


def is_nilpotent(m: Matrix) -> bool:
    if not is_square(m):
        raise DimensionMismatchError(f"nilpotency needs a square matrix, got {m.shape}")
    return is_zero(power(m, m.shape[0]))


def flatten(m: Matrix) -> Vector:
    """行主序展平"""
    return tuple(x for row in entries(m) for x in row)


def unflatten(vector: Sequence[Any], nrows: int, ncols: int = None) -> Matrix:
    ncols = nrows if ncols is None else ncols
    if len(vector) != nrows * ncols:
        raise DimensionMismatchError(f"cannot reshape {len(vector)} entries to {nrows}x{ncols}")
    return _raw([list(vector[i * ncols:(i + 1) * ncols]) for i in range(nrows)], ncols)


def rref(m: Matrix) -> Tuple[Matrix, List[int], int]:
    """
    简化行阶梯形

    Args:
        m: 任意形状矩阵

    Returns:
        (简化行阶梯形, 主元列列表, 秩)，结果唯一
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return m, [], 0
    reduced, pivots = m.rref()
    pivots = [int(p) for p in pivots]
    return reduced, pivots, len(pivots)


def vector_is_zero(v: Iterable[Any]) -> bool:
    return all(x == 0 for x in v)


def vec_add(u: Sequence[Any], v: Sequence[Any]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Any], v: Sequence[Any]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def combine(coeffs: Sequence[Any], vectors: Sequence[Sequence[Any]], length: int) -> Vector:
    """Σ c_i v_i"""
    acc = [QQ.zero] * length
    for c, v in zip(coeffs, vectors):
        if c == 0:
            continue
        for i, x in enumerate(v):
            if x:
                acc[i] += c * x
    return tuple(acc)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(QQ.one if j == i else QQ.zero for j in range(n))


def inverse(m: Matrix) -> Matrix:
    """
    逆矩阵

    Raises:
        InputError: 矩阵不可逆
    """
    if not is_square(m):
        raise DimensionMismatchError(f"inverse needs a square matrix, got {m.shape}")
    n = m.shape[0]
    if n == 0:
        return m
    if rref(m)[2] != n:
        raise InputError("matrix is singular")
    return _raw(entries(m.inv()), n)
