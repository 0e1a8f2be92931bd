"""
异常定义
输入错误与内部不变量失败两类，CLI 据此映射退出码 (1 / 2)
"""

from typing import Optional, Sequence


class LieToolError(Exception):
    """所有工具异常的基类"""


class InputError(LieToolError, ValueError):
    """输入错误：调用方提供了不合法的数据"""


class DimensionMismatchError(InputError):
    """环境维数或矩阵形状不一致"""


class JacobiViolationError(InputError):
    """结构常数不满足 Jacobi 恒等式"""

    def __init__(self, triple: Sequence[int], names: Optional[Sequence[str]] = None):
        self.triple = tuple(triple)
        labels = [names[i] for i in self.triple] if names else [str(i + 1) for i in self.triple]
        super().__init__(f"Jacobi identity violated at ({', '.join(labels)})")


class DocumentError(InputError):
    """代数文档语法或语义错误，带行列位置"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class CatalogError(InputError):
    """未知的目录名称"""


class NotNilpotentError(InputError):
    """要求幂零的矩阵不是幂零的"""


class NotAnIdealError(InputError):
    """子空间不是理想"""


class NonTrivialCenterError(InputError):
    """要求中心为零的操作收到了中心非零的代数"""


class ZeroPolynomialError(InputError):
    """零多项式没有无平方部分"""


class InvariantViolation(LieToolError, RuntimeError):
    """内部一致性失败：出现即说明实现有缺陷"""

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        message = f"invariant violated: {invariant}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class TripleAxiomError(InvariantViolation):
    """Γ-三元组公理验证失败"""


class AssemblyError(InvariantViolation):
    """Φ 律组装失败"""
