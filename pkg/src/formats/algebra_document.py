"""
结构常数文档（UTF-8 JSON）

{
  "name": "paper5",
  "dim": 5,
  "basis": ["x1", ..., "x5"],
  "brackets": [{"i": 1, "j": 2, "coeffs": {"5": "1"}}, ...]
}

下标从 1 开始，有理数以 "p" 或 "p/q" 字符串表示
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from errors import DocumentError, InputError
from exactla.matrix import qq
from liecore.algebra import LieAlgebra, validate_lie
from utils import format_rational

logger = logging.getLogger(__name__)

DOCUMENT_KEYS = ("name", "dim", "basis", "brackets")


@dataclass(frozen=True)
class BracketEntry:
    """[x_i, x_j] = Σ coeffs[k] x_k，i < j，下标从 1 开始"""
    i: int
    j: int
    coeffs: Tuple[Tuple[str, str], ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"i": self.i, "j": self.j, "coeffs": dict(self.coeffs)}


@dataclass(frozen=True)
class AlgebraDocument:
    """结构常数文档"""

    name: str
    dim: int
    basis: Tuple[str, ...]
    brackets: Tuple[BracketEntry, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "brackets": [b.to_dict() for b in self.brackets],
        }


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def parse_document(text: str) -> AlgebraDocument:
    """
    解析文档文本（不验证 Jacobi 恒等式）

    Raises:
        DocumentError: JSON 语法错误（带行列）、缺少字段、下标越界或系数不是有理数
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, e.lineno, e.colno)

    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    missing = [k for k in DOCUMENT_KEYS if k not in data]
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}")
    unknown = [k for k in data if k not in DOCUMENT_KEYS]
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(unknown)}")

    name = data["name"]
    if not isinstance(name, str):
        raise DocumentError("name must be a string")
    dim = _require_int(data["dim"], "dim")
    if dim < 0:
        raise DocumentError(f"dim must be non-negative, got {dim}")
    basis = data["basis"]
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise DocumentError("basis must be a list of strings")
    if len(basis) != dim:
        raise DocumentError(f"basis has {len(basis)} labels for dim {dim}")
    if not isinstance(data["brackets"], list):
        raise DocumentError("brackets must be a list")

    entries: List[BracketEntry] = []
    seen = set()
    for pos, raw in enumerate(data["brackets"], start=1):
        if not isinstance(raw, dict) or set(raw) != {"i", "j", "coeffs"}:
            raise DocumentError(f"bracket entry {pos} must have exactly the fields i, j, coeffs")
        i = _require_int(raw["i"], f"bracket entry {pos}: i")
        j = _require_int(raw["j"], f"bracket entry {pos}: j")
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise DocumentError(f"bracket entry {pos}: index ({i}, {j}) outside 1..{dim}")
        if i >= j:
            raise DocumentError(f"bracket entry {pos}: requires i < j, got ({i}, {j})")
        if (i, j) in seen:
            raise DocumentError(f"bracket entry {pos}: duplicate bracket ({i}, {j})")
        seen.add((i, j))
        coeffs = raw["coeffs"]
        if not isinstance(coeffs, dict):
            raise DocumentError(f"bracket entry {pos}: coeffs must be an object")
        for k, c in coeffs.items():
            if not k.isdigit() or not 1 <= int(k) <= dim:
                raise DocumentError(f"bracket entry {pos}: coefficient index {k!r} outside 1..{dim}")
            if not isinstance(c, str):
                raise DocumentError(f"bracket entry {pos}: coefficient {c!r} must be a string")
            try:
                qq(c)
            except InputError as e:
                raise DocumentError(f"bracket entry {pos}: {e}")
        entries.append(BracketEntry(i, j, tuple(coeffs.items())))

    return AlgebraDocument(name=name, dim=dim, basis=tuple(basis), brackets=tuple(entries))


def document_to_algebra(doc: AlgebraDocument) -> LieAlgebra:
    """
    Raises:
        JacobiViolationError: 结构常数不满足 Jacobi 恒等式
    """
    table = {
        (b.i - 1, b.j - 1): {int(k) - 1: qq(c) for k, c in b.coeffs}
        for b in doc.brackets
    }
    return validate_lie(doc.dim, table, doc.basis, doc.name)


def parse_algebra(text: str) -> LieAlgebra:
    """解析并验证代数文档"""
    g = document_to_algebra(parse_document(text))
    logger.info(f"parsed {g!r}")
    return g


def algebra_to_document(g: LieAlgebra) -> AlgebraDocument:
    """只写出非零系数，下标升序"""
    entries = []
    for i, j, v in g.structure:
        coeffs = tuple((str(k + 1), format_rational(c)) for k, c in enumerate(v) if c)
        entries.append(BracketEntry(i + 1, j + 1, coeffs))
    return AlgebraDocument(name=g.name, dim=g.dim, basis=tuple(g.basis_names), brackets=tuple(entries))


def serialize_document(doc: AlgebraDocument, indent: int = 2) -> str:
    return json.dumps(doc.to_dict(), indent=indent, ensure_ascii=False) + "\n"


def serialize_algebra(g: LieAlgebra, indent: int = 2) -> str:
    return serialize_document(algebra_to_document(g), indent)
