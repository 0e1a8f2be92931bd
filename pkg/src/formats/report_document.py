"""
分析报告（UTF-8 JSON 或文本）

顶层字段固定为 input、gamma_triple、derivations、tower、version；
子空间一律以规范 RREF 行写出，有理数为字符串
"""

import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from derivations.models import AssembledAlgebra, DerivationSpace
from exactla.matrix import entries, flatten
from exactla.subspace import Subspace
from liecore.algebra import LieAlgebra
from liecore.ideals import DERIVED, LOWER_CENTRAL, c_infty, center, classify_flags, nilradical, radical, series
from structure.levi import levi_subalgebra
from structure.models import GammaTriple, MuRepresentation
from structure.gamma import check_triple
from tower.models import TowerReport
from utils import format_rows, sha256_text
from version import __version__
from .algebra_document import algebra_to_document, serialize_algebra

logger = logging.getLogger(__name__)

REPORT_KEYS = ("input", "gamma_triple", "derivations", "tower", "version")
REPORT_FORMATS = ("text", "json")


def subspace_rows(w: Subspace) -> List[List[str]]:
    return format_rows(w.rows)


@dataclass(frozen=True)
class ReportDocument:
    """未计算的部分为 None"""

    input: Dict[str, Any]
    gamma_triple: Optional[Dict[str, Any]] = None
    derivations: Optional[Dict[str, Any]] = None
    tower: Optional[Dict[str, Any]] = None
    version: str = __version__

    def to_dict(self) -> Dict[str, Any]:
        return {key: getattr(self, key) for key in REPORT_KEYS}


def describe_input(g: LieAlgebra, structure: bool = False) -> Dict[str, Any]:
    """
    输入代数的来源信息，可附带结构分析

    sha256 按规范化的代数文档计算，与输入文件的排版无关
    """
    data: Dict[str, Any] = {
        "name": g.name,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "sha256": sha256_text(serialize_algebra(g)),
    }
    if structure:
        data["structure"] = {
            "flags": classify_flags(g),
            "center": subspace_rows(center(g)),
            "derived_series": [subspace_rows(w) for w in series(g, DERIVED)],
            "lower_central_series": [subspace_rows(w) for w in series(g, LOWER_CENTRAL)],
            "c_infty": subspace_rows(c_infty(g)),
            "radical": subspace_rows(radical(g)),
            "nilradical": subspace_rows(nilradical(g)),
            "levi": subspace_rows(levi_subalgebra(g)),
        }
    return data


def describe_triple(g: LieAlgebra, t: GammaTriple, mu: Optional[MuRepresentation] = None) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        "dims": {"s": t.s.dim, "k": t.k.dim, "m": t.m.dim},
        "s": subspace_rows(t.s),
        "k": subspace_rows(t.k),
        "m": subspace_rows(t.m),
        "h": subspace_rows(t.h),
        "gamma": [format_rows(entries(x)) for x in t.gamma],
        "axioms": check_triple(g, t).to_dict(),
    }
    if mu is not None:
        data["mu"] = dict(
            mu.to_dict(),
            matrices=[format_rows(entries(x)) for x in mu.mu],
            nhat=subspace_rows(mu.nhat),
        )
    return data


def describe_derivations(
    der: DerivationSpace,
    as_algebra: bool = False,
    hull: Optional[AssembledAlgebra] = None,
) -> Dict[str, Any]:
    """Der g 的基以展平矩阵（行主序）的 RREF 行给出"""
    data = dict(der.summary())
    data["basis"] = format_rows(flatten(d) for d in der.basis)
    data["inner"] = subspace_rows(der.inner)
    if as_algebra:
        data["algebra"] = algebra_to_document(der.as_algebra).to_dict()
    if hull is not None:
        data["hull"] = dict(hull.to_dict(), algebra=algebra_to_document(hull.algebra).to_dict())
    return data


def describe_tower(report: TowerReport) -> Dict[str, Any]:
    return report.to_dict()


def build_report(
    g: LieAlgebra,
    structure: bool = False,
    triple: Optional[GammaTriple] = None,
    mu: Optional[MuRepresentation] = None,
    der: Optional[DerivationSpace] = None,
    as_algebra: bool = False,
    hull: Optional[AssembledAlgebra] = None,
    tower: Optional[TowerReport] = None,
) -> ReportDocument:
    """由已计算的部分组装报告，输入相同则输出相同"""
    derivations = None
    if der is not None:
        derivations = describe_derivations(der, as_algebra, hull)
    elif hull is not None:
        derivations = {"hull": dict(hull.to_dict(), algebra=algebra_to_document(hull.algebra).to_dict())}
    return ReportDocument(
        input=describe_input(g, structure),
        gamma_triple=describe_triple(g, triple, mu) if triple is not None else None,
        derivations=derivations,
        tower=describe_tower(tower) if tower is not None else None,
    )


def render_json(report: ReportDocument, indent: int = 2) -> str:
    return json.dumps(report.to_dict(), indent=indent, ensure_ascii=False) + "\n"


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _is_scalar_list(value: Any) -> bool:
    return isinstance(value, list) and all(not isinstance(x, (dict, list)) for x in value)


def _text_lines(key: str, value: Any, depth: int, lines: List[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        lines.append(f"{pad}{key}:")
        for k, v in value.items():
            _text_lines(str(k), v, depth + 1, lines)
    elif _is_scalar_list(value):
        lines.append(f"{pad}{key}: [{', '.join(_scalar(x) for x in value)}]")
    elif isinstance(value, list):
        lines.append(f"{pad}{key}: ({len(value)})")
        for pos, item in enumerate(value, start=1):
            _text_lines(f"[{pos}]", item, depth + 1, lines)
    else:
        lines.append(f"{pad}{key}: {_scalar(value)}")


def render_text(report: ReportDocument) -> str:
    """与 JSON 相同的数据，逐层缩进"""
    lines: List[str] = []
    for key, value in report.to_dict().items():
        _text_lines(key, value, 0, lines)
    return "\n".join(lines) + "\n"


def render_report(report: ReportDocument, fmt: str = "text", indent: int = 2) -> str:
    if fmt == "json":
        return render_json(report, indent)
    return render_text(report)
