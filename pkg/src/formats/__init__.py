"""
代数文档、内置目录、随机扩张与分析报告
"""

from .algebra_document import (
    AlgebraDocument,
    BracketEntry,
    parse_document,
    parse_algebra,
    document_to_algebra,
    algebra_to_document,
    serialize_document,
    serialize_algebra,
)
from .catalog import CATALOG_PREFIX, catalog, catalog_names, resolve_algebra
from .random_algebras import (
    random_toral_extension,
    random_filiform_extension,
    random_jordan_extension,
    random_solvable_extension,
    random_extensions,
    random_rational_matrix,
)
from .report_document import ReportDocument, build_report, render_report, render_json, render_text

__all__ = [
    'AlgebraDocument',
    'BracketEntry',
    'parse_document',
    'parse_algebra',
    'document_to_algebra',
    'algebra_to_document',
    'serialize_document',
    'serialize_algebra',
    'CATALOG_PREFIX',
    'catalog',
    'catalog_names',
    'resolve_algebra',
    'random_toral_extension',
    'random_filiform_extension',
    'random_jordan_extension',
    'random_solvable_extension',
    'random_extensions',
    'random_rational_matrix',
    'ReportDocument',
    'build_report',
    'render_report',
    'render_json',
    'render_text',
]
