"""
内置代数目录

名称是稳定接口：abelian(n)、aff1、heis3、sl2、sl2_std、paper5、diag12、jordan2，
以及用 "*" 连接的直积，例如 "abelian(1)*sl2"
"""

import logging
import re
from pathlib import Path
from typing import Callable, Dict, List

from errors import CatalogError, DocumentError
from liecore.algebra import LieAlgebra, validate_lie
from liecore.constructions import direct_product
from .algebra_document import parse_algebra

logger = logging.getLogger(__name__)

CATALOG_PREFIX = "catalog:"

_ABELIAN_PATTERN = re.compile(r"^abelian\((\d+)\)$")


def abelian(n: int) -> LieAlgebra:
    return validate_lie(n, {}, name=f"abelian({n})")


def aff1() -> LieAlgebra:
    """[x, y] = y"""
    return validate_lie(2, {(0, 1): {1: 1}}, ["x", "y"], "aff1")


def heis3() -> LieAlgebra:
    """[x, y] = z"""
    return validate_lie(3, {(0, 1): {2: 1}}, ["x", "y", "z"], "heis3")


def sl2() -> LieAlgebra:
    """[e, f] = h，[h, e] = 2e，[h, f] = −2f"""
    return validate_lie(3, {(0, 1): {2: 1}, (2, 0): {0: 2}, (2, 1): {1: -2}}, ["e", "f", "h"], "sl2")


def sl2_std() -> LieAlgebra:
    """sl2 ⋉ K²，标准表示"""
    brackets = {
        (0, 1): {2: 1},
        (2, 0): {0: 2},
        (2, 1): {1: -2},
        (0, 4): {3: 1},
        (1, 3): {4: 1},
        (2, 3): {3: 1},
        (2, 4): {4: -1},
    }
    return validate_lie(5, brackets, ["e", "f", "h", "v1", "v2"], "sl2_std")


def paper5() -> LieAlgebra:
    """[x1, x2] = x5，[x1, x3] = x3，[x1, x4] = −x4，[x3, x4] = x5"""
    brackets = {
        (0, 1): {4: 1},
        (0, 2): {2: 1},
        (0, 3): {3: -1},
        (2, 3): {4: 1},
    }
    return validate_lie(5, brackets, name="paper5")


def diag12() -> LieAlgebra:
    """a = K·diag(1, 2) 作用于 V = K²"""
    return validate_lie(3, {(0, 1): {1: 1}, (0, 2): {2: 2}}, ["a", "v1", "v2"], "diag12")


def jordan2() -> LieAlgebra:
    """a = I + J 作用于 V = K²：a·v1 = v1，a·v2 = v1 + v2"""
    return validate_lie(3, {(0, 1): {1: 1}, (0, 2): {1: 1, 2: 1}}, ["a", "v1", "v2"], "jordan2")


_FIXED: Dict[str, Callable[[], LieAlgebra]] = {
    "aff1": aff1,
    "heis3": heis3,
    "sl2": sl2,
    "sl2_std": sl2_std,
    "paper5": paper5,
    "diag12": diag12,
    "jordan2": jordan2,
}


def catalog_names() -> List[str]:
    """固定名称（不含 abelian(n) 与直积）"""
    return sorted(_FIXED)


def catalog(name: str) -> LieAlgebra:
    """
    按名称取目录中的代数

    Raises:
        CatalogError: 未知名称
    """
    name = name.strip()
    if "*" in name:
        factors = [catalog(part) for part in name.split("*")]
        g = factors[0]
        for h in factors[1:]:
            g = direct_product(g, h)
        return g
    match = _ABELIAN_PATTERN.match(name)
    if match:
        return abelian(int(match.group(1)))
    if name not in _FIXED:
        raise CatalogError(f"unknown catalog algebra {name!r}; known: abelian(n), {', '.join(catalog_names())}")
    return _FIXED[name]()


def resolve_algebra(source: str, encoding: str = "utf-8") -> LieAlgebra:
    """
    "catalog:NAME" 或文档路径

    Raises:
        FileNotFoundError: 文档不存在
        DocumentError: 路径是目录、无法读取或不是合法的 UTF-8
        CatalogError / JacobiViolationError: 见 catalog 与 parse_algebra
    """
    if source.startswith(CATALOG_PREFIX):
        g = catalog(source[len(CATALOG_PREFIX):])
        logger.info(f"loaded {g!r} from catalog")
        return g
    path = Path(source)
    if not path.exists():
        raise FileNotFoundError(f"algebra document not found: {path}")
    try:
        text = path.read_text(encoding=encoding)
    except UnicodeDecodeError as e:
        raise DocumentError(f"{path} is not valid {encoding}: {e.reason} at byte {e.start}")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror or e}")
    return parse_algebra(text)
