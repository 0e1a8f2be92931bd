"""
测试公共设置：把 src/ 放入 sys.path，提供目录代数
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from sympy import QQ

SRC_DIR = Path(__file__).resolve().parent.parent / "src"
if str(SRC_DIR) not in sys.path:
    sys.path.insert(0, str(SRC_DIR))

from config_loader import reset_config  # noqa: E402
from exactla.matrix import is_nilpotent  # noqa: E402
from formats.catalog import catalog  # noqa: E402
from liecore.ideals import nilradical  # noqa: E402

# Z(g) = 0 的目录代数
TRIVIAL_CENTER_NAMES = ["sl2", "aff1", "diag12", "jordan2", "sl2_std"]
ALL_NAMES = ["abelian(1)", "abelian(2)", "aff1", "heis3", "sl2", "sl2_std", "paper5", "diag12", "jordan2"]


def sample_nilpotent_element(g, rng):
    """随机取 ad 幂零的元素：幂零根基中的组合，或 ad 幂零的基向量的倍数"""
    n = nilradical(g)
    scale = int(rng.integers(1, 4)) * (1 if rng.integers(0, 2) else -1)
    if not n.is_zero and rng.integers(0, 2):
        coeffs = rng.integers(-2, 3, size=n.dim)
        return n.vector([QQ(int(c) * scale) for c in coeffs])
    candidates = [i for i in range(g.dim) if is_nilpotent(g.ad_basis[i])]
    i = candidates[int(rng.integers(0, len(candidates)))]
    return tuple(QQ(scale) * x for x in g.basis_vector(i))


@pytest.fixture
def paper5():
    return catalog("paper5")


@pytest.fixture
def sl2():
    return catalog("sl2")


@pytest.fixture
def aff1():
    return catalog("aff1")


@pytest.fixture
def diag12():
    return catalog("diag12")


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(autouse=True)
def fresh_config():
    reset_config()
    yield
    reset_config()
