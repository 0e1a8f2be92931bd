"""
测试代数文档、内置目录、随机扩张与报告
"""

import json

import pytest
from sympy import QQ

from errors import CatalogError, DocumentError, InputError, JacobiViolationError
from formats import (
    build_report,
    catalog,
    catalog_names,
    parse_algebra,
    parse_document,
    random_extensions,
    random_filiform_extension,
    random_jordan_extension,
    random_solvable_extension,
    random_toral_extension,
    render_json,
    render_text,
    resolve_algebra,
    serialize_algebra,
)
from formats.report_document import REPORT_KEYS
from liecore.algebra import bracket_space
from liecore.ideals import center, nilradical
from structure import gamma_triple, mu_rep
from version import __version__

from conftest import ALL_NAMES

PLANE = """{
  "name": "aff",
  "dim": 2,
  "basis": ["x", "y"],
  "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1/2"}}]
}
"""


def document(brackets, dim=3):
    return json.dumps({
        "name": "t",
        "dim": dim,
        "basis": [f"e{i + 1}" for i in range(dim)],
        "brackets": brackets,
    })


class TestAlgebraDocument:
    """测试结构常数文档的解析与写出"""

    def test_parse(self):
        """测试解析有理系数"""
        g = parse_algebra(PLANE)
        assert g.dim == 2
        assert g.basis_names == ("x", "y")
        assert g.basis_bracket(0, 1) == (QQ(0), QQ(1, 2))

    def test_syntax_error_position(self):
        """测试 JSON 语法错误带行列"""
        with pytest.raises(DocumentError) as excinfo:
            parse_document('{\n  "name": "x",\n  "dim" 2\n}')
        assert excinfo.value.line == 3
        assert excinfo.value.column == 9
        assert "line 3" in str(excinfo.value)

    def test_zero_denominator(self):
        """测试分母为零"""
        with pytest.raises(DocumentError, match="zero denominator"):
            parse_document(document([{"i": 1, "j": 2, "coeffs": {"3": "1/0"}}]))

    @pytest.mark.parametrize("entry,message", [
        ({"i": 1, "j": 4, "coeffs": {}}, "outside"),
        ({"i": 1, "j": 2, "coeffs": {"7": "1"}}, "outside"),
        ({"i": 2, "j": 1, "coeffs": {}}, "i < j"),
        ({"i": 1, "j": 2, "coeffs": {"3": 1}}, "must be a string"),
        ({"i": 1, "j": 2}, "exactly the fields"),
    ])
    def test_bad_entry(self, entry, message):
        """测试非法括号条目"""
        with pytest.raises(DocumentError, match=message):
            parse_document(document([entry]))

    def test_duplicate_entry(self):
        """测试重复括号"""
        entry = {"i": 1, "j": 2, "coeffs": {"3": "1"}}
        with pytest.raises(DocumentError, match="duplicate"):
            parse_document(document([entry, entry]))

    def test_missing_field(self):
        """测试缺少字段"""
        with pytest.raises(DocumentError, match="missing"):
            parse_document('{"name": "x", "dim": 0, "basis": []}')

    def test_empty_brackets(self):
        """测试空括号表为交换代数"""
        g = parse_algebra(document([]))
        assert g.dim == 3
        assert g.is_abelian

    def test_jacobi_violation(self):
        """测试 Jacobi 恒等式失败"""
        text = document([
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 1, "j": 3, "coeffs": {"1": "1"}},
        ])
        with pytest.raises(JacobiViolationError):
            parse_algebra(text)

    @pytest.mark.parametrize("name", ALL_NAMES)
    def test_round_trip(self, name):
        """测试规范文档写出后重新解析不变"""
        g = catalog(name)
        text = serialize_algebra(g)
        h = parse_algebra(text)
        assert h.has_same_brackets(g)
        assert serialize_algebra(h) == text


class TestCatalog:
    """测试内置目录"""

    def test_names(self):
        """测试固定名称"""
        assert {"aff1", "heis3", "sl2", "sl2_std", "paper5", "diag12", "jordan2"} <= set(catalog_names())

    def test_unknown(self):
        """测试未知名称"""
        with pytest.raises(CatalogError, match="unknown catalog algebra"):
            catalog("so3")

    def test_abelian(self):
        """测试 abelian(n)"""
        g = catalog("abelian(4)")
        assert g.dim == 4
        assert g.is_abelian

    def test_product(self):
        """测试直积名称"""
        g = catalog("abelian(1)*sl2")
        assert g.dim == 4
        assert center(g).dim == 1

    def test_resolve(self, tmp_path):
        """测试目录前缀与文件路径"""
        assert resolve_algebra("catalog:sl2").dim == 3
        path = tmp_path / "aff.json"
        path.write_text(PLANE, encoding="utf-8")
        assert resolve_algebra(str(path)).name == "aff"
        with pytest.raises(FileNotFoundError):
            resolve_algebra(str(tmp_path / "missing.json"))


class TestRandomAlgebras:
    """测试随机可解扩张"""

    def test_toral_center(self, rng):
        """测试环面扩张的中心为零"""
        for _ in range(5):
            g = random_toral_extension(rng, rank=2, n=3)
            assert g.dim == 5
            assert center(g).is_zero

    def test_toral_rank_too_large(self, rng):
        """测试秩大于模维数"""
        with pytest.raises(InputError):
            random_toral_extension(rng, rank=2, n=1)

    def test_jordan_center(self, rng):
        """测试 Jordan 扩张的中心为零"""
        g = random_jordan_extension(rng, n=3)
        assert g.dim == 4
        assert center(g).is_zero

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_filiform_center(self, rng, n):
        """测试 filiform 扩张：中心为零，幂零根基非交换"""
        g = random_filiform_extension(rng, n=n)
        assert g.dim == n + 1
        assert center(g).is_zero
        assert not bracket_space(g, nilradical(g), nilradical(g)).is_zero

    def test_filiform_too_small(self, rng):
        """测试 filiform 扩张的维数下限"""
        with pytest.raises(InputError, match="n >= 4"):
            random_filiform_extension(rng, n=3)
        with pytest.raises(InputError, match="filiform extensions need max_dim >= 5"):
            random_solvable_extension(rng, family="filiform", max_dim=4)

    def test_max_dim(self, rng):
        """测试维数上界"""
        for _ in range(10):
            assert random_solvable_extension(rng, max_dim=5).dim <= 5
        with pytest.raises(InputError):
            random_solvable_extension(rng, max_dim=2)
        with pytest.raises(InputError, match="unknown extension family"):
            random_solvable_extension(rng, family="nilpotent")

    def test_seed_determinism(self):
        """测试同一种子生成相同的代数"""
        first = [serialize_algebra(g) for g in random_extensions(7, 5)]
        second = [serialize_algebra(g) for g in random_extensions(7, 5)]
        assert first == second

    def test_trivial_center_batch(self):
        """测试不附加中心项"""
        assert all(center(g).is_zero for g in random_extensions(3, 8, max_dim=6, trivial_center=True))


class TestReport:
    """测试报告"""

    @pytest.fixture
    def report(self, paper5):
        t = gamma_triple(paper5)
        return build_report(paper5, structure=True, triple=t, mu=mu_rep(paper5, t))

    def test_keys(self, report):
        """测试顶层字段"""
        data = json.loads(render_json(report))
        assert tuple(data) == REPORT_KEYS
        assert data["version"] == __version__
        assert data["derivations"] is None
        assert data["tower"] is None

    def test_triple_section(self, report):
        """测试 Γ-三元组的维数与矩阵"""
        data = json.loads(render_json(report))
        assert data["gamma_triple"]["dims"] == {"s": 0, "k": 3, "m": 2}
        gamma = data["gamma_triple"]["gamma"][0]
        assert gamma[2][2] == "1"
        assert gamma[3][3] == "-1"
        assert data["input"]["structure"]["center"] == [["0", "0", "0", "0", "1"]]

    def test_text(self, report):
        """测试文本格式"""
        text = render_text(report)
        assert text.startswith("input:\n")
        assert f"version: {__version__}" in text
        assert "derivations: -" in text

    def test_text_matches_json(self, report):
        """测试文本与 JSON 含有相同的数值"""
        text = render_text(report)

        def leaves(value):
            if isinstance(value, dict):
                for v in value.values():
                    yield from leaves(v)
            elif isinstance(value, list):
                for v in value:
                    yield from leaves(v)
            elif value is not None:
                yield value

        for leaf in leaves(json.loads(render_json(report))):
            expected = ("true" if leaf else "false") if isinstance(leaf, bool) else str(leaf)
            assert expected in text

    def test_deterministic(self, paper5, report):
        """测试相同输入产生相同输出"""
        t = gamma_triple(paper5)
        again = build_report(paper5, structure=True, triple=t, mu=mu_rep(paper5, t))
        assert render_json(again) == render_json(report)
        assert render_text(again) == render_text(report)

    def test_sha256_ignores_layout(self, sl2):
        """测试摘要只依赖规范文档"""
        compact = json.dumps(json.loads(serialize_algebra(sl2)))
        reparsed = parse_algebra(compact)
        assert build_report(reparsed).input["sha256"] == build_report(sl2).input["sha256"]
