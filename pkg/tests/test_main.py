"""
测试命令行入口
"""

import json
from unittest.mock import patch

import pytest

from derivations import derivation_space
from errors import InputError, InvariantViolation
from formats import catalog, parse_algebra
from tower import tower_iterate
from main import TowerWorkbench, build_parser, cli


def run_json(capsys, *argv):
    code = cli([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


class TestCommands:
    """测试各子命令"""

    def test_analyze(self, capsys):
        """测试结构分析"""
        code, data = run_json(capsys, "analyze", "catalog:paper5")
        assert code == 0
        assert data["input"]["dim"] == 5
        assert data["gamma_triple"]["dims"] == {"s": 0, "k": 3, "m": 2}
        assert data["input"]["structure"]["flags"]["solvable"] is True

    def test_analyze_k_rows(self, capsys):
        """测试 k 的 RREF 行张成 {x1, x2, x5}"""
        _, data = run_json(capsys, "analyze", "catalog:paper5")
        assert data["gamma_triple"]["k"] == [
            ["1", "0", "0", "0", "0"],
            ["0", "1", "0", "0", "0"],
            ["0", "0", "0", "0", "1"],
        ]

    def test_der(self, capsys):
        """测试导子代数"""
        code, data = run_json(capsys, "der", "catalog:diag12")
        assert code == 0
        assert data["derivations"]["dim"] == 4
        assert data["derivations"]["outer_dim"] == 1

    def test_der_as_algebra(self, capsys):
        """测试 Der g 的文档可重新解析"""
        assert cli(["der", "catalog:heis3", "--as-algebra"]) == 0
        h = parse_algebra(capsys.readouterr().out)
        assert h.dim == 6

    def test_der_document_matches_tower(self, capsys):
        """测试 Der g 文档的导子维数等于导子塔下一步"""
        assert cli(["der", "catalog:diag12", "--as-algebra"]) == 0
        h = parse_algebra(capsys.readouterr().out)
        assert derivation_space(h).dim == tower_iterate(catalog("diag12")).steps[1].der_dim

    def test_tower_abelian_plane(self, capsys):
        """测试 K × 完美 的终止情形"""
        _, data = run_json(capsys, "tower", "catalog:abelian(2)")
        assert data["tower"]["case"] == "case2_K_times_perfect"
        assert data["tower"]["terminal_dim"] == 4

    def test_tower(self, capsys):
        """测试导子塔"""
        code, data = run_json(capsys, "tower", "catalog:jordan2")
        assert code == 0
        assert data["tower"]["dimensions"] == [3, 4, 5, 5]
        assert data["tower"]["q"] == 2

    def test_tower_max_steps(self, capsys):
        """测试步数限制"""
        code, data = run_json(capsys, "tower", "catalog:jordan2", "--max-steps", "2", "--fast-path", "off")
        assert code == 0
        assert data["tower"]["case"] == "undetermined"

    def test_hull(self, capsys):
        """测试完备包"""
        code, data = run_json(capsys, "hull", "catalog:diag12")
        assert code == 0
        assert data["derivations"]["hull"]["dim"] == 4

    def test_hull_degenerate(self, capsys):
        """测试 m = 0 时的退化完备包"""
        code, data = run_json(capsys, "hull", "catalog:heis3")
        assert code == 0
        hull = data["derivations"]["hull"]
        assert hull["degenerate"] is True
        assert hull["blocks"]["k"] == 3
        assert hull["algebra"]["dim"] == 3

    def test_text_output(self, capsys):
        """测试默认文本输出"""
        assert cli(["analyze", "catalog:sl2"]) == 0
        out = capsys.readouterr().out
        assert "name: sl2" in out

    def test_global_options_before_command(self, capsys):
        """测试全局选项写在子命令前"""
        assert cli(["--format", "json", "der", "catalog:sl2"]) == 0
        assert json.loads(capsys.readouterr().out)["derivations"]["all_inner"] is True

    def test_document_input(self, capsys, tmp_path):
        """测试从文件读取"""
        path = tmp_path / "aff.json"
        path.write_text(json.dumps({
            "name": "aff",
            "dim": 2,
            "basis": ["x", "y"],
            "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}],
        }), encoding="utf-8")
        code, data = run_json(capsys, "der", str(path))
        assert code == 0
        assert data["derivations"]["all_inner"] is True

    def test_random(self, capsys):
        """测试随机文档可重复"""
        assert cli(["random", "--seed", "5", "--max-dim", "5"]) == 0
        first = capsys.readouterr().out
        assert cli(["random", "--seed", "5", "--max-dim", "5"]) == 0
        assert capsys.readouterr().out == first
        assert parse_algebra(first).dim <= 5


class TestExitCodes:
    """测试退出码"""

    def test_unknown_catalog(self, capsys):
        """测试未知目录名称"""
        assert cli(["analyze", "catalog:so3"]) == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_file(self, tmp_path):
        """测试文档不存在"""
        assert cli(["analyze", str(tmp_path / "none.json")]) == 1

    def test_bad_document(self, tmp_path, capsys):
        """测试 JSON 语法错误"""
        path = tmp_path / "bad.json"
        path.write_text("{\n  \"name\": 1,,\n}", encoding="utf-8")
        assert cli(["analyze", str(path)]) == 1
        assert "line 2" in capsys.readouterr().err

    def test_invalid_utf8(self, tmp_path, capsys):
        """测试非 UTF-8 文档"""
        path = tmp_path / "latin.json"
        path.write_bytes(b'{"name": "\xff"}')
        assert cli(["analyze", str(path)]) == 1
        assert "not valid utf-8" in capsys.readouterr().err

    def test_directory_input(self, tmp_path, capsys):
        """测试输入路径是目录"""
        assert cli(["analyze", str(tmp_path)]) == 1
        assert capsys.readouterr().err.startswith("error: cannot read")

    def test_batch_invalid_utf8(self, tmp_path):
        """测试批处理中的非 UTF-8 文档按输入错误处理"""
        path = tmp_path / "latin.json"
        path.write_bytes(b"\xff\xfe")
        code = cli(["batch", str(path), "--output-dir", str(tmp_path / "out")])
        assert code == 1

    @pytest.mark.parametrize("steps", ["0", "-3"])
    def test_non_positive_max_steps(self, steps, capsys):
        """测试步数上限必须为正"""
        assert cli(["tower", "catalog:sl2", "--max-steps", steps]) == 1
        assert "max_steps must be at least 1" in capsys.readouterr().err

    def test_bad_arguments(self):
        """测试非法参数"""
        assert cli(["tower", "catalog:sl2", "--fast-path", "always"]) == 1
        assert cli(["simplify", "catalog:sl2"]) == 1

    def test_missing_config(self, tmp_path):
        """测试配置文件不存在"""
        assert cli(["analyze", "catalog:sl2", "--config", str(tmp_path / "none.yaml")]) == 1

    def test_invariant_violation(self, capsys):
        """测试内部不变量失败"""
        with patch("main.tower_iterate", side_effect=InvariantViolation("normalizer tower agrees with direct tower")):
            assert cli(["tower", "catalog:diag12"]) == 2
        assert capsys.readouterr().err.startswith("internal error:")

    def test_help(self, capsys):
        """测试帮助信息"""
        assert cli(["--help"]) == 0
        assert "lie-tower" in capsys.readouterr().out


class TestBatch:
    """测试批处理子命令"""

    def test_reports_written(self, tmp_path, capsys):
        """测试每个输入一份报告，失败不影响其他任务"""
        code = cli([
            "batch", "catalog:sl2", "catalog:aff1", "catalog:so3",
            "--command", "der", "--output-dir", str(tmp_path), "--format", "json",
        ])
        assert code == 1
        assert json.loads((tmp_path / "001_sl2.json").read_text(encoding="utf-8"))["derivations"]["dim"] == 3
        assert (tmp_path / "002_aff1.json").exists()
        assert not (tmp_path / "003_so3.json").exists()
        assert "003_so3: failed" in capsys.readouterr().out

    def test_workbench_batch(self, tmp_path):
        """测试工作台批处理接口"""
        workbench = TowerWorkbench()
        processor = workbench.batch(["catalog:diag12"], "tower", str(tmp_path), {"format": "text"})
        assert processor.exit_code() == 0
        assert "case: case1_complete" in (tmp_path / "001_diag12.txt").read_text(encoding="utf-8")

    def test_unknown_command(self, tmp_path):
        """测试未知子命令"""
        with pytest.raises(InputError, match="unknown batch command"):
            TowerWorkbench().batch(["catalog:sl2"], "simplify", str(tmp_path))


class TestParser:
    """测试参数解析"""

    def test_batch_defaults(self):
        """测试批处理默认子命令"""
        args = build_parser().parse_args(["batch", "catalog:sl2"])
        assert args.batch_command == "analyze"
        assert args.output_dir is None
