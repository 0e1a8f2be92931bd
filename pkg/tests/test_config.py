"""
测试配置加载
"""

import pytest

from config_loader import DEFAULT_CONFIG_PATH, ConfigLoader, get_config


class TestConfigLoader:
    """测试配置加载器"""

    def test_defaults(self):
        """测试默认配置"""
        config = ConfigLoader()
        assert config.config_path == DEFAULT_CONFIG_PATH
        assert config.get("tower.max_steps") == 16
        assert config.get("tower.fast_path") == "auto"
        assert config.get("output.format") == "text"
        assert config.get("missing.key", "fallback") == "fallback"

    def test_env_substitution(self, monkeypatch):
        """测试环境变量替换"""
        monkeypatch.setenv("LIE_TOWER_LOG_LEVEL", "DEBUG")
        assert ConfigLoader().get("logging.level") == "DEBUG"

    def test_env_default(self, monkeypatch):
        """测试环境变量缺省值"""
        monkeypatch.delenv("LIE_TOWER_LOG_LEVEL", raising=False)
        assert ConfigLoader().get("logging.level") == "INFO"

    def test_numeric_env(self, tmp_path, monkeypatch):
        """测试数字型环境变量"""
        path = tmp_path / "config.yaml"
        path.write_text("tower:\n  max_steps: ${TOWER_STEPS:-8}\n", encoding="utf-8")
        monkeypatch.setenv("TOWER_STEPS", "5")
        assert ConfigLoader(str(path)).get("tower.max_steps") == 5
        monkeypatch.delenv("TOWER_STEPS")
        assert ConfigLoader(str(path)).get("tower.max_steps") == 8

    def test_set_and_section(self):
        """测试设置与配置节"""
        config = ConfigLoader()
        config.set("batch.max_workers", 4)
        config.set("extra.deep.value", 1)
        assert config.section("batch")["max_workers"] == 4
        assert config.get("extra.deep.value") == 1
        assert config.section("nothing") == {}

    def test_missing_file(self, tmp_path):
        """测试配置文件不存在"""
        with pytest.raises(FileNotFoundError):
            ConfigLoader(str(tmp_path / "none.yaml"))

    def test_global_instance(self, tmp_path):
        """测试全局实例按路径缓存"""
        assert get_config() is get_config()
        path = tmp_path / "config.yaml"
        path.write_text("output:\n  format: json\n", encoding="utf-8")
        assert get_config(str(path)).get("output.format") == "json"
