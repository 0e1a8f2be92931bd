"""
配置加载器
负责加载和管理配置文件
"""

import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

# 加载 .env 文件
load_dotenv()

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "config" / "default_config.yaml"

# ${VAR} 或 ${VAR:-default}
_ENV_PATTERN = re.compile(r"^\$\{([A-Za-z_][A-Za-z0-9_]*)(?::-(.*))?\}$")


class ConfigLoader:
    """配置加载器类"""

    def __init__(self, config_path: Optional[str] = None):
        """
        初始化配置加载器

        Args:
            config_path: 配置文件路径，None 时使用仓库内默认配置
        """
        self.config_path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
        self.config: Dict[str, Any] = {}
        self.load_config()

    def load_config(self) -> Dict[str, Any]:
        """
        加载配置文件

        Returns:
            配置字典
        """
        if not self.config_path.exists():
            raise FileNotFoundError(f"config file not found: {self.config_path}")

        with open(self.config_path, 'r', encoding='utf-8') as f:
            self.config = yaml.safe_load(f) or {}

        # 处理环境变量替换
        self._replace_env_vars(self.config)

        return self.config

    def _replace_env_vars(self, config: Any) -> None:
        """
        递归替换配置中的环境变量

        Args:
            config: 配置对象
        """
        if isinstance(config, dict):
            for key, value in config.items():
                if isinstance(value, str):
                    config[key] = self._substitute(value)
                elif isinstance(value, (dict, list)):
                    self._replace_env_vars(value)
        elif isinstance(config, list):
            for index, item in enumerate(config):
                if isinstance(item, str):
                    config[index] = self._substitute(item)
                else:
                    self._replace_env_vars(item)

    @staticmethod
    def _substitute(value: str) -> Any:
        match = _ENV_PATTERN.match(value)
        if not match:
            return value
        name, default = match.group(1), match.group(2)
        resolved = os.getenv(name)
        if resolved in (None, ""):
            resolved = default if default is not None else ""
        # 数字型环境变量按 YAML 规则解析
        return yaml.safe_load(resolved) if resolved != "" else ""

    def get(self, key: str, default: Any = None) -> Any:
        """
        获取配置值，支持点号访问嵌套配置

        Args:
            key: 配置键，支持 'tower.max_steps' 形式
            default: 默认值

        Returns:
            配置值
        """
        value = self.config

        for k in key.split('.'):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return default if value in (None, "") else value

    def set(self, key: str, value: Any) -> None:
        """
        设置配置值

        Args:
            key: 配置键
            value: 配置值
        """
        keys = key.split('.')
        config = self.config

        for k in keys[:-1]:
            if k not in config or not isinstance(config[k], dict):
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def section(self, name: str) -> Dict[str, Any]:
        """返回某个顶层配置节（不存在时为空字典）"""
        value = self.config.get(name, {})
        return dict(value) if isinstance(value, dict) else {}


# 全局配置实例
_global_config: Optional[ConfigLoader] = None


def get_config(config_path: Optional[str] = None) -> ConfigLoader:
    """
    获取全局配置实例

    Args:
        config_path: 配置文件路径

    Returns:
        ConfigLoader实例
    """
    global _global_config
    if _global_config is None or (config_path and Path(config_path) != _global_config.config_path):
        _global_config = ConfigLoader(config_path)
    return _global_config


def reset_config() -> None:
    """清除全局配置实例（测试用）"""
    global _global_config
    _global_config = None
