"""
工具函数模块
提供日志、有理数格式化和进度跟踪等通用工具
"""

import hashlib
import logging
from pathlib import Path
from typing import Iterable, List

import colorlog

# CLI 统一配置日志级别的包名
PACKAGE_LOGGERS = ("exactla", "liecore", "structure", "derivations", "tower", "formats", "tasks")


def setup_logger(name: str = "lie_tower", level: str = "INFO") -> logging.Logger:
    """
    设置日志记录器

    Args:
        name: 日志记录器名称
        level: 日志级别

    Returns:
        Logger对象
    """
    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    if not logger.handlers:
        handler = colorlog.StreamHandler()
        handler.setFormatter(colorlog.ColoredFormatter(
            '%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S',
            log_colors={
                'DEBUG': 'cyan',
                'INFO': 'green',
                'WARNING': 'yellow',
                'ERROR': 'red',
                'CRITICAL': 'red,bg_white',
            }
        ))
        logger.addHandler(handler)
        logger.propagate = False

    return logger


def setup_package_loggers(level: str = "INFO") -> None:
    """为所有库包配置同一日志级别"""
    for name in PACKAGE_LOGGERS:
        setup_logger(name, level)


def format_rational(value) -> str:
    """
    有理数转字符串，"p" 或 "p/q"（最简形式）

    Args:
        value: QQ 元素或整数

    Returns:
        字符串表示
    """
    numerator = int(value.numerator) if hasattr(value, "numerator") else int(value)
    denominator = int(value.denominator) if hasattr(value, "denominator") else 1
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def format_rows(rows: Iterable[Iterable]) -> List[List[str]]:
    """把有理数矩阵的行转换为字符串行"""
    return [[format_rational(x) for x in row] for row in rows]


def sha256_text(text: str) -> str:
    """计算文本的 SHA-256 十六进制摘要"""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def ensure_dir(path: Path) -> Path:
    """
    确保目录存在，不存在则创建

    Args:
        path: 目录路径

    Returns:
        目录路径
    """
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


class ProgressTracker:
    """进度跟踪器"""

    def __init__(self, total: int, desc: str = "Processing", disable: bool = False):
        """
        初始化进度跟踪器

        Args:
            total: 总数
            desc: 描述
            disable: 是否关闭进度条
        """
        from tqdm import tqdm
        self.pbar = tqdm(total=total, desc=desc, disable=disable)

    def update(self, n: int = 1):
        """更新进度"""
        self.pbar.update(n)

    def close(self):
        """关闭进度条"""
        self.pbar.close()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.close()
