"""版本号（报告的来源信息中使用）"""

__version__ = "0.3.0"
