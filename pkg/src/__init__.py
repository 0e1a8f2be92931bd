"""
导子塔工作台 - 主模块
"""

from .version import __version__

__author__ = "Lie Tower Team"
