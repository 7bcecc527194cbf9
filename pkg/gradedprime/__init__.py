"""Graded prime ideals of finite graded near-rings"""

__version__ = "0.1.0"
