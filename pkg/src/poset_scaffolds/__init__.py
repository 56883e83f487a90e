"""
poset-scaffolds - Minimal initial and final functors of finite posets and grid intervals
"""

__version__ = "0.1.0"
