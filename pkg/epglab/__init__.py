"""
epglab - enhanced power graphs of finite groups, exact invariants and verification
"""

__version__ = "0.1.0"
