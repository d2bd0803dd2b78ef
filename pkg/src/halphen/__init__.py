"""Exact construction and verification of Halphen cubics over Q(eps, cbrt 2)."""

__version__ = "0.1.0"
