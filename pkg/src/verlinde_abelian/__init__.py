"""Exact arithmetic for Verlinde bundles on abelian surfaces of Picard rank one."""

__version__ = "0.1.0"
