"""Synthetic data schemas."""

from .synthetic_spec import SyntheticSpec

__all__ = ["SyntheticSpec"]
