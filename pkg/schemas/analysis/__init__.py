"""Analysis configuration and report schemas."""

from .analysis_config import AnalysisConfig, AnalysisKind
from .report import FULL_RANGE, Provenance, Report

__all__ = ["AnalysisConfig", "AnalysisKind", "FULL_RANGE", "Provenance", "Report"]
