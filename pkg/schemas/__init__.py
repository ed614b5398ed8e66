"""Pydantic schemas organized by domain."""

# Common schemas
from .common import ErrorResponse, YearRange

# Series schemas
from .series import (
    ALTERNATE_PHASES,
    CANONICAL_PHASES,
    AnnualSeries,
    IESeries,
    Phase,
    RateConstant,
    SeriesUnit,
    rates_agree,
)

# Regression schemas
from .fits import ElasticityFit, GrowthFit, LinearFit

# Chain schemas
from .chain import ElasticityChain, PredictionResult

# Ingest schemas
from .ingest import (
    ROLE_DEFAULT_UNITS,
    Dataset,
    FixtureManifest,
    ManifestEntry,
    SeriesFormat,
    SeriesRole,
    SeriesSpec,
)

# Analysis schemas
from .analysis import FULL_RANGE, AnalysisConfig, AnalysisKind, Provenance, Report

# Synthetic data schemas
from .synthetic import SyntheticSpec

__all__ = [
    # Common
    "ErrorResponse",
    "YearRange",
    # Series
    "AnnualSeries",
    "SeriesUnit",
    "IESeries",
    "Phase",
    "CANONICAL_PHASES",
    "ALTERNATE_PHASES",
    "RateConstant",
    "rates_agree",
    # Fits
    "LinearFit",
    "GrowthFit",
    "ElasticityFit",
    # Chain
    "ElasticityChain",
    "PredictionResult",
    # Ingest
    "Dataset",
    "FixtureManifest",
    "ManifestEntry",
    "ROLE_DEFAULT_UNITS",
    "SeriesFormat",
    "SeriesRole",
    "SeriesSpec",
    # Analysis
    "AnalysisConfig",
    "AnalysisKind",
    "FULL_RANGE",
    "Provenance",
    "Report",
    # Synthetic
    "SyntheticSpec",
]
