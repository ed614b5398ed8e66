"""Ingestion schemas."""

from .dataset import Dataset
from .manifest import FixtureManifest, ManifestEntry
from .series_spec import ROLE_DEFAULT_UNITS, SeriesFormat, SeriesRole, SeriesSpec

__all__ = [
    "Dataset",
    "FixtureManifest",
    "ManifestEntry",
    "ROLE_DEFAULT_UNITS",
    "SeriesFormat",
    "SeriesRole",
    "SeriesSpec",
]
