"""Source-data ingestion: file parsers, normalization and dataset assembly."""

from .dataset import (
    REQUIRED_ROLES,
    assemble_dataset,
    load_series,
    normalize_series,
    parse_series,
    parse_source,
    required_roles,
)
from .emit import emit_generic_year_value
from .manifest import MANIFEST_FILENAME, load_manifest, write_manifest
from .parsers import parse_generic_year_value, parse_oecd_long, parse_ons_timeseries

__all__ = [
    "MANIFEST_FILENAME",
    "REQUIRED_ROLES",
    "assemble_dataset",
    "emit_generic_year_value",
    "load_manifest",
    "load_series",
    "normalize_series",
    "parse_generic_year_value",
    "parse_oecd_long",
    "parse_ons_timeseries",
    "parse_series",
    "parse_source",
    "required_roles",
    "write_manifest",
]
