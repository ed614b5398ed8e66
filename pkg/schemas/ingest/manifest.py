"""Fixture manifest schema."""

from typing import List, Optional

from pydantic import BaseModel, Field

from ..series import SeriesUnit
from .series_spec import SeriesRole


class ManifestEntry(BaseModel):
    """Provenance of one vendored source file."""

    role: SeriesRole
    filename: str
    source_url: str
    retrieved: str
    unit: SeriesUnit
    scale: float = 1.0
    variant: Optional[str] = None
    notes: Optional[str] = None

    class Config:
        frozen = True


class FixtureManifest(BaseModel):
    """All vendored sources of a dataset directory."""

    dataset: str
    description: str = ""
    sources: List[ManifestEntry] = Field(default_factory=list)

    class Config:
        frozen = True
