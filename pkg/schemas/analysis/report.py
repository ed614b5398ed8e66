"""Report schema."""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from ..chain import ElasticityChain, PredictionResult
from ..common import YearRange
from ..fits import ElasticityFit, GrowthFit
from ..ingest import FixtureManifest
from ..series import Phase

FULL_RANGE = "full"


class Provenance(BaseModel):
    """Where the numbers in a report came from."""

    tool_version: str
    config_sha256: str
    base_year: int
    analysis_range: YearRange
    phases: List[Phase]
    manifest: Optional[FixtureManifest] = None


class Report(BaseModel):
    """Every fit and prediction produced by one analyze run."""

    provenance: Provenance
    # role -> window label ("full" or a phase label) -> fit
    growth: Dict[str, Dict[str, GrowthFit]] = Field(default_factory=dict)
    # pair name -> phase label -> fit
    elasticities: Dict[str, Dict[str, ElasticityFit]] = Field(default_factory=dict)
    chains: Dict[str, ElasticityChain] = Field(default_factory=dict)
    prediction: Optional[PredictionResult] = None
