"""Analysis config schema."""

from enum import Enum
from pathlib import Path
from typing import List

from pydantic import BaseModel, Field, model_validator

from ..common import YearRange
from ..ingest import SeriesSpec
from ..series import CANONICAL_PHASES, Phase
from .report import FULL_RANGE


class AnalysisKind(str, Enum):
    """Analyses the pipeline can run."""

    GROWTH = "growth"
    ELASTICITY = "elasticity"
    CHAIN = "chain"


class AnalysisConfig(BaseModel):
    """Validated contents of an analysis config file."""

    series: List[SeriesSpec]
    base_year: int = 2000
    analysis_range: YearRange = YearRange(start=2000, end=2019)
    phases: List[Phase] = Field(default_factory=lambda: list(CANONICAL_PHASES))
    chain_phases: List[str] = Field(default_factory=list)
    analyses: List[AnalysisKind] = Field(default_factory=lambda: list(AnalysisKind))
    dataset_dir: Path = Path(".")
    output_dir: Path = Path("output")

    class Config:
        frozen = True

    @model_validator(mode="after")
    def check_config(self) -> "AnalysisConfig":
        if not self.analyses:
            raise ValueError("select at least one analysis")
        if not self.phases:
            raise ValueError("at least one phase is required")
        for earlier, later in zip(self.phases, self.phases[1:]):
            if later.start_year <= earlier.end_year:
                raise ValueError(f"phases {earlier} and {later} overlap or are out of order")
        labels = [phase.label for phase in self.phases]
        if FULL_RANGE in labels:
            raise ValueError(f"phase label {FULL_RANGE!r} is reserved for the whole analysis range")
        if len(set(labels)) != len(labels):
            raise ValueError("phase labels must be unique")
        unknown = [label for label in self.chain_phases if label not in labels]
        if unknown:
            raise ValueError(f"chain phases not among the configured phases: {unknown}")
        if self.base_year not in self.analysis_range:
            raise ValueError(f"base year {self.base_year} outside the analysis range")
        roles = [spec.role for spec in self.series]
        if len(set(roles)) != len(roles):
            raise ValueError("each role may appear only once")
        return self

    @property
    def evaluated_phases(self) -> List[Phase]:
        """Phases the chain is fitted and scored on; first and last by default."""
        if self.chain_phases:
            return [phase for phase in self.phases if phase.label in self.chain_phases]
        if len(self.phases) == 1:
            return list(self.phases)
        return [self.phases[0], self.phases[-1]]
