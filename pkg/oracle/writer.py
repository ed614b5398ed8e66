"""Write a generated dataset as generic CSVs with a manifest and an analysis config."""

from pathlib import Path
from typing import Iterable, Optional

import yaml

from ie_core import growth_rate_series
from ingest import emit_generic_year_value, write_manifest
from schemas import (
    ROLE_DEFAULT_UNITS,
    AnalysisKind,
    Dataset,
    FixtureManifest,
    ManifestEntry,
    SeriesUnit,
)

CONFIG_FILENAME = "analysis.yml"


def write_dataset(
    dataset: Dataset,
    directory: Path,
    analyses: Optional[Iterable[AnalysisKind]] = None,
    output_dir: str = "output",
) -> Path:
    """Files for `analyze`; returns the path of the written config.

    Roles published as growth rates (GDP, productivity) are written as
    year-on-year percent changes when the base year opens the coverage, so
    the analysis cumulates them back; every other role is written as an index.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    as_growth_rates = dataset.base_year == dataset.coverage.start
    entries = []
    series_specs = []
    for role, series in dataset.series.items():
        filename = f"{role.value}.csv"
        unit = SeriesUnit.INDEX
        if as_growth_rates and ROLE_DEFAULT_UNITS[role] is SeriesUnit.PERCENT_CHANGE:
            series = growth_rate_series(series)
            unit = SeriesUnit.PERCENT_CHANGE
        (directory / filename).write_text(emit_generic_year_value(series), encoding="utf-8")
        entries.append(
            ManifestEntry(
                role=role,
                filename=filename,
                source_url="synthetic:gen_chained_economy",
                retrieved="generated",
                unit=unit,
            )
        )
        series_specs.append(
            {
                "id": role.value,
                "role": role.value,
                "path": filename,
                "format": "generic_year_value",
                "unit": unit.value,
            }
        )
    write_manifest(
        FixtureManifest(dataset="synthetic", description="Generated chained economy", sources=entries),
        directory,
    )

    config = {
        "base_year": dataset.base_year,
        "analysis_range": {"start": dataset.coverage.start, "end": dataset.coverage.end},
        "dataset_dir": ".",
        "output_dir": output_dir,
        "analyses": [kind.value for kind in (analyses or list(AnalysisKind))],
        "series": series_specs,
    }
    config_path = directory / CONFIG_FILENAME
    with open(config_path, "w", encoding="utf-8") as file:
        yaml.safe_dump(config, file, sort_keys=False)
    return config_path
