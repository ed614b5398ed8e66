"""Fixture manifest stored next to vendored source files."""

from pathlib import Path
from typing import Optional

import yaml
from pydantic import ValidationError

from exceptions import ConfigurationError
from schemas import FixtureManifest

MANIFEST_FILENAME = "manifest.yml"


def load_manifest(dataset_dir: Path) -> Optional[FixtureManifest]:
    """Manifest of the dataset directory, or None when the directory has none."""
    path = Path(dataset_dir) / MANIFEST_FILENAME
    if not path.is_file():
        return None
    try:
        with open(path, "r", encoding="utf-8") as file:
            raw = yaml.safe_load(file)
        return FixtureManifest(**(raw or {}))
    except (yaml.YAMLError, TypeError, ValidationError) as exc:
        raise ConfigurationError(f"invalid fixture manifest {path}: {exc}") from exc


def write_manifest(manifest: FixtureManifest, dataset_dir: Path) -> Path:
    path = Path(dataset_dir) / MANIFEST_FILENAME
    with open(path, "w", encoding="utf-8") as file:
        yaml.safe_dump(manifest.model_dump(mode="json"), file, sort_keys=False)
    return path
