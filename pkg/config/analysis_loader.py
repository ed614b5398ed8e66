"""Analysis config loading: YAML rendered through Jinja with the environment."""

import hashlib
import os
from pathlib import Path
from typing import Any, Dict, Union

import yaml
from jinja2 import Template, TemplateError
from pydantic import ValidationError

from exceptions import ConfigurationError
from schemas import ALTERNATE_PHASES, CANONICAL_PHASES, AnalysisConfig

from .settings import settings

PHASE_SETS = {"canonical": CANONICAL_PHASES, "alternate": ALTERNATE_PHASES}


def render_config(path: Path) -> Dict[str, Any]:
    """Read the config file, render Jinja placeholders and parse the YAML."""
    if not path.is_file():
        raise ConfigurationError(f"config file not found: {path}")
    with open(path, "r", encoding="utf-8") as file:
        template_content = file.read()

    try:
        rendered_yaml = Template(template_content).render(**os.environ)
        raw = yaml.safe_load(rendered_yaml)
    except (TemplateError, yaml.YAMLError) as exc:
        raise ConfigurationError(f"cannot parse {path.name}: {exc}") from exc

    if not isinstance(raw, dict):
        raise ConfigurationError(f"{path.name} must contain a mapping at the top level")
    return raw


def build_analysis_config(raw: Dict[str, Any], base_dir: Path) -> AnalysisConfig:
    """Resolve defaults and relative paths, then validate."""
    data = dict(raw)
    data.setdefault("base_year", settings.default_base_year)

    phase_set = data.pop("phase_set", "canonical")
    if "phases" not in data:
        if phase_set not in PHASE_SETS:
            raise ConfigurationError(
                f"unknown phase_set {phase_set!r}, expected one of {sorted(PHASE_SETS)}"
            )
        data["phases"] = [phase.model_dump() for phase in PHASE_SETS[phase_set]]

    if "dataset_dir" in data:
        dataset_dir = base_dir / str(data["dataset_dir"])
    else:
        dataset_dir = Path(settings.data_dir).resolve()
    data["dataset_dir"] = dataset_dir
    data["output_dir"] = base_dir / str(data.get("output_dir", "output"))

    series = data.get("series")
    if not isinstance(series, list) or not series:
        raise ConfigurationError("config needs a non-empty 'series' list")
    resolved = []
    for entry in series:
        if not isinstance(entry, dict) or "path" not in entry:
            raise ConfigurationError(f"series entry needs a path: {entry!r}")
        resolved.append({**entry, "path": dataset_dir / str(entry["path"])})
    data["series"] = resolved

    try:
        return AnalysisConfig(**data)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise ConfigurationError(f"invalid config at {location or 'root'}: {first['msg']}") from exc


def load_analysis_config(path: Union[str, Path]) -> AnalysisConfig:
    """Load and validate an analysis config; paths resolve against its directory."""
    path = Path(path)
    return build_analysis_config(render_config(path), path.resolve().parent)


def config_sha256(path: Union[str, Path]) -> str:
    """Digest of the config file bytes, recorded in report provenance."""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
