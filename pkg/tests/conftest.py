"""Shared fixtures: the vendored UK dataset and generated synthetic economies."""

from pathlib import Path

import pytest

from config import load_analysis_config
from oracle import gen_chained_economy, write_dataset
from reporting import build_report

ROOT = Path(__file__).resolve().parents[1]
UK_CONFIG = ROOT / "config" / "analysis.yml"
UK_DATA = ROOT / "data" / "uk"


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Keep the bundled config's Jinja placeholders on their defaults."""
    for name in ("DATA_DIR", "OUTPUT_DIR", "PHASE_SET", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope="session")
def uk_config():
    return load_analysis_config(UK_CONFIG)


@pytest.fixture(scope="session")
def uk_report(uk_config):
    report, _ = build_report(uk_config, UK_CONFIG)
    return report


@pytest.fixture
def uk_data_dir() -> Path:
    return UK_DATA


@pytest.fixture
def synthetic_economy():
    return gen_chained_economy(betas=(0.65, 1.24), lambda_inv=0.03, population_rate=0.006)


@pytest.fixture
def synthetic_config(tmp_path, synthetic_economy) -> Path:
    """Noiseless chained economy written as CSVs plus manifest and analysis.yml."""
    return write_dataset(synthetic_economy, tmp_path / "synthetic")
