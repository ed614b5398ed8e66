"""The analyze pipeline: ingest, IE transforms, fits, chain prediction, outputs."""

import hashlib
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from chain import build_chain, predict_observed
from config.analysis_loader import config_sha256
from config.settings import settings
from config.structlog_config import get_logger
from exceptions import with_context
from ie_core import ie_transform
from ingest import assemble_dataset, load_manifest, required_roles
from regress import fit_elasticity, fit_phases
from schemas import (
    FULL_RANGE,
    AnalysisConfig,
    AnalysisKind,
    Dataset,
    ElasticityChain,
    ElasticityFit,
    GrowthFit,
    IESeries,
    Phase,
    Provenance,
    Report,
    SeriesRole,
)

from .pairs import ELASTICITY_PAIRS
from .plot_data import emit_plot_data
from .render import REPORT_FILENAME, render_report

logger = get_logger("analyze")


def growth_windows(config: AnalysisConfig) -> List[Phase]:
    """The full analysis range followed by every configured phase."""
    full = Phase(
        label=FULL_RANGE,
        start_year=config.analysis_range.start,
        end_year=config.analysis_range.end,
    )
    return [full, *config.phases]


def transform_dataset(dataset: Dataset) -> Dict[SeriesRole, IESeries]:
    ie: Dict[SeriesRole, IESeries] = {}
    for role in dataset.roles:
        with with_context(stage="transform", role=role.value):
            ie[role] = ie_transform(dataset[role], dataset.base_year)
    return ie


def fit_growth_windows(
    ie: Dict[SeriesRole, IESeries], windows: List[Phase]
) -> Dict[str, Dict[str, GrowthFit]]:
    growth: Dict[str, Dict[str, GrowthFit]] = {}
    for role, series in ie.items():
        with with_context(stage="growth", role=role.value):
            fits = fit_phases(series, windows)
        growth[role.value] = fits
        logger.info(
            "Growth fitted",
            role=role.value,
            annual_rate=fits[FULL_RANGE].annual_rate,
            r_squared=fits[FULL_RANGE].base.r_squared,
        )
    return growth


def fit_elasticity_pairs(
    ie: Dict[SeriesRole, IESeries], phases: List[Phase]
) -> Dict[str, Dict[str, ElasticityFit]]:
    elasticities: Dict[str, Dict[str, ElasticityFit]] = {}
    for pair, (response, predictor) in ELASTICITY_PAIRS.items():
        fits: Dict[str, ElasticityFit] = {}
        for phase in phases:
            with with_context(stage="elasticity", role=response.value, phase=phase.label):
                fits[phase.label] = fit_elasticity(ie[response], ie[predictor], phase)
            logger.info("Elasticity fitted", pair=pair, phase=phase.label, slope=fits[phase.label].slope)
        elasticities[pair] = fits
    return elasticities


def fit_chains(ie: Dict[SeriesRole, IESeries], phases: List[Phase]) -> Dict[str, ElasticityChain]:
    chains: Dict[str, ElasticityChain] = {}
    for phase in phases:
        with with_context(stage="chain", role=SeriesRole.INVESTMENT.value, phase=phase.label):
            chains[phase.label] = build_chain(
                ie[SeriesRole.INVESTMENT],
                ie[SeriesRole.PRODUCTIVITY],
                ie[SeriesRole.GDP_PER_CAPITA],
                phase,
            )
    return chains


def _config_digest(config: AnalysisConfig, config_path: Optional[Path]) -> str:
    if config_path is not None:
        return config_sha256(config_path)
    return hashlib.sha256(config.model_dump_json().encode("utf-8")).hexdigest()


def build_report(config: AnalysisConfig, config_path: Optional[Path] = None) -> Tuple[Report, Dataset]:
    """Run every configured analysis and collect the results, writing nothing."""
    with with_context(stage="ingest"):
        dataset = assemble_dataset(
            config.series,
            config.analysis_range,
            required=required_roles(config.analyses),
            base_year=config.base_year,
        )
    ie = transform_dataset(dataset)

    evaluated = config.evaluated_phases
    growth = {}
    elasticities = {}
    chains = {}
    prediction = None
    if AnalysisKind.GROWTH in config.analyses:
        growth = fit_growth_windows(ie, growth_windows(config))
    if AnalysisKind.ELASTICITY in config.analyses:
        elasticities = fit_elasticity_pairs(ie, evaluated)
    if AnalysisKind.CHAIN in config.analyses:
        chains = fit_chains(ie, evaluated)
        with with_context(stage="prediction", role=SeriesRole.GDP.value):
            prediction = predict_observed(
                list(chains.values()),
                ie[SeriesRole.INVESTMENT],
                dataset[SeriesRole.POPULATION],
                dataset[SeriesRole.GDP],
                dataset.base_year,
            )

    with with_context(stage="report"):
        manifest = load_manifest(config.dataset_dir)
    provenance = Provenance(
        tool_version=settings.tool_version,
        config_sha256=_config_digest(config, config_path),
        base_year=dataset.base_year,
        analysis_range=config.analysis_range,
        phases=list(config.phases),
        manifest=manifest,
    )
    report = Report(
        provenance=provenance,
        growth=growth,
        elasticities=elasticities,
        chains=chains,
        prediction=prediction,
    )
    return report, dataset


def run_analyze(
    config: AnalysisConfig,
    config_path: Optional[Path] = None,
    output_dir: Optional[Path] = None,
) -> Report:
    """Build the report, then write it and the plot-data files to the output directory."""
    report, dataset = build_report(config, config_path)
    target = Path(output_dir) if output_dir is not None else config.output_dir
    with with_context(stage="report"):
        target.mkdir(parents=True, exist_ok=True)
        report_path = target / REPORT_FILENAME
        report_path.write_text(render_report(report), encoding="utf-8")
        files = emit_plot_data(report, dataset, target)
    logger.info("Report written", path=str(report_path), plot_files=len(files))
    return report
