"""analyze: the full pipeline from a config file."""

from pathlib import Path
from typing import Optional

import click

from config import load_analysis_config
from config.settings import settings
from reporting import REPORT_FILENAME, run_analyze


@click.command("analyze")
@click.argument(
    "config_file", required=False, type=click.Path(exists=True, dir_okay=False, path_type=Path)
)
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Write the report and plot data here instead of the config's output_dir.",
)
def analyze(config_file: Optional[Path], output_dir: Optional[Path]) -> None:
    """Run every configured analysis and write the report and plot-data files.

    Without CONFIG_FILE the bundled UK config is used.
    """
    config_file = config_file or settings.default_config_path
    config = load_analysis_config(config_file)
    target = output_dir if output_dir is not None else config.output_dir
    report = run_analyze(config, config_path=config_file, output_dir=target)
    click.echo(f"report: {target / REPORT_FILENAME}")
    if report.prediction is not None:
        click.echo(f"accuracy: {report.prediction.accuracy * 100:.2f}%")
