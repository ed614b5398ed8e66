"""Report assembly, rendering and plot-data output for the analyze command."""

from .pairs import ELASTICITY_PAIRS
from .pipeline import build_report, growth_windows, run_analyze
from .plot_data import emit_plot_data
from .render import REPORT_FILENAME, ReportRenderer, render_report, report_document

__all__ = [
    "ELASTICITY_PAIRS",
    "REPORT_FILENAME",
    "ReportRenderer",
    "build_report",
    "emit_plot_data",
    "growth_windows",
    "render_report",
    "report_document",
    "run_analyze",
]
