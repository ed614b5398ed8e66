"""Ordinary least-squares line fitting."""

import math
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from exceptions import DomainError, FitError
from schemas import LinearFit, Phase

MIN_FIT_POINTS = 3

Points = Union[Iterable[Tuple[float, float]], np.ndarray]


def _as_array(points: Points) -> np.ndarray:
    data = np.asarray(points if isinstance(points, np.ndarray) else list(points), dtype=float)
    if data.size == 0:
        return data.reshape(0, 2)
    if data.ndim != 2 or data.shape[1] != 2:
        raise FitError(f"points must be (x, y) pairs, got shape {data.shape}")
    return data


def _clip_unit(value: float) -> float:
    return min(max(value, 0.0), 1.0)


def fit_line(
    points: Points,
    through_origin: bool = False,
    phase: Optional[Phase] = None,
) -> LinearFit:
    """Least-squares line through (x, y) points.

    Sums are taken over deviations from the means. With through_origin the
    intercept is fixed at 0 and R^2 is the uncentered coefficient.
    """
    data = _as_array(points)
    n = len(data)
    if n < MIN_FIT_POINTS:
        raise FitError(f"need at least {MIN_FIT_POINTS} points for a line fit, got {n}")
    if not np.all(np.isfinite(data)):
        raise DomainError("fit points must be finite")
    x, y = data[:, 0], data[:, 1]
    if through_origin:
        return _fit_through_origin(x, y, phase)
    if np.ptp(x) == 0:
        raise FitError("degenerate fit: all x values are equal")

    if np.ptp(y) == 0:
        # Constant response: exact horizontal line
        return LinearFit(slope=0.0, intercept=float(y[0]), r_squared=1.0, n=n, phase=phase)

    x_mean, y_mean = x.mean(), y.mean()
    dx, dy = x - x_mean, y - y_mean
    sxx = float(dx @ dx)
    slope = float(dx @ dy) / sxx
    intercept = float(y_mean - slope * x_mean)
    residuals = y - (intercept + slope * x)
    ss_res = float(residuals @ residuals)
    ss_tot = float(dy @ dy)
    slope_se = math.sqrt(ss_res / (n - 2) / sxx) if n > 2 else 0.0
    return LinearFit(
        slope=slope,
        intercept=intercept,
        r_squared=_clip_unit(1.0 - ss_res / ss_tot),
        n=n,
        slope_se=slope_se,
        phase=phase,
    )


def _fit_through_origin(x: np.ndarray, y: np.ndarray, phase: Optional[Phase]) -> LinearFit:
    n = len(x)
    sxx = float(x @ x)
    if sxx == 0:
        raise FitError("degenerate fit: all x values are zero")
    slope = float(x @ y) / sxx
    residuals = y - slope * x
    ss_res = float(residuals @ residuals)
    ss_tot = float(y @ y)
    r_squared = 1.0 if ss_tot == 0 else _clip_unit(1.0 - ss_res / ss_tot)
    return LinearFit(
        slope=slope,
        intercept=0.0,
        r_squared=r_squared,
        n=n,
        slope_se=math.sqrt(ss_res / (n - 1) / sxx),
        through_origin=True,
        phase=phase,
    )


def fit_xy(x: Sequence[float], y: Sequence[float], **kwargs) -> LinearFit:
    """fit_line over parallel x and y sequences."""
    if len(x) != len(y):
        raise FitError(f"x and y lengths differ: {len(x)} != {len(y)}")
    return fit_line(np.column_stack([np.asarray(x, float), np.asarray(y, float)]), **kwargs)
