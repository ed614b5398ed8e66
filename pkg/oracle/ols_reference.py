"""Textbook OLS from raw (uncentered) sums, kept apart from regress.fit_line."""

from typing import Iterable, Tuple

from exceptions import FitError


def ols_reference(points: Iterable[Tuple[float, float]]) -> Tuple[float, float, float]:
    """(slope, intercept, r_squared) from n, Σx, Σy, Σx², Σxy, Σy²."""
    pairs = [(float(x), float(y)) for x, y in points]
    n = len(pairs)
    if n < 3:
        raise FitError(f"need at least 3 points, got {n}")
    xs = [x for x, _ in pairs]
    if max(xs) == min(xs):
        raise FitError("degenerate fit: all x values are equal")

    sum_x = sum_y = sum_xx = sum_xy = sum_yy = 0.0
    for x, y in pairs:
        sum_x += x
        sum_y += y
        sum_xx += x * x
        sum_xy += x * y
        sum_yy += y * y

    denominator = n * sum_xx - sum_x * sum_x
    numerator = n * sum_xy - sum_x * sum_y
    slope = numerator / denominator
    intercept = (sum_y - slope * sum_x) / n
    y_spread = n * sum_yy - sum_y * sum_y
    r_squared = 1.0 if y_spread == 0 else numerator * numerator / (denominator * y_spread)
    return slope, intercept, r_squared
