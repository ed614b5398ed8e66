import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import FitError
from ie_core import ie_transform, make_ie_series, make_series
from oracle import gen_exponential, ols_reference
from regress import fit_elasticity, fit_growth, fit_line, fit_phases, fit_xy
from schemas import CANONICAL_PHASES, Phase, SeriesUnit, SyntheticSpec

FULL = Phase(label="full", start_year=2000, end_year=2019)
P1 = CANONICAL_PHASES[0]

coordinates = st.integers(min_value=-100_000, max_value=100_000).map(lambda value: value / 100)
point_sets = st.lists(st.tuples(coordinates, coordinates), min_size=3, max_size=50).filter(
    lambda points: np.var([x for x, _ in points]) >= 1.0 and np.var([y for _, y in points]) >= 1.0
)


def _ie(name, points, base_year=2000):
    return make_ie_series(name, base_year, points)


class TestFitLine:
    def test_exact_line(self):
        fit = fit_line([(0, 0), (1, 1), (2, 2)])
        assert fit.slope == pytest.approx(1.0)
        assert fit.intercept == pytest.approx(0.0)
        assert fit.r_squared == pytest.approx(1.0, abs=1e-12)
        assert fit.n == 3

    def test_constant_response(self):
        fit = fit_line([(0, 1), (1, 1), (2, 1)])
        assert fit.slope == 0.0
        assert fit.intercept == 1.0
        assert fit.r_squared == 1.0

    def test_too_few_points(self):
        with pytest.raises(FitError):
            fit_line([(0, 0), (1, 1)])

    def test_degenerate_x(self):
        with pytest.raises(FitError):
            fit_line([(1, 0), (1, 1), (1, 2)])

    def test_through_origin(self):
        fit = fit_line([(1, 2), (2, 4), (3, 6)], through_origin=True)
        assert fit.slope == pytest.approx(2.0)
        assert fit.intercept == 0.0
        assert fit.through_origin
        assert fit.r_squared == pytest.approx(1.0)

    def test_slope_standard_error(self):
        fit = fit_line([(0, 0.0), (1, 1.0), (2, 1.0), (3, 3.0)])
        # residual variance 0.7 / 2 over sxx 5
        assert fit.slope_se == pytest.approx(np.sqrt(0.35 / 5.0))

    def test_xy_lengths_must_match(self):
        with pytest.raises(FitError):
            fit_xy([1.0, 2.0, 3.0], [1.0, 2.0])

    @settings(max_examples=1000, deadline=None)
    @given(point_sets)
    def test_matches_naive_sums(self, points):
        fit = fit_line(points)
        slope, intercept, r_squared = ols_reference(points)
        assert fit.slope == pytest.approx(slope, rel=1e-9, abs=1e-9)
        # coordinates reach 1e3, so 1e-6 absolute is 1e-9 of the data scale
        assert fit.intercept == pytest.approx(intercept, rel=1e-9, abs=1e-6)
        assert fit.r_squared == pytest.approx(r_squared, abs=1e-9)

    @settings(deadline=None)
    @given(
        point_sets,
        st.floats(min_value=-10, max_value=10).filter(lambda a: abs(a) > 1e-3),
        st.floats(min_value=-100, max_value=100),
    )
    def test_affine_equivariance(self, points, a, b):
        fit = fit_line(points)
        moved = fit_line([(x, a * y + b) for x, y in points])
        assert moved.slope == pytest.approx(a * fit.slope, rel=1e-9, abs=1e-9)
        assert moved.intercept == pytest.approx(a * fit.intercept + b, rel=1e-9, abs=1e-6)

    @given(point_sets)
    def test_r_squared_bounds(self, points):
        fit = fit_line(points)
        assert -1e-12 <= fit.r_squared <= 1 + 1e-12


class TestFitGrowth:
    @pytest.mark.parametrize("lam", [-0.05, 0.0, 0.01, 0.021, 0.1])
    def test_recovers_planted_lambda(self, lam):
        series = gen_exponential(SyntheticSpec(lambda_=lam))
        fit = fit_growth(ie_transform(series, 2000), FULL)
        assert fit.lambda_ == pytest.approx(lam, abs=1e-10)
        assert fit.annual_rate == pytest.approx(np.expm1(lam), abs=1e-10)
        assert fit.base.r_squared == pytest.approx(1.0, abs=1e-10)
        assert fit.base.n == 20

    def test_constant_series(self):
        series = make_series("flat", SeriesUnit.INDEX, {year: 7.0 for year in range(2000, 2010)})
        fit = fit_growth(ie_transform(series, 2000), FULL)
        assert fit.lambda_ == 0.0
        assert fit.annual_rate == 0.0

    def test_restricted_to_phase(self):
        points = {year: 0.02 * (year - 2000) for year in range(2000, 2008)}
        points.update({year: 0.14 + 0.01 * (year - 2007) for year in range(2008, 2020)})
        fit = fit_growth(_ie("kinked", points), P1)
        assert fit.lambda_ == pytest.approx(0.02, abs=1e-12)
        assert fit.base.n == 8
        assert fit.base.phase == P1

    def test_short_window(self):
        ie = _ie("short", {2000: 0.0, 2001: 0.1, 2002: 0.2})
        with pytest.raises(FitError):
            fit_growth(ie, Phase(label="P", start_year=2001, end_year=2002))

    def test_fit_phases(self):
        ie = _ie("line", {year: 0.03 * (year - 2000) for year in range(2000, 2020)})
        fits = fit_phases(ie, CANONICAL_PHASES)
        assert list(fits) == ["P1", "P2", "P3"]
        assert all(fit.lambda_ == pytest.approx(0.03) for fit in fits.values())

    def test_fit_phases_names_failing_phase(self):
        ie = _ie("short", {year: 0.03 * (year - 2000) for year in range(2000, 2010)})
        with pytest.raises(FitError) as error:
            fit_phases(ie, CANONICAL_PHASES)
        assert error.value.context["phase"] == "P2"

    def test_steep_growth_validates(self):
        ie = _ie("steep", {year: 10.0 * (year - 2000) for year in range(2000, 2010)})
        fit = fit_growth(ie, FULL)
        assert fit.lambda_ == pytest.approx(10.0, rel=1e-12)
        assert fit.annual_rate == pytest.approx(np.expm1(10.0), rel=1e-12)


class TestFitElasticity:
    def _predictor(self):
        return _ie("x", {year: 0.021 * (year - 2000) + 0.003 * ((year * 7) % 5) for year in range(2000, 2020)})

    def test_self_regression(self):
        predictor = self._predictor()
        fit = fit_elasticity(predictor, predictor, P1)
        assert fit.slope == pytest.approx(1.0, abs=1e-12)
        assert fit.intercept == pytest.approx(0.0, abs=1e-12)
        assert fit.base.r_squared == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("beta", [0.65, 1.24, 1.51, 1.05, 1.14, 0.54])
    def test_planted_slopes(self, beta):
        predictor = self._predictor()
        response = _ie("y", {year: beta * predictor.point(year) for year in predictor.years})
        for phase in CANONICAL_PHASES:
            fit = fit_elasticity(response, predictor, phase)
            assert fit.slope == pytest.approx(beta, abs=1e-10)
            assert fit.base.r_squared == pytest.approx(1.0, abs=1e-12)
            assert fit.response_name == "y"
            assert fit.predictor_name == "x"

    def test_pairwise_complete_years(self):
        predictor = self._predictor()
        response = _ie(
            "y", {year: 2.0 * predictor.point(year) for year in predictor.years if year != 2003}
        )
        fit = fit_elasticity(response, predictor, P1)
        assert fit.base.n == 7

    def test_slope_product_is_r_squared(self):
        rng = np.random.default_rng(11)
        x = {year: float(value) for year, value in zip(range(2000, 2020), rng.normal(0, 1, 20))}
        y = {year: 0.8 * x[year] + float(noise) for year, noise in zip(range(2000, 2020), rng.normal(0, 0.5, 20))}
        x[2000] = y[2000] = 0.0
        forward = fit_elasticity(_ie("y", y), _ie("x", x), FULL)
        backward = fit_elasticity(_ie("x", x), _ie("y", y), FULL)
        assert forward.slope * backward.slope == pytest.approx(forward.base.r_squared, abs=1e-9)
        assert forward.base.r_squared == pytest.approx(backward.base.r_squared, abs=1e-12)

    def test_zero_variance_predictor(self):
        flat = _ie("flat", {year: 0.0 for year in range(2000, 2010)})
        moving = _ie("moving", {year: 0.01 * (year - 2000) for year in range(2000, 2010)})
        with pytest.raises(FitError):
            fit_elasticity(moving, flat, P1)

    def test_insufficient_overlap(self):
        x = _ie("x", {2000: 0.0, 2001: 0.1, 2002: 0.2})
        y = _ie("y", {2000: 0.0, 2005: 0.1, 2006: 0.2}, base_year=2000)
        with pytest.raises(FitError):
            fit_elasticity(y, x, P1)
