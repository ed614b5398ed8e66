import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import (
    AnalysisException,
    DomainError,
    DuplicateYear,
    EmptySeries,
    ParseError,
    SchemaError,
)
from ingest import (
    emit_generic_year_value,
    parse_generic_year_value,
    parse_oecd_long,
    parse_ons_timeseries,
)
from schemas import AnnualSeries, SeriesUnit


class TestGenericYearValue:
    def test_header_detected(self):
        series = parse_generic_year_value("year,value\n2000,100\n2001,102.1")
        assert series.observations == {2000: 100.0, 2001: 102.1}

    def test_without_header_and_crlf(self):
        series = parse_generic_year_value("2000,1.5\r\n2001,1.6\r\n")
        assert series.observations == {2000: 1.5, 2001: 1.6}

    def test_bytes_with_bom(self):
        series = parse_generic_year_value("\ufeffyear,value\n2000,3\n".encode("utf-8"))
        assert series.observations == {2000: 3.0}

    def test_duplicate_year_names_line(self):
        with pytest.raises(DuplicateYear) as error:
            parse_generic_year_value("2000,1\n2000,2")
        assert error.value.line == 2
        assert error.value.exit_code == 2

    def test_non_numeric_value(self):
        with pytest.raises(ParseError) as error:
            parse_generic_year_value("2000,abc")
        assert (error.value.line, error.value.column) == (1, 2)

    def test_bad_year(self):
        with pytest.raises(ParseError) as error:
            parse_generic_year_value("year,value\n2000,1\n20x1,2")
        assert (error.value.line, error.value.column) == (3, 1)

    def test_blank_lines_keep_line_numbers(self):
        with pytest.raises(ParseError) as error:
            parse_generic_year_value("year,value\n\n2000,1\n2001,oops\n")
        assert error.value.line == 4

    def test_empty_input(self):
        with pytest.raises(EmptySeries):
            parse_generic_year_value("")
        with pytest.raises(EmptySeries):
            parse_generic_year_value("year,value\n")

    def test_invalid_utf8(self):
        with pytest.raises(ParseError) as error:
            parse_generic_year_value(b"2000,1\n2001,\xff\n")
        assert error.value.line == 2

    def test_non_positive_level_names_line(self):
        with pytest.raises(DomainError) as error:
            parse_generic_year_value("year,value\n2000,1\n2001,-5\n")
        assert error.value.context == {"line": 3, "column": 2}
        assert error.value.exit_code == 2

    def test_percent_change_at_minus_100(self):
        with pytest.raises(DomainError) as error:
            parse_generic_year_value("2000,1.5\n2001,-100\n", unit=SeriesUnit.PERCENT_CHANGE)
        assert error.value.context == {"line": 2, "column": 2}

    def test_thousands_separator(self):
        series = parse_generic_year_value('year,value\n2000,"221,847"\n')
        assert series.value(2000) == 221847.0

    def test_round_trip(self):
        original = parse_generic_year_value("year,value\n1999,0.1\n2000,0.30000000000000004\n2001,12345.678\n")
        again = parse_generic_year_value(emit_generic_year_value(original))
        assert again.observations == original.observations

    def test_unit_is_applied(self):
        series = parse_generic_year_value("2000,-2.5\n", unit=SeriesUnit.PERCENT_CHANGE)
        assert series.unit is SeriesUnit.PERCENT_CHANGE


ONS_EXPORT = (
    '"Title","Output per hour worked"\n'
    '"CDID","LZVD"\n'
    '"Source dataset ID","PRDY"\n'
    '"Release date","07-07-2023"\n'
    '"2000","2.9"\n'
    '"2001",""\n'
    '"2002","1.9"\n'
    '"2000 Q1","0.5"\n'
    '"2000 JAN","0.1"\n'
)


class TestOnsTimeseries:
    def test_annual_rows_only(self):
        series = parse_ons_timeseries(ONS_EXPORT)
        assert series.observations == {2000: 2.9, 2002: 1.9}
        assert series.metadata["cdid"] == "LZVD"
        assert series.metadata["title"] == "Output per hour worked"

    def test_unquoted_rows(self):
        series = parse_ons_timeseries("Title,Output per hour\n2000,2.9\n2000 Q1,0.5\n")
        assert series.observations == {2000: 2.9}

    def test_only_quarterly_rows(self):
        with pytest.raises(EmptySeries):
            parse_ons_timeseries('"Title","x"\n"2000 Q1","0.5"\n"2000 Q2","0.6"\n')

    def test_malformed_number(self):
        with pytest.raises(ParseError) as error:
            parse_ons_timeseries('"Title","x"\n"2000","n/a"\n')
        assert error.value.line == 2

    def test_zero_level_names_line(self):
        with pytest.raises(DomainError) as error:
            parse_ons_timeseries('"Title","x"\n"2000","4"\n"2001","0"\n')
        assert error.value.context == {"line": 3, "column": 2}

    def test_duplicate_year(self):
        with pytest.raises(DuplicateYear):
            parse_ons_timeseries('"2000","1"\n"2000","2"\n')

    def test_vendored_productivity(self, uk_data_dir):
        series = parse_ons_timeseries(
            (uk_data_dir / "productivity_lzvd.csv").read_bytes(), unit=SeriesUnit.PERCENT_CHANGE
        )
        assert [year for year in series.years if 2000 <= year <= 2019] == list(range(2000, 2020))
        assert 2020 not in series

    @given(
        st.dictionaries(
            st.integers(min_value=1950, max_value=2030),
            st.floats(min_value=-50, max_value=50, allow_nan=False).map(lambda value: round(value, 3)),
            min_size=1,
            max_size=15,
        ),
        st.sampled_from(["Q1", "Q2", "Q3", "Q4", "JAN", "JUL", "DEC"]),
    )
    def test_sub_annual_rows_never_leak(self, annual, period):
        lines = ['"Title","generated"', '"CDID","TEST"']
        for year, value in annual.items():
            lines.append(f'"{year}","{value}"')
            lines.append(f'"{year} {period}","999"')
        series = parse_ons_timeseries("\n".join(lines) + "\n", unit=SeriesUnit.PERCENT_CHANGE)
        assert series.observations == dict(sorted(annual.items()))


class TestOecdLong:
    def test_filters_country(self):
        series = parse_oecd_long("LOCATION,TIME,VALUE\nGBR,2000,26000\nFRA,2000,25000", "GBR")
        assert series.observations == {2000: 26000.0}
        assert series.metadata == {"country": "GBR"}

    def test_case_insensitive_columns(self):
        series = parse_oecd_long("Country,Year,Value\nGBR,2001,1\nGBR,2000,2\n", "GBR")
        assert series.observations == {2000: 2.0, 2001: 1.0}

    def test_sdmx_columns(self):
        series = parse_oecd_long("REF_AREA,TIME_PERIOD,OBS_VALUE\nGBR,2000,5\n", "GBR")
        assert series.value(2000) == 5.0

    def test_unknown_country(self):
        with pytest.raises(EmptySeries):
            parse_oecd_long("LOCATION,TIME,VALUE\nGBR,2000,26000\n", "XXX")

    def test_missing_column(self):
        with pytest.raises(SchemaError) as error:
            parse_oecd_long("LOCATION,TIME\nGBR,2000\n", "GBR")
        assert error.value.missing == ["VALUE/OBS_VALUE"]

    def test_duplicate_country_year(self):
        with pytest.raises(DuplicateYear) as error:
            parse_oecd_long("LOCATION,TIME,VALUE\nGBR,2000,1\nGBR,2000,2\n", "GBR")
        assert error.value.line == 3
        assert "GBR, 2000" in error.value.message

    def test_negative_level_names_line_and_column(self):
        with pytest.raises(DomainError) as error:
            parse_oecd_long("LOCATION,TIME,VALUE\nGBR,2000,3\nGBR,2001,-3\n", "GBR")
        assert error.value.context == {"line": 3, "column": 3}

    def test_extra_filters(self):
        text = "LOCATION,SERIES,TIME,VALUE\nGBR,CPNCU,2000,30\nGBR,CPUSDPPP,2000,44\n"
        assert parse_oecd_long(text, "GBR", filters={"SERIES": "CPUSDPPP"}).value(2000) == 44.0
        with pytest.raises(DuplicateYear):
            parse_oecd_long(text, "GBR")

    def test_vendored_wages(self, uk_data_dir):
        text = (uk_data_dir / "wages_oecd.csv").read_bytes()
        series = parse_oecd_long(text, "GBR", filters={"SERIES": "CPUSDPPP"})
        assert series.years == list(range(2000, 2020))


@settings(max_examples=300)
@given(st.text(alphabet=st.sampled_from(list('0123456789,.-"\n\r abcQ\ufeff')), max_size=200))
def test_parsing_is_total(text):
    for parse in (parse_generic_year_value, parse_ons_timeseries):
        try:
            result = parse(text)
        except AnalysisException as error:
            assert error.exit_code == 2
        else:
            assert isinstance(result, AnnualSeries)
    try:
        parse_oecd_long(text, "GBR")
    except AnalysisException as error:
        assert error.exit_code == 2
