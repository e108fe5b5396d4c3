import json
from fractions import Fraction

import pytest

from soclelab.poly import NEG_INF, POS_INF
from soclelab.report import (
    CSV_HEADERS,
    fmt,
    powers_chart_svg,
    to_csv,
    to_json,
)
from soclelab.scans import ScanRow


def make_rows():
    return [
        ScanRow(t=1, j=0, lc_end=1, socle_beg=1, elapsed_ms=3),
        ScanRow(t=2, j=0, lc_end=3, socle_beg=3, elapsed_ms=4),
        ScanRow(t=2, j=1, lc_end=NEG_INF, socle_beg=POS_INF, elapsed_ms=0),
    ]


def test_fmt_sentinels_and_fractions():
    assert fmt(POS_INF) == "inf"
    assert fmt(NEG_INF) == "-inf"
    assert fmt(Fraction(-3, 2)) == "-3/2"
    assert fmt(Fraction(4, 2)) == "2"
    assert fmt(True) == "true"
    assert fmt(None) == ""
    assert fmt((1, 2, 3)) == "1;2;3"


def test_fmt_refuses_floats():
    with pytest.raises(TypeError):
        fmt(0.5)


def test_csv_has_fixed_header_and_row_count():
    text = to_csv("powers", make_rows())
    lines = text.strip().split("\n")
    assert lines[0] == "t,j,lc_end,socle_beg,oracle_checked,elapsed_ms"
    assert len(lines) == 4
    assert lines[3].startswith("2,1,-inf,inf,")


def test_csv_summary_lines_are_comments():
    text = to_csv("powers", make_rows(), summary_lines=["measured c_0 = 1"])
    assert text.strip().split("\n")[-1] == "# measured c_0 = 1"


def test_json_round_trip():
    text = to_json("powers", make_rows(), summary={"witnesses_measured": {"c_0": "1"}})
    payload = json.loads(text)
    assert payload["schema"] == "socle-lab/1"
    assert payload["kind"] == "powers"
    assert payload["rows"][2]["lc_end"] == "-inf"
    assert payload["rows"][2]["socle_beg"] == "inf"
    assert payload["summary"]["witnesses_measured"]["c_0"] == "1"
    again = json.loads(to_json("powers", make_rows(), summary=payload["summary"]))
    assert again == payload


def test_svg_chart_is_wellformed_markup():
    svg = powers_chart_svg(make_rows())
    assert svg.startswith("<svg")
    assert svg.rstrip().endswith("</svg>")
    assert "polyline" in svg
    assert "j=0" in svg


def test_svg_chart_handles_all_sentinel_rows():
    rows = [ScanRow(t=1, j=0, lc_end=NEG_INF, socle_beg=POS_INF)]
    svg = powers_chart_svg(rows)
    assert "no finite points" in svg


def test_every_kind_has_header():
    for kind in ("powers", "criterion", "lemma37", "gauge", "socle", "betti", "gb", "fedder"):
        assert kind in CSV_HEADERS
