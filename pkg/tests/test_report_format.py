import pytest
import simplejson as json

from app.services.errors import ParameterError
from app.services.report_format import render_record, render_reports, render_table
from app.services.verify import verify_cycle_theorem


def test_json_is_byte_identical_without_timing():
    first = render_reports([verify_cycle_theorem(6, 5, 2)], "json", include_timing=False)
    second = render_reports([verify_cycle_theorem(6, 5, 2)], "json", include_timing=False)
    assert first == second
    payload = json.loads(first)[0]
    assert "elapsed" not in payload
    assert payload["bound"] == {"numerator": 9, "denominator": 1, "display": "9"}


def test_tsv_has_a_header_row():
    text = render_reports([verify_cycle_theorem(6, 5, 2)], "tsv")
    header, row = text.splitlines()
    assert header.split("\t")[:4] == ["theorem", "n", "k", "s"]
    assert header.endswith("elapsed")
    assert row.startswith("cycle-theorem\t6\t5\t2\t9\t9\t")


def test_tables_keep_integers_with_gaps():
    rows = [{"name": "a", "floor": 3}, {"name": "b", "floor": None}]
    tsv = render_table(rows, "tsv", ["name", "floor"])
    assert tsv.splitlines() == ["name\tfloor", "a\t3", "b\t"]


def test_record_and_unknown_format():
    assert json.loads(render_record({"x": [1, 2]}, "json")) == {"x": [1, 2]}
    assert render_record({"x": [1, 2]}, "tsv").splitlines()[1] == "1,2"
    with pytest.raises(ParameterError):
        render_table([], "xml")
