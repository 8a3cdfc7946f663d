# app/services/report_format.py

from __future__ import annotations

from typing import Any, Dict, Iterable, List, Sequence

import pandas as pd
import simplejson as json
from pydantic import BaseModel

from app.services.errors import ParameterError

FORMATS = ("json", "tsv", "plain")

REPORT_COLUMNS = [
    "theorem", "n", "k", "s", "bound", "observed_max", "achiever_count",
    "graphs_enumerated", "graphs_in_class", "complete",
]


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ParameterError(f"Unknown output format '{fmt}'. Known: {', '.join(FORMATS)}")


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ignore_nan=True)


def model_payload(model: BaseModel, include_timing: bool = True) -> Dict[str, Any]:
    """
    model_dump in JSON mode; exact rationals keep numerator/denominator and gain
    a "display" string. elapsed is dropped unless include_timing.
    """
    data = model.model_dump(mode="json")
    if "bound" in data and isinstance(data["bound"], dict):
        b = data["bound"]
        b["display"] = str(b["numerator"]) if b["denominator"] == 1 else f"{b['numerator']}/{b['denominator']}"
    if not include_timing:
        data.pop("elapsed", None)
    return data


def render_table(rows: Sequence[Dict[str, Any]], fmt: str, columns: List[str] | None = None) -> str:
    """Rows as a JSON array, a TSV table (header first) or an aligned plain table."""
    _check_format(fmt)
    if fmt == "json":
        return dumps(list(rows)) + "\n"
    # object dtype keeps integer columns with gaps from turning into floats
    df = pd.DataFrame(list(rows), columns=columns, dtype=object)
    if fmt == "tsv":
        return df.to_csv(sep="\t", index=False)
    return df.to_string(index=False) + "\n"


def report_rows(reports: Iterable[BaseModel], include_timing: bool = True) -> List[Dict[str, Any]]:
    rows = []
    for r in reports:
        row = {c: getattr(r, c) for c in REPORT_COLUMNS}
        row["bound"] = str(r.bound)
        if include_timing:
            row["elapsed"] = r.elapsed
        rows.append(row)
    return rows


def render_reports(reports: Sequence[BaseModel], fmt: str, include_timing: bool = True) -> str:
    """
    JSON carries every report field; the tables carry the summary columns.
    With include_timing=False equal runs render byte-identically.
    """
    _check_format(fmt)
    if fmt == "json":
        return dumps([model_payload(r, include_timing) for r in reports]) + "\n"
    columns = REPORT_COLUMNS + (["elapsed"] if include_timing else [])
    return render_table(report_rows(reports, include_timing), fmt, columns)


def render_record(record: Dict[str, Any], fmt: str) -> str:
    """A single result: JSON object, or a one-row table."""
    _check_format(fmt)
    if fmt == "json":
        return dumps(record) + "\n"
    flat = {k: (",".join(map(str, v)) if isinstance(v, (list, tuple)) else v) for k, v in record.items()}
    return render_table([flat], fmt, list(record))
