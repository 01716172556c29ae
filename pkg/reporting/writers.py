"""Serialization of reports to JSON and CSV."""

import csv
import io
import json
from typing import Any, Dict, List, Mapping, Optional

from reporting.digest import canonical_json


def report_to_json(report: Mapping[str, Any]) -> str:
    """Pretty JSON with sorted keys; byte-stable for equal reports."""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True)


def csv_rows(report: Mapping[str, Any]) -> List[Dict[str, Any]]:
    """Tabular view of a report.

    Spectral tables give one row per harmonic, crosschecks one row per cell;
    any other verb becomes key/value rows of its outputs.
    """
    outputs = report.get("outputs", {})
    if report.get("verb") == "spectrum":
        return [
            {k: row[k] for k in ("m", "pole_order", "leading_re", "leading_im", "exact_zero")}
            for row in outputs.get("rows", [])
        ]
    if report.get("verb") == "crosscheck":
        return [{"key": c["key"], "pass": c["pass"]} for c in outputs.get("cells", [])]
    rows = []
    for key in sorted(outputs):
        value = outputs[key]
        if not (value is None or isinstance(value, (str, int, float, bool))):
            value = canonical_json(value)
        rows.append({"key": key, "value": value})
    return rows


def report_to_csv(report: Mapping[str, Any]) -> str:
    rows = csv_rows(report)
    buf = io.StringIO()
    if rows:
        writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buf.getvalue()


def write_report(report: Mapping[str, Any], fmt: str = "json", out: Optional[str] = None) -> str:
    """Render the report and write it to ``out`` when given; returns the text."""
    text = report_to_csv(report) if fmt == "csv" else report_to_json(report) + "\n"
    if out:
        with open(out, "w", newline="", encoding="utf-8") as f:
            f.write(text)
    return text
