"""Render experiment reports as JSON, aligned tables or CSV."""

from __future__ import annotations

import csv
import io
import json

CSV_HEADER = ["degree", "dim_B", "dim_I", "h"]


def emit_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def parse_json_report(text: str) -> dict:
    return json.loads(text)


def _pertinency(report: dict):
    entry = report.get("results", {}).get("pertinency")
    if entry and entry["status"] == "ok":
        return entry["result"]
    return None


def classification_line(p: dict) -> str:
    if p["classification"] == "certified_finite":
        return f"certified_finite at degree {p['zero_degree']}"
    if p["classification"] == "estimated":
        return f"estimated polynomial({p['growth_m']})"
    return "inconclusive"


def _degree_rows(p: dict):
    return [(d, b, i, h) for d, (b, i, h) in
            enumerate(zip(p["dims_B"], p["dims_I"], p["hilbert_quotient"]))]


def _aligned(header, rows) -> list[str]:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(row[c]) for row in cells) for c in range(len(header))]
    return ["  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() for row in cells]


def _short(value, nested=False) -> str:
    if isinstance(value, dict):
        body = ", ".join(f"{k}={_short(v, True)}" for k, v in value.items())
        return "{" + body + "}" if nested else body
    if isinstance(value, list):
        return "[" + ", ".join(_short(v, True) for v in value) + "]"
    return str(value)


def emit_table(report: dict) -> str:
    cfg = report["config"]
    lines = [f"pertinency {report['version']}: n={cfg['ring']['n']} q={cfg['ring']['q']} "
             f"field={cfg['field']['kind']} group={cfg['group']['kind']} smash={cfg['smash']['kind']}"]
    p = _pertinency(report)
    if p is not None:
        lines.append("")
        lines.extend(_aligned(CSV_HEADER, _degree_rows(p)))
        lines.append("")
        lines.append(f"classification: {classification_line(p)}")
        value = "unknown" if p["pertinency"] is None else p["pertinency"]
        lines.append(f"pertinency: {value} ({p['pertinency_status']})")
        for a in p["annotations"]:
            lines.append(f"annotation: {a}")
    for task, entry in report["results"].items():
        if task == "pertinency" and entry["status"] == "ok":
            continue
        if entry["status"] != "ok":
            lines.append(f"{task}: ERROR {entry['error']}")
            continue
        lines.append(f"{task}:")
        for key, value in entry["result"].items():
            lines.append(f"  {key}: {_short(value)}")
    if report.get("timings_ms"):
        lines.append("timings_ms: " + _short(report["timings_ms"]))
    return "\n".join(lines) + "\n"


def emit_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    p = _pertinency(report)
    if p is not None:
        writer.writerows(_degree_rows(p))
    return buf.getvalue()


FORMATS = {"json": emit_json, "table": emit_table, "csv": emit_csv}


def emit_report(report: dict, fmt: str = "json") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {', '.join(FORMATS)}")
    return FORMATS[fmt](report)
