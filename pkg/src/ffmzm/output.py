"""Deterministic CSV/JSON artifact writers with a metadata header block.

Every emitted file carries the run metadata (spec echo, library version,
tolerances, seed).  Floats are written with repr, which round-trips exactly,
and JSON keys are sorted, so identical configurations produce byte-identical
files.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return value.item()
    return value


def format_value(value) -> str:
    if isinstance(value, (float, complex)):
        return repr(value)
    return str(value)


def metadata_header(meta: dict) -> list[str]:
    lines = []
    for key in sorted(meta):
        lines.append(f"# {key}: {json.dumps(_jsonable(meta[key]), sort_keys=True)}")
    return lines


def write_csv(path, fieldnames, rows, meta: dict) -> None:
    """CSV with '#'-prefixed metadata lines before the header row."""
    buf = io.StringIO()
    for line in metadata_header(meta):
        buf.write(line + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fieldnames)
    for row in rows:
        writer.writerow([format_value(row[name]) for name in fieldnames])
    Path(path).write_text(buf.getvalue())


def read_csv(path):
    """Parse back a metadata-headed CSV: returns (meta, list of row dicts)."""
    meta = {}
    rows = []
    header = None
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            key, _, raw = line[1:].partition(":")
            meta[key.strip()] = json.loads(raw.strip())
            continue
        cells = next(csv.reader([line]))
        if header is None:
            header = cells
        else:
            rows.append(dict(zip(header, cells)))
    return meta, rows


def write_json(path, payload: dict, meta: dict) -> None:
    document = {"meta": _jsonable(meta), "result": _jsonable(payload)}
    Path(path).write_text(json.dumps(document, sort_keys=True, indent=2) + "\n")
