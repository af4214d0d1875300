"""Matrix JSON parsing and report serialization.

Matrices travel as ``{"rows": n, "cols": n, "re": [[...]], "im": [[...]]}``
with ``im`` optional (zeros); blocks as ``{"t11": ..., "t12": ..., "t21": ...,
"t22": ...}``. Reports serialize to JSON (full precision, sorted keys, so a
fixed configuration yields byte-identical output) and to CSV with one row
per bound record: name, anchor, kind, value, dw, gap, satisfied.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .bounds import BoundRecord, VerificationReport
from .errors import ParseError

CSV_COLUMNS = ("name", "anchor", "kind", "value", "dw", "gap", "satisfied")


def matrix_to_dict(arr: np.ndarray) -> dict:
    """Encode a complex matrix in the wire format."""
    arr = np.asarray(arr, dtype=complex)
    out = {
        "rows": int(arr.shape[0]),
        "cols": int(arr.shape[1]),
        "re": np.real(arr).tolist(),
    }
    if np.any(arr.imag):
        out["im"] = np.imag(arr).tolist()
    return out


def matrix_from_dict(data: dict) -> np.ndarray:
    """Decode the wire format into a complex matrix; raises :class:`ParseError`."""
    if not isinstance(data, dict):
        raise ParseError(f"expected a matrix object, got {type(data).__name__}")
    try:
        rows = int(data["rows"])
        cols = int(data["cols"])
        re_part = np.asarray(data["re"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed matrix object: {exc}") from exc
    if re_part.shape != (rows, cols):
        raise ParseError(f"re block has shape {re_part.shape}, expected ({rows}, {cols})")
    if "im" in data and data["im"] is not None:
        try:
            im_part = np.asarray(data["im"], dtype=float)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"malformed im block: {exc}") from exc
        if im_part.shape != (rows, cols):
            raise ParseError(f"im block has shape {im_part.shape}, expected ({rows}, {cols})")
    else:
        im_part = np.zeros((rows, cols))
    arr = re_part + 1j * im_part
    if not np.all(np.isfinite(arr.view(float))):
        raise ParseError("matrix has non-finite entries")
    return arr


def load_matrix(source) -> np.ndarray:
    """Load a matrix from a path, JSON string, or already-decoded dict."""
    if isinstance(source, dict):
        return matrix_from_dict(source)
    text = Path(source).read_text() if not str(source).lstrip().startswith("{") else str(source)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return matrix_from_dict(data)


def load_block(source) -> dict[str, np.ndarray]:
    """Load a 2x2 block specification {"t11": ..., ..., "t22": ...}."""
    if isinstance(source, dict):
        data = source
    else:
        try:
            data = json.loads(Path(source).read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    out = {}
    for key in ("t11", "t12", "t21", "t22"):
        if key not in data:
            raise ParseError(f"block object is missing {key!r}")
        out[key] = matrix_from_dict(data[key])
    return out


def record_to_dict(rec: BoundRecord) -> dict:
    return {
        "name": rec.name,
        "anchor": rec.anchor,
        "kind": rec.kind,
        "value": _json_float(rec.value),
        "dw": _json_float(rec.reference_dw),
        "gap": _json_float(rec.gap),
        "satisfied": rec.satisfied,
        "status": rec.status,
        "params": _jsonable(rec.params),
    }


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "instance": report.instance,
        "dw_multistart": _json_float(report.dw_multistart),
        "dw_oracle": _json_float(report.dw_oracle),
        "reference_dw": _json_float(report.reference_dw),
        "tol": report.tol,
        "seed": report.seed,
        "overall_pass": report.overall_pass,
        "records": [record_to_dict(r) for r in report.records],
    }


def report_csv(report: VerificationReport) -> str:
    """CSV rendering: one row per record."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in report.records:
        writer.writerow([
            rec.name,
            rec.anchor,
            rec.kind,
            _csv_float(rec.value),
            _csv_float(rec.reference_dw),
            _csv_float(rec.gap),
            "" if rec.satisfied is None else str(bool(rec.satisfied)).lower(),
        ])
    return buf.getvalue()


def dump_json(obj, path=None) -> str:
    """Deterministic JSON dump (sorted keys); optionally written to a file."""
    text = json.dumps(obj, sort_keys=True, indent=2, allow_nan=False)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


def _json_float(x):
    if x is None:
        return None
    x = float(x)
    return None if not np.isfinite(x) else x


def _csv_float(x) -> str:
    x = float(x)
    return "" if not np.isfinite(x) else repr(x)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return _json_float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj
