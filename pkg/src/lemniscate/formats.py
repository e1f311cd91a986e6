"""CSV and JSON serialisation of curves, sweeps and result objects."""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import math
from pathlib import Path

import numpy as np

from .tracer import PolarCurve

CURVE_HEADER = ("theta", "alpha")
SWEEP_HEADER = ("C", "k", "rigidity", "abs_err")


def fmt(x: float) -> str:
    """17 significant digits, enough to round-trip any double."""
    return format(float(x), ".17g")


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def curve_to_csv(curve: PolarCurve) -> str:
    return _csv_text(CURVE_HEADER, ((fmt(t), fmt(a)) for t, a in zip(curve.thetas, curve.alphas)))


def write_curve_csv(path, curve: PolarCurve) -> None:
    Path(path).write_text(curve_to_csv(curve), encoding="utf-8", newline="")


def read_curve_csv(path) -> PolarCurve:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != CURVE_HEADER:
            raise ValueError(f"expected header {CURVE_HEADER}, got {header}")
        rows = [(float(t), float(a)) for t, a in reader]
    data = np.array(rows, dtype=float).reshape(-1, 2)
    return PolarCurve(data[:, 0].copy(), data[:, 1].copy(), closed=True)


def sweep_to_csv(cells) -> str:
    rows = []
    for cell in cells:
        if cell.result is None:
            rows.append((fmt(cell.C), fmt(cell.k), "nan", "nan"))
        else:
            rows.append((fmt(cell.C), fmt(cell.k), fmt(cell.result.value), fmt(cell.result.abs_error_estimate)))
    return _csv_text(SWEEP_HEADER, rows)


def to_jsonable(obj):
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj


def to_json(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=False) + "\n"
