# -*- coding: utf-8 -*-
"""CSV, JSON and XLSX writers for tabular results."""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Any, IO, Iterable, List, Optional, Sequence, Union

import numpy as np

from config import FDW_CSV_DIGITS


def format_value(value: Any, digits: int = FDW_CSV_DIGITS) -> str:
    """One CSV cell: floats with `digits` significant digits, Fractions as p/q."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        v = float(value)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return "%.*g" % (digits, v)
    if isinstance(value, complex):
        return "%s%+.*gj" % (format_value(value.real, digits), digits, value.imag)
    return str(value)


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], digits: int = FDW_CSV_DIGITS) -> str:
    buf = io.StringIO(newline="")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(header))
    for row in rows:
        w.writerow([format_value(v, digits) for v in row])
    return buf.getvalue()


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        v = float(value)
        return v if math.isfinite(v) else str(v)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


def dumps_json(payload: Any) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n"


def write_json(payload: Any, target: Union[str, IO[str]]) -> None:
    text = dumps_json(payload)
    if isinstance(target, str):
        with open(target, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        target.write(text)


def rows_to_xlsx(header: Sequence[str], rows: Iterable[Sequence[Any]], path: str, sheet_title: Optional[str] = None) -> None:
    try:
        import openpyxl
    except ImportError:
        raise RuntimeError("openpyxl is not installed; cannot export XLSX")
    from openpyxl.styles import Font

    wb = openpyxl.Workbook()
    ws = wb.active
    ws.title = (sheet_title or "results")[:31]
    for c, h in enumerate(header, start=1):
        ws.cell(row=1, column=c, value=h).font = Font(bold=True)
    widths: List[int] = [max(10, len(h) + 2) for h in header]
    for r_idx, row in enumerate(rows, start=2):
        for c_idx, val in enumerate(row, start=1):
            if isinstance(val, (Fraction, complex)):
                val = format_value(val)
            elif isinstance(val, np.generic):
                val = val.item()
            ws.cell(row=r_idx, column=c_idx, value=val)
            if c_idx <= len(widths):
                widths[c_idx - 1] = min(50, max(widths[c_idx - 1], len(str(val)) + 1))
    for c_idx, width in enumerate(widths, start=1):
        ws.column_dimensions[openpyxl.utils.get_column_letter(c_idx)].width = width
    wb.save(path)
