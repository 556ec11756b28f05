import csv
import io
import dataclasses
import json
import math
from fractions import Fraction
from typing import Any, Iterable, List, Sequence

import numpy as np

FLOAT_DIGITS = 17


class ReportEncoder(json.JSONEncoder):
    """JSON encoder for report payloads (numpy values, dataclasses, fractions)"""
    def default(self, obj: Any) -> Any:
        if isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, Fraction):
            return float(obj)
        elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)}
        elif hasattr(obj, 'to_dict'):
            return obj.to_dict()
        return super().default(obj)


def format_float(value: float) -> str:
    """17 significant digits, round-trip exact; non-finite values become null"""
    value = float(value)
    if not math.isfinite(value):
        return "null"
    return format(value, f".{FLOAT_DIGITS}g")


def _emit(obj: Any, encoder: ReportEncoder, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    closing = " " * (indent * level)

    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f"{pad}{json.dumps(str(key), ensure_ascii=False)}: {_emit(value, encoder, indent, level + 1)}"
            for key, value in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + closing + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # Rows of scalars stay on one line (matrices, word lists)
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_emit(v, encoder, indent, level + 1) for v in obj) + "]"
        items = [f"{pad}{_emit(value, encoder, indent, level + 1)}" for value in obj]
        return "[\n" + ",\n".join(items) + "\n" + closing + "]"
    return _emit(encoder.default(obj), encoder, indent, level)


def dump_report(report: Any, indent: int = 2) -> str:
    """Serialize a report in declared key order with 17-digit floats"""
    return _emit(report, ReportEncoder(), indent, 0) + "\n"


def write_csv(handle, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Write a table with the same float formatting as the JSON reports"""
    writer = csv.writer(handle, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([
            format_float(value) if isinstance(value, (float, np.floating)) else value
            for value in row
        ])


def rows_to_strings(header: List[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text of a table (used when the report goes to stdout)"""
    buffer = io.StringIO()
    write_csv(buffer, header, rows)
    return buffer.getvalue()
