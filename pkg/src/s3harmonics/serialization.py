"""Delimited output with bit-exact float formatting.

All floats are rendered with %.17g, which round-trips IEEE doubles
exactly through a standard parser, so re-reading an emitted file and
recomputing a derived quantity reproduces it bit for bit.  Complex
numbers are rendered as [re, im] pairs in JSON and as paired
<name>_re, <name>_im columns in CSV.
"""

from __future__ import annotations

import io
import json

import numpy as np

__all__ = [
    "format_float",
    "render_json",
    "complex_pair",
    "matrix_pairs",
    "pairs_to_matrix",
    "matrix_csv",
]


def format_float(value: float) -> str:
    return "%.17g" % float(value)


def _render(obj, indent: int, level: int) -> str:
    pad = " " * (indent * level)
    inner = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return f"[{format_float(obj.real)}, {format_float(obj.imag)}]"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [
            f"{inner}{json.dumps(str(k))}: {_render(v, indent, level + 1)}"
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        rendered = [_render(v, indent, level + 1) for v in obj]
        if all("\n" not in r for r in rendered) and sum(len(r) for r in rendered) < 72:
            return "[" + ", ".join(rendered) + "]"
        return "[\n" + ",\n".join(inner + r for r in rendered) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(obj, indent: int = 2) -> str:
    """Serialize to a JSON string with %.17g floats and [re, im] complexes."""
    return _render(obj, indent, 0) + "\n"


def complex_pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def matrix_pairs(matrix) -> list:
    """Complex matrix as nested lists of [re, im] pairs."""
    m = np.asarray(matrix, dtype=complex)
    return [[complex_pair(v) for v in row] for row in m]


def pairs_to_matrix(payload) -> np.ndarray:
    """Inverse of matrix_pairs, for round-trip checks."""
    rows = [[complex(re, im) for re, im in row] for row in payload]
    return np.asarray(rows, dtype=complex)


def matrix_csv(matrix, label: str = "matrix") -> str:
    """Long-format CSV of a complex matrix: label,row,col,value_re,value_im."""
    m = np.asarray(matrix, dtype=complex)
    buf = io.StringIO()
    buf.write("matrix,row,col,value_re,value_im\r\n")
    for r in range(m.shape[0]):
        for c in range(m.shape[1]):
            buf.write(
                f"{label},{r},{c},{format_float(m[r, c].real)},{format_float(m[r, c].imag)}\r\n"
            )
    return buf.getvalue()
