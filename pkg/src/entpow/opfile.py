"""Operator file format.

A single JSON document with keys:

    d       local dimension (integer >= 2)
    name    optional text label
    matrix  d^2 x d^2 nested array of [re, im] pairs, row-major

Numbers are written with 17 significant digits so a serialize/parse round
trip reproduces every float64 entry exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .rearrange import BipartiteOperator

__all__ = ["parse_operator_file", "read_operator_file", "serialize_operator"]


def parse_operator_file(content: bytes | str) -> BipartiteOperator:
    """Parse an operator document; raises ValueError on any malformation."""
    return read_operator_file(content)[0]


def read_operator_file(content: bytes | str) -> tuple[BipartiteOperator, str | None]:
    """Parse an operator document, returning the operator and its label.

    Raises
    ------
    ValueError
        On malformed JSON (message carries line/column), inconsistent
        dimensions (message states the d^2 expected), or non-finite
        entries.
    """
    if isinstance(content, bytes):
        content = content.decode("utf-8")
    try:
        doc = json.loads(content)
    except json.JSONDecodeError as e:
        # str(e) already carries "line L column C"
        raise ValueError(f"malformed operator file: {e}") from None

    if not isinstance(doc, dict):
        raise ValueError("operator file must be a JSON object with keys 'd' and 'matrix'")
    for key in ("d", "matrix"):
        if key not in doc:
            raise ValueError(f"operator file is missing required key '{key}'")

    d = doc["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise ValueError(f"'d' must be an integer >= 2, got {d!r}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ValueError(f"'name' must be text, got {name!r}")

    n = d * d
    matrix = doc["matrix"]
    if not isinstance(matrix, list) or len(matrix) != n:
        raise ValueError(
            f"matrix must have {n} rows ({n} = d^2 for d={d}), "
            f"got {len(matrix) if isinstance(matrix, list) else type(matrix).__name__}"
        )
    out = np.empty((n, n), dtype=np.complex128)
    for r, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != n:
            raise ValueError(f"matrix row {r} must have {n} entries (d^2 for d={d})")
        for c, cell in enumerate(row):
            out[r, c] = _parse_entry(cell, r, c)
    bad = np.argwhere(~np.isfinite(out))
    if bad.size:
        r, c = bad[0]
        raise ValueError(f"non-finite entry at row {r}, column {c}")
    return BipartiteOperator(d, out), name


def serialize_operator(op: BipartiteOperator, name: str | None = None) -> str:
    """Render an operator as the documented JSON text, one matrix row per line."""
    head = ["{", f'  "d": {op.d},']
    if name is not None:
        head.append(f'  "name": {json.dumps(name)},')
    head.append('  "matrix": [')
    rows = []
    for row in op.mat:
        cells = ", ".join(f"[{_fmt(z.real)}, {_fmt(z.imag)}]" for z in row)
        rows.append(f"    [{cells}]")
    return "\n".join(head + [",\n".join(rows), "  ]", "}"]) + "\n"


def _parse_entry(cell, r: int, c: int) -> complex:
    if (
        not isinstance(cell, list)
        or len(cell) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in cell)
    ):
        raise ValueError(
            f"entry at row {r}, column {c} must be a [re, im] pair of numbers, got {cell!r}"
        )
    return complex(cell[0], cell[1])


def _fmt(x: float) -> str:
    return format(x, ".17g")
