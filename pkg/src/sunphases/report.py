"""Machine-readable report envelopes for the CLI.

Payloads are deterministic: keys sorted, complex entries as [re, im] pairs,
floats serialized by repr (lossless round-trip), no locale formatting.  The
timestamp is the only field allowed to differ between identical runs.
Matrices above the inline threshold are written to sidecar files referenced
from the envelope so reports stay diffable.
"""

from __future__ import annotations

import datetime
import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__

#: Matrices with more rows than this are written to sidecar files.
INLINE_DIM_LIMIT = 400


def matrix_payload(mat: np.ndarray) -> list[list[list[float]]]:
    """Dense complex matrix as nested [re, im] pairs."""
    mat = np.asarray(mat, dtype=complex)
    return [
        [[float(entry.real), float(entry.imag)] for entry in row] for row in mat
    ]


def _jsonable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return matrix_payload(value)
    if isinstance(value, Fraction):
        return {"numerator": value.numerator, "denominator": value.denominator}
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.floating,)):
        return float(value)
    return value


def envelope(
    command: str,
    parameters: dict[str, Any],
    results: dict[str, Any],
    residuals: dict[str, float] | None = None,
) -> dict[str, Any]:
    return {
        "command": command,
        "parameters": _jsonable(parameters),
        "results": _jsonable(results),
        "residuals": _jsonable(residuals or {}),
        "version": __version__,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
    }


def spill_large_matrices(
    env: dict[str, Any], matrices: dict[str, np.ndarray], out: Path | None
) -> dict[str, Any]:
    """Attach matrices to the envelope, spilling big ones next to `out`.

    Without an output path everything is inlined.
    """
    for name, mat in matrices.items():
        if out is not None and mat.shape[0] > INLINE_DIM_LIMIT:
            side = out.with_name(f"{out.stem}.{name}.json")
            side.write_text(dumps({"matrix": matrix_payload(mat)}))
            env["results"][name] = {"file": side.name, "dimension": mat.shape[0]}
        else:
            env["results"][name] = matrix_payload(mat)
    return env


def dumps(payload: dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def sweep_csv(rows: list[dict[str, Any]]) -> str:
    """Plot-ready CSV for sweep tables; header then one row per lam."""
    if not rows:
        return ""
    fields = list(rows[0])
    lines = [",".join(fields)]
    for row in rows:
        lines.append(",".join("" if row[f] is None else repr(row[f]) if isinstance(row[f], float) else str(row[f]) for f in fields))
    return "\n".join(lines) + "\n"
