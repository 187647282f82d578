"""Report writers for the CLI.

Every command produces a list of flat rows. Complex values are split into
``_re`` / ``_im`` columns and every float is written in scientific notation
with 17 significant digits, so CSV and JSON output are byte-identical across
serial runs.
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np

from .exceptions import ConfigError
from .schemas import FORMATS, VerificationResult, ZetaReport

logger = logging.getLogger(__name__)

Row = Dict[str, Any]


def format_number(x: Any) -> str:
    """17 significant digits for floats; ints and strings unchanged."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.16e}"
    return str(x)


def flatten(row: Mapping[str, Any]) -> Row:
    """Split complex entries into ``<key>_re`` and ``<key>_im``."""
    out: Row = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            out[f"{key}_re"] = float(value.real)
            out[f"{key}_im"] = float(value.imag)
        else:
            out[key] = value
    return out


def _columns(rows: Sequence[Row]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    return columns


def render_csv(rows: Sequence[Row]) -> str:
    flat = [flatten(r) for r in rows]
    columns = _columns(flat)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in flat:
        writer.writerow([format_number(row[c]) if c in row else "" for c in columns])
    return buffer.getvalue()


def render_json(rows: Sequence[Row], meta: Optional[Mapping[str, Any]] = None) -> str:
    def encode(value: Any) -> Any:
        if isinstance(value, Mapping):
            return {k: encode(v) for k, v in value.items()}
        if isinstance(value, (list, tuple)):
            return [encode(v) for v in value]
        if isinstance(value, (float, np.floating)):
            return format_number(value)
        if isinstance(value, (np.integer,)):
            return int(value)
        if isinstance(value, (np.bool_,)):
            return bool(value)
        return value

    payload: Dict[str, Any] = {"rows": [encode(flatten(r)) for r in rows]}
    if meta:
        payload["meta"] = encode(dict(meta))
    return json.dumps(payload, indent=2) + "\n"


def write_rows(
    path: Path,
    rows: Sequence[Row],
    fmt: str = "csv",
    meta: Optional[Mapping[str, Any]] = None,
) -> Path:
    """Write ``rows`` to ``path`` as CSV or JSON.

    Raises:
        ConfigError: If ``fmt`` is unknown.
    """
    if fmt not in FORMATS:
        raise ConfigError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    text = render_csv(rows) if fmt == "csv" else render_json(rows, meta)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    logger.info("wrote %d rows to %s", len(rows), path)
    return path


def zeta_rows(reports: Iterable[ZetaReport]) -> List[Row]:
    """Columns: model, u, grid, route, zeta_inv and one column per residual."""
    rows = []
    for rep in reports:
        row: Row = {
            "model": rep.model_id,
            "u": complex(rep.u),
            "grid_size": rep.grid_size,
            "route": rep.route,
            "zeta_inv": complex(rep.zeta_inv),
        }
        for name in sorted(rep.residuals):
            row[f"residual_{name}"] = rep.residuals[name]
        rows.append(row)
    return rows


def coefficient_rows(table: Iterable[Mapping[str, Any]]) -> List[Row]:
    """Columns: r, quadrature, weight, diff."""
    return [dict(row) for row in table]


def verification_rows(result: VerificationResult) -> List[Row]:
    """One row per check: suite, check, passed, residual, tolerance."""
    rows = []
    for suite in result.suites:
        for check in suite.checks:
            rows.append(
                {
                    "suite": suite.suite,
                    "check": check.name,
                    "passed": check.passed,
                    "max_residual": check.max_residual,
                    "tolerance": check.tolerance,
                    "samples": check.samples,
                }
            )
    return rows
