"""Tests for the report writers."""

import json

import numpy as np
import pytest

from walkzeta.exceptions import ConfigError
from walkzeta.reporting import (
    coefficient_rows,
    flatten,
    format_number,
    render_csv,
    render_json,
    verification_rows,
    write_rows,
    zeta_rows,
)
from walkzeta.schemas import CheckResult, SuiteResult, VerificationResult, ZetaReport


class TestFormatNumber:
    """Tests for format_number."""

    def test_float(self):
        """Test 17 significant digits."""
        assert format_number(0.5) == "5.0000000000000000e-01"
        assert format_number(np.float64(-2.0)) == "-2.0000000000000000e+00"

    def test_int_and_bool(self):
        """Test that ints stay ints and bools become lowercase words."""
        assert format_number(np.int64(7)) == "7"
        assert format_number(True) == "true"
        assert format_number(np.bool_(False)) == "false"

    def test_string(self):
        """Test that strings pass through."""
        assert format_number("fourier") == "fourier"


class TestRender:
    """Tests for CSV and JSON rendering."""

    def test_flatten_complex(self):
        """Test that complex values are split into two columns."""
        assert flatten({"u": 0.25 - 0.5j, "n": 1}) == {"u_re": 0.25, "u_im": -0.5, "n": 1}

    def test_csv(self):
        """Test header and row layout."""
        text = render_csv([{"r": 1, "c": 0.5 + 0j}, {"r": 2, "c": 0.25 + 0j}])
        lines = text.splitlines()
        assert lines[0] == "r,c_re,c_im"
        assert lines[1] == "1,5.0000000000000000e-01,0.0000000000000000e+00"
        assert len(lines) == 3

    def test_csv_missing_columns(self):
        """Test that rows missing a column get an empty cell."""
        lines = render_csv([{"a": 1}, {"a": 2, "b": "x"}]).splitlines()
        assert lines == ["a,b", "1,", "2,x"]

    def test_json(self):
        """Test that floats are encoded as strings and meta is kept."""
        payload = json.loads(render_json([{"n": 3, "mu": 0.5}], meta={"steps": np.int64(3)}))
        assert payload["rows"] == [{"n": 3, "mu": "5.0000000000000000e-01"}]
        assert payload["meta"] == {"steps": 3}

    def test_json_without_meta(self):
        """Test that empty meta is omitted."""
        assert "meta" not in json.loads(render_json([]))


class TestWriteRows:
    """Tests for write_rows."""

    def test_writes_csv(self, tmp_path):
        """Test writing into a new directory."""
        path = write_rows(tmp_path / "out" / "rows.csv", [{"r": 1}], "csv")
        assert path.read_text() == "r\n1\n"

    def test_writes_json(self, tmp_path):
        """Test writing JSON."""
        path = write_rows(tmp_path / "rows.json", [{"r": 1}], "json", meta={"model": "rw"})
        assert json.loads(path.read_text())["meta"] == {"model": "rw"}

    def test_unknown_format(self, tmp_path):
        """Test that an unknown format raises ConfigError."""
        with pytest.raises(ConfigError):
            write_rows(tmp_path / "rows.xml", [], "xml")


class TestRowBuilders:
    """Tests for the per-command row builders."""

    def test_zeta_rows(self):
        """Test the zeta columns with sorted residuals."""
        report = ZetaReport(
            "rw", 0.5, 64, True, 0.8 + 0j, "quadrature", residuals={"weight": 1e-12, "closed": 0.0}
        )
        row = zeta_rows([report])[0]
        assert list(row) == [
            "model",
            "u",
            "grid_size",
            "route",
            "zeta_inv",
            "residual_closed",
            "residual_weight",
        ]
        assert row["u"] == 0.5 + 0j

    def test_coefficient_rows(self):
        """Test that coefficient rows are copied."""
        table = [{"r": 1, "quadrature": 0j}]
        rows = coefficient_rows(table)
        assert rows == table
        assert rows[0] is not table[0]

    def test_verification_rows(self):
        """Test one row per check."""
        result = VerificationResult(
            False,
            [
                SuiteResult("conservation", [CheckResult("a", True, 0.0, 1e-10, 2)]),
                SuiteResult("coefficients", [CheckResult("b", False, 1.0, 1e-8)]),
            ],
        )
        rows = verification_rows(result)
        assert [r["suite"] for r in rows] == ["conservation", "coefficients"]
        assert rows[1]["passed"] is False
        assert list(rows[0]) == [
            "suite",
            "check",
            "passed",
            "max_residual",
            "tolerance",
            "samples",
        ]
