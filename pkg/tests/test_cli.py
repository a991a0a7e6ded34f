import csv
import io
import json
import subprocess
import sys

import pytest

from hyperharmonic.cli import OutputRecord, build_record, format_sig, main, parse_range

PUBLISHED_S2 = [2.112083781, 1.284326055, 1.109035642, 1.047657410,
            1.022090029, 1.010557246, 1.005133570, 1.002522063]
PUBLISHED_S4 = [1.310990854, 1.103348021, 1.043816710, 1.020093103]


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_format_sig():
    assert format_sig(2.1120837816098845) == "2.112083782"
    assert format_sig(1.04765740983) == "1.047657410"
    assert format_sig(0.000123456789012) == "0.0001234567890"
    assert format_sig(9.9999999999) == "10.00000000"
    assert format_sig(0.0) == "0.000000000"
    # half-even on an exactly representable tie
    assert format_sig(0.125, 2) == "0.12"
    assert format_sig(0.375, 2) == "0.38"


def test_parse_range():
    assert parse_range("3..10") == list(range(3, 11))
    assert parse_range("4") == [4]
    assert parse_range("2,5..6") == [2, 5, 6]


def test_hh_examples():
    assert run("hh", "3", "2") == (0, "13/3 ≈ 4.333333333\n", "")
    assert run("hh", "1", "7")[:2] == (0, "1\n")
    code, out, err = run("hh", "0", "2")
    assert code == 2 and out == "" and "usage" in err


def test_hh_json():
    code, out, _ = run("hh", "4", "1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 4, "r": 1, "numerator": 25, "denominator": 12, "decimal": "2.083333333"}


def test_sum_numeric():
    assert run("sum", "2", "3", "--numeric") == (0, "2.112083782\n", "")


def test_sum_digits():
    code, out, _ = run("sum", "2", "3", "--numeric", "--digits", "14")
    assert code == 0 and out == "2.1120837816099\n"
    assert run("sum", "2", "3", "--digits", "15")[0] == 2


def test_sum_exact():
    code, out, _ = run("sum", "2", "3", "--exact")
    assert code == 0
    assert "pi-power: π^4/72 + 2ζ(3) - π^2/6" in out
    assert "zeta-only: -(1/2)ζ(2)^2 + (5/2)ζ(4) + 2ζ(3) - ζ(2)" in out


def test_sum_divergent():
    code, out, err = run("sum", "2", "2")
    assert code == 3 and out == ""
    assert "divergent: requires m ≥ r+1" in err


def test_sum_oracle():
    code, out, _ = run("sum", "4", "5", "--oracle", "100000")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["closed"] == "1.310990854"
    # true partial sum; the published 1.310972037 differs by 5.5e-8
    assert lines["partial sum (100000 terms)"] == "1.310972092"
    assert float(lines["discrepancy"]) < 1e-6


def test_sum_oracle_tolerance_failure():
    code, _, err = run("sum", "4", "5", "--oracle", "100", "--tolerance", "1e-12")
    assert code == 1 and "exceeds tolerance" in err


def test_sum_json():
    code, out, _ = run("sum", "3", "4", "--numeric", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"r": 3, "m": 4, "value": "1.628620202"}


def test_table_csv_s2():
    code, out, _ = run("table", "--r", "2", "--m", "3..10", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [int(row["m"]) for row in rows] == list(range(3, 11))
    assert list(rows[0]) == ["r", "m", "closed_form", "approx_value", "oracle_value", "discrepancy"]
    for row, published in zip(rows, PUBLISHED_S2):
        assert len(row["approx_value"].replace(".", "")) == 10
        # the published column is itself off by up to 4.1e-9 in places
        assert abs(float(row["approx_value"]) - published) < 5e-9


def test_table_text_s4():
    code, out, _ = run("table", "--r", "4", "--m", "5..8")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split()[:3] == ["r", "m", "approx_value"]
    body = lines[2:]
    assert len(body) == 4
    for line, published in zip(body, PUBLISHED_S4):
        assert abs(float(line.split()[2]) - published) < 5e-9


def test_table_marks_divergent_cells():
    code, out, _ = run("table", "--r", "2", "--m", "2..3", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["approx_value"] == "div" and rows[0]["closed_form"] == "div"
    assert rows[1]["approx_value"] == "2.112083782"


def test_table_unknown_format():
    assert run("table", "--r", "2", "--m", "3", "--format", "xml")[0] == 2


def test_table_json_round_trip():
    code, out, _ = run("table", "--r", "2..3", "--m", "3..5", "--format", "json", "--oracle-terms", "1000")
    assert code == 0
    payload = json.loads(out)
    assert [(o["r"], o["m"]) for o in payload] == [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (3, 5)]
    assert payload[3]["approx_value"] == "div"
    for obj in payload:
        if obj["approx_value"] == "div":
            continue
        rec = build_record(obj["r"], obj["m"], oracle_terms=1000)
        assert obj["approx_value"] == float(rec.approx_value)
        assert format_sig(obj["approx_value"]) == rec.approx_value
        assert obj["oracle_value"] == rec.oracle_value
        assert obj["discrepancy"] == rec.discrepancy
        assert obj["closed_form"] == {"pi_power": rec.closed_form, "zeta_only": rec.closed_form_zeta}


def test_output_record_csv_row():
    rec = OutputRecord(2, 2, "div", "div", "div")
    assert rec.divergent
    assert rec.to_csv_row() == {"r": 2, "m": 2, "closed_form": "div", "approx_value": "div",
                                "oracle_value": "", "discrepancy": ""}


def test_verify_quick():
    code, out, _ = run("verify", "quick")
    assert code == 0, out
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


def test_verify_bogus():
    assert run("verify", "bogus")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperharmonic", "sum", "2", "3", "--numeric"],
        capture_output=True, text=True, encoding="utf-8", check=False, timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2.112083782\n"


def test_module_entry_point_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperharmonic", "hh", "0", "2"],
        capture_output=True, text=True, encoding="utf-8", check=False, timeout=60,
    )
    assert proc.returncode == 2
    assert proc.stderr
