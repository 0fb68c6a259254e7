"""End-to-end tests of the command line interface via CliRunner."""

import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

import s3harmonics.cli as cli_module
from s3harmonics.cli import main
from s3harmonics.serialization import pairs_to_matrix
from s3harmonics.verification import CheckResult


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, args, expect_exit=0):
    result = runner.invoke(main, args, catch_exceptions=False)
    assert result.exit_code == expect_exit, result.output
    return result


def payload_of(result):
    record = json.loads(result.output)
    assert set(record) == {"command", "parameters", "payload", "metadata"}
    assert record["metadata"]["package"] == "s3harmonics"
    return record["payload"]


def test_modes_list_level_zero(runner):
    payload = payload_of(invoke(runner, ["modes", "list", "--L", "0"]))
    assert payload["counts"] == {
        "scalar": 1,
        "coexact": 0,
        "exact_dimension": 0,
        "coexact_dimension": 0,
    }
    assert payload["scalar"][0]["lam"] == 0
    assert payload["coexact"] == []


def test_modes_list_level_two(runner):
    payload = payload_of(invoke(runner, ["modes", "list", "--L", "2"]))
    assert payload["counts"]["scalar"] == 9
    assert payload["counts"]["coexact"] == 6
    assert payload["counts"]["exact_dimension"] == 9
    assert payload["counts"]["coexact_dimension"] == 6
    # enumeration order: two_mp ascending outer, two_mm ascending inner
    first = payload["scalar"][0]
    assert (first["two_mp"], first["two_mm"]) == (-2, -2)
    assert first["lam"] == -8
    # co-exact block: all E rows before all Eprime rows
    tags = [row["family"] for row in payload["coexact"]]
    assert tags == ["E"] * 3 + ["Eprime"] * 3


def test_modes_list_csv_has_one_row_per_mode(runner):
    result = invoke(runner, ["modes", "list", "--L", "2", "--format", "csv"])
    # result.output folds line endings; the raw bytes carry the CRLF contract
    lines = result.stdout_bytes.decode().split("\r\n")
    assert lines[0] == "kind,family,L,two_mp,two_mm,S,D,lam,mu_re,mu_im,nu_re,nu_im"
    body = [ln for ln in lines[1:] if ln]
    assert len(body) == 9 + 6
    assert body[0].startswith("scalar,,2,-2,-2,")
    assert body[9].startswith("coexact,E,2,0,")


def test_eval_killing_components(runner):
    payload = payload_of(invoke(runner, ["eval", "--family", "xi"]))
    comps = [complex(re, im) for re, im in payload["components"]]
    assert comps[0] == 0
    assert comps[1] == pytest.approx(math.cos(math.pi / 4), abs=1e-15)
    assert comps[2] == pytest.approx(math.sin(math.pi / 4), abs=1e-15)
    assert "index" not in payload


def test_eval_scalar_mode_value(runner):
    args = ["eval", "--family", "Phi", "--L", "1", "--mp", "1/2", "--mm", "1/2"]
    payload = payload_of(invoke(runner, args))
    value = complex(*payload["value"])
    # the (1, 1/2, 1/2) mode is cos(alpha) e^{i theta} / pi
    assert value == pytest.approx(1.0 / (math.sqrt(2.0) * math.pi), abs=1e-15)
    assert payload["index"] == {"L": 1, "two_mp": 1, "two_mm": 1, "S": 0, "D": 1}
    assert payload["spectral"]["lam"] == -3


def test_eval_null_mode_reports_flag_and_zero_components(runner):
    args = ["eval", "--family", "E", "--L", "0", "--mp", "0", "--mm", "0"]
    payload = payload_of(invoke(runner, args))
    assert payload["is_null"] is True
    comps = np.array([complex(re, im) for re, im in payload["components"]])
    assert np.max(np.abs(comps)) == 0.0


def test_eval_family_alias_matches_canonical_name(runner):
    base = ["--L", "3", "--mp", "1/2", "--mm", "-1/2", "--alpha", "0.9"]
    short = invoke(runner, ["eval", "--family", "Ep", *base])
    full = invoke(runner, ["eval", "--family", "Eprime", *base])
    assert short.output == full.output


def test_eval_gradient_family_reports_codifferential_check(runner):
    args = ["eval", "--family", "A", "--L", "2", "--mp", "0", "--mm", "0",
            "--alpha", "0.7", "--theta", "1.1", "--phi", "2.3"]
    payload = payload_of(invoke(runner, args))
    check = payload["codifferential_check"]
    assert check["abs_deviation"] < 1e-12
    lhs = complex(*check["codifferential"])
    rhs = complex(*check["minus_lam_phi"])
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_eval_star_d_on_killing_form(runner):
    payload = payload_of(invoke(runner, ["eval", "--family", "xiprime", "--star-d"]))
    base = np.array([complex(re, im) for re, im in payload["components"]])
    curl = np.array([complex(re, im) for re, im in payload["star_d"]["components"]])
    assert np.max(np.abs(curl - 2.0 * base)) < 1e-13


def test_eval_usage_errors_exit_with_status_two(runner):
    # rejected rational
    invoke(runner, ["eval", "--family", "A", "--L", "2", "--mp", "x", "--mm", "0"],
           expect_exit=2)
    # parity violation between L and the windings
    invoke(runner, ["eval", "--family", "A", "--L", "2", "--mp", "1/2", "--mm", "0"],
           expect_exit=2)
    # --star-d needs a one-form
    invoke(runner, ["eval", "--family", "Phi", "--L", "1", "--mp", "1/2",
                    "--mm", "1/2", "--star-d"], expect_exit=2)
    # missing index options for a one-form family
    invoke(runner, ["eval", "--family", "E"], expect_exit=2)
    # unknown family
    invoke(runner, ["eval", "--family", "G", "--L", "2", "--mp", "0", "--mm", "0"],
           expect_exit=2)


def test_gram_coexact_block_diagonal(runner):
    payload = payload_of(invoke(runner, ["gram", "--family", "E", "--L", "2"]))
    assert payload["max_abs_deviation"] < 1e-9
    numeric = pairs_to_matrix(payload["numeric"])
    assert numeric.shape == (3, 3)
    assert np.max(np.abs(np.diag(numeric) - 48.0)) < 1e-9 * 48.0
    off = numeric - np.diag(np.diag(numeric))
    assert np.max(np.abs(off)) < 1e-9


def test_gram_json_deviation_matches_reported_matrices(runner):
    args = ["gram", "--family", "all", "--L", "2", "--normalized"]
    payload = payload_of(invoke(runner, args))
    numeric = pairs_to_matrix(payload["numeric"])
    closed = pairs_to_matrix(payload["closed_form"])
    assert numeric.shape == (15, 15)
    # the emitted pairs round-trip exactly, so the deviation recomputes exactly
    assert float(np.max(np.abs(numeric - closed))) == payload["max_abs_deviation"]
    assert np.max(np.abs(closed - np.eye(15))) == 0.0
    assert payload["max_abs_deviation"] < 1e-9


def test_gram_rejects_underresolved_grid(runner):
    invoke(runner, ["gram", "--family", "E", "--L", "3", "--grid-lmax", "2"],
           expect_exit=2)
    invoke(runner, ["gram", "--family", "E", "--L", "1"], expect_exit=2)


def test_verify_counts_suite_passes(runner):
    result = invoke(runner, ["verify", "--suite", "counts", "--L-max", "6"])
    record = json.loads(result.output)
    assert record["parameters"] == {"suite": "counts", "l_max": 6, "seed": 0}
    summary = record["payload"]["summary"]
    assert summary["failed"] == 0
    assert summary["passed"] == summary["total"] > 0
    assert all(c["passed"] for c in record["payload"]["checks"])


def test_verify_failure_exits_with_status_three(runner, monkeypatch):
    failing = [
        CheckResult(name="forced failure", residual=1.0, tolerance=1e-9,
                    passed=False),
    ]
    monkeypatch.setattr(cli_module, "run_suite", lambda *a, **k: failing)
    result = runner.invoke(main, ["verify", "--suite", "counts"])
    assert result.exit_code == 3
    record = json.loads(result.output)
    assert record["payload"]["summary"]["failed"] == 1


def test_verify_csv_lists_every_check(runner):
    result = invoke(
        runner, ["verify", "--suite", "counts", "--L-max", "4", "--format", "csv"]
    )
    lines = [ln for ln in result.stdout_bytes.decode().split("\r\n") if ln]
    assert lines[0] == "name,residual,tolerance,kind,passed"
    assert all(ln.endswith(",true") for ln in lines[1:])


def test_dims_table(runner):
    payload = payload_of(invoke(runner, ["dims", "--L-max", "5"]))
    rows = payload["levels"]
    assert [r["L"] for r in rows] == [1, 2, 3, 4, 5]
    assert [r["exact"] for r in rows] == [4, 9, 16, 25, 36]
    assert [r["coexact"] for r in rows] == [0, 6, 16, 30, 48]
    assert all(r["total"] == r["exact"] + r["coexact"] for r in rows)

    csv_result = invoke(runner, ["dims", "--L-max", "3", "--format", "csv"])
    lines = [ln for ln in csv_result.stdout_bytes.decode().split("\r\n") if ln]
    assert lines == [
        "L,exact_dimension,coexact_dimension,total",
        "1,4,0,4",
        "2,9,6,15",
        "3,16,16,32",
    ]
    invoke(runner, ["dims", "--L-max", "0"], expect_exit=2)


def test_out_option_writes_file_and_keeps_stdout_quiet(runner, tmp_path):
    target = tmp_path / "dims.json"
    result = invoke(runner, ["dims", "--L-max", "3", "--out", str(target)])
    assert result.output == ""
    record = json.loads(target.read_text())
    assert record["command"] == "dims"


def test_repeated_invocations_are_byte_identical(runner):
    args = ["verify", "--suite", "identities", "--seed", "5"]
    first = invoke(runner, args)
    second = invoke(runner, args)
    assert first.output == second.output


def test_report_writes_figures_data_and_manifest(runner, tmp_path):
    out_dir = tmp_path / "report"
    result = invoke(runner, ["report", "--out", str(out_dir), "--L-max", "2"])
    record = json.loads(result.output)
    manifest = record["payload"]
    assert manifest["parameters"]["l_max"] == 2

    expected = {
        "gram_deviation.png", "gram_matrix.csv",
        "eigen_residuals.png", "eigen_residuals.csv",
        "degeneracies.png", "degeneracies.csv",
        "mode_slice.png", "mode_slice.csv",
        "report.json",
    }
    written = {p.name for p in out_dir.iterdir()}
    assert written == expected

    listed = set()
    for entry in manifest["figures"]:
        listed.add(entry["file"])
        listed.add(entry["data"])
    assert listed | {"report.json"} == expected

    on_disk = json.loads((out_dir / "report.json").read_text())
    assert on_disk["figures"] == manifest["figures"]
