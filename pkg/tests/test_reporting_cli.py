import json

import numpy as np
import pytest

from qubounds import SampleConfig, Tolerance, robertson, run_verification_suite
from qubounds.cli import main
from qubounds.reporting import (
    bound_report_from_dict,
    bound_report_to_dict,
    dumps_report,
    loads_report,
    matrix_from_json_dict,
    matrix_to_json_dict,
    report_body_dict,
    summary_csv,
)
from qubounds.states import PureState
from helpers import SIGMA_X, SIGMA_Y


def _write_pair_file(path, a, b):
    payload = {"a": matrix_to_json_dict(a), "b": matrix_to_json_dict(b)}
    path.write_text(json.dumps(payload))
    return str(path)


def test_matrix_json_round_trip():
    m = np.array([[1.0, 2.0 - 3.0j], [2.0 + 3.0j, -1.0]])
    back = matrix_from_json_dict(matrix_to_json_dict(m))
    np.testing.assert_array_equal(back, m)
    with pytest.raises(ValueError):
        matrix_from_json_dict({"rows": 2, "cols": 2, "re": [[0.0]]})


def test_bound_report_round_trip_exact():
    report = robertson(SIGMA_X, SIGMA_Y, PureState(np.array([1.0, 0.0])))
    back = bound_report_from_dict(json.loads(json.dumps(bound_report_to_dict(report))))
    assert back == report


def test_suite_report_round_trip_and_determinism():
    config = SampleConfig(dimension=3, rank=2, seed=11, count=4)
    tol = Tolerance()
    report = run_verification_suite(config, tol)
    assert report.summary["failure_count"] == 0
    assert loads_report(dumps_report(report)) == report
    again = run_verification_suite(config, tol)
    assert json.dumps(report_body_dict(report), sort_keys=True) == json.dumps(
        report_body_dict(again), sort_keys=True
    )
    csv_text = summary_csv(report)
    assert csv_text.startswith("bound,min_slack,saturated_count,trials")
    assert "robertson_pure" in csv_text


def test_cli_verify_writes_report(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--n", "2", "--trials", "100", "--seed", "7", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["summary"]["failure_count"] == 0
    assert payload["manifest"]["command"] == "verify"
    assert len(payload["trials"]) == 100
    # The product bound holds on every sampled trial, pure and mixed.
    assert payload["summary"]["min_slack"]["robertson_pure"] >= -1e-9
    assert payload["summary"]["min_slack"]["robertson_mixed"] >= -1e-9


def test_cli_verify_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    code = main(
        ["verify", "--n", "3", "--trials", "3", "--seed", "1", "--out", str(out), "--format", "csv"]
    )
    assert code == 0
    assert out.read_text().startswith("bound,")


def test_cli_verify_zero_tolerance_surfaces_failures(tmp_path):
    out = tmp_path / "strict.json"
    code = main(
        [
            "verify", "--n", "2", "--trials", "20", "--seed", "7",
            "--tol-abs", "0", "--tol-rel", "0", "--out", str(out),
        ]
    )
    assert code == 2
    payload = json.loads(out.read_text())
    assert payload["summary"]["failure_count"] > 0


def test_cli_verify_reports_are_rerun_identical(tmp_path):
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    argv = ["verify", "--n", "2", "--trials", "4", "--seed", "3", "--out"]
    assert main(argv + [str(out1)]) == 0
    assert main(argv + [str(out2)]) == 0
    d1, d2 = json.loads(out1.read_text()), json.loads(out2.read_text())
    for d in (d1, d2):
        d["manifest"]["started"] = d["manifest"]["finished"] = ""
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_cli_reproduce_passes(tmp_path):
    out = tmp_path / "goldens.json"
    code = main(["reproduce", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    ids = {t["golden_id"] for t in payload["trials"]}
    assert {"qubit-north-pole", "qubit-south-pole", "block-mixed-4x4", "qubit-chain-grid"} <= ids
    assert all(t["passed"] for t in payload["trials"])


def test_cli_saturate_mp3(tmp_path):
    pair_file = _write_pair_file(tmp_path / "pair.json", SIGMA_X, SIGMA_Y)
    out = tmp_path / "sat.json"
    code = main(["saturate", pair_file, "--target", "mp3", "--out", str(out)])
    assert code == 0
    record = json.loads(out.read_text())
    assert record["mu"] == [-0.0, -1.0] or record["mu"] == [0.0, -1.0]
    assert abs(record["achieved_slack"]) <= 1e-12


def test_cli_saturate_mp6_four_by_four(tmp_path):
    rng = np.random.default_rng(19)
    g1 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    g2 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    a, b = (g1 + g1.conj().T) / 2, (g2 + g2.conj().T) / 2
    pair_file = _write_pair_file(tmp_path / "pair4.json", a, b)
    out = tmp_path / "sat4.json"
    code = main(["saturate", pair_file, "--target", "mp6", "--out", str(out)])
    assert code == 0
    assert abs(json.loads(out.read_text())["achieved_slack"]) <= 1e-8


def test_cli_saturate_rejects_non_hermitian(tmp_path, capsys):
    bad = np.array([[0.0, 1.0], [2.0, 0.0]])
    pair_file = _write_pair_file(tmp_path / "bad.json", bad, SIGMA_Y)
    code = main(["saturate", pair_file, "--target", "mp3"])
    assert code == 1
    assert "NonHermitianInput" in capsys.readouterr().err


def test_cli_saturate_missing_file():
    assert main(["saturate", "/nonexistent/pair.json", "--target", "mp3"]) == 1


def test_cli_bad_flags_exit_one():
    with pytest.raises(SystemExit) as excinfo:
        main(["verify", "--n"])
    assert excinfo.value.code == 1
    with pytest.raises(SystemExit) as excinfo:
        main(["unknown-command"])
    assert excinfo.value.code == 1


def test_cli_bad_config_exit_one():
    assert main(["verify", "--n", "0"]) == 1
    assert main(["verify", "--n", "2", "--rank", "5"]) == 1
