"""Command-line interface: dispatch, exit codes, output formats,
config handling, and report determinism."""

import io
import json

import pytest

from orbitcert.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# zsig find
# ---------------------------------------------------------------------------


def test_find_reports_missing_zsigmondy_prime(capsys):
    code, out, _ = run_cli(["zsig", "find", "2", "6"], capsys)
    assert code == 0
    assert "no Zsigmondy prime" in out


def test_find_reports_primes_json(capsys):
    code, out, _ = run_cli(
        ["zsig", "find", "2", "4", "--format", "json"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["found"] is True
    assert report["zsigmondy_primes"] == [{"multiplicity": 1, "prime": 5}]


def test_find_rejects_bad_arguments(capsys):
    code, _, err = run_cli(["zsig", "find", "1", "4"], capsys)
    assert code == 1 and "usage error" in err
    code, _, err = run_cli(["zsig", "find", "x", "4"], capsys)
    assert code == 1


# ---------------------------------------------------------------------------
# zsig scan
# ---------------------------------------------------------------------------


def test_scan_matches_stored_table(capsys):
    code, out, _ = run_cli(
        [
            "zsig", "scan", "--table", "feit_thm31",
            "--base-max", "20", "--m-max", "10", "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["matches_table"] is True
    assert {"base": 2, "m": 6} in report["exceptions"]
    assert report["window"] == {"base_max": 20, "m_max": 10}
    assert all(set(w) == {"base", "m", "prime"} for w in report["witnesses"])


def test_scan_csv_is_flat(capsys):
    code, out, _ = run_cli(
        [
            "zsig", "scan", "--table", "cor34",
            "--base-max", "8", "--m-max", "12", "--format", "csv",
        ],
        capsys,
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "base,m"
    assert "2,12" in lines and "3,4" in lines


def test_scan_golden_roundtrip_and_mismatch(tmp_path, capsys):
    golden = tmp_path / "feit.golden"
    code, _, _ = run_cli(
        [
            "zsig", "scan", "--table", "feit_thm31",
            "--base-max", "20", "--m-max", "10",
            "--write-golden", str(golden),
        ],
        capsys,
    )
    assert code == 0
    code, out, _ = run_cli(
        [
            "zsig", "scan", "--table", "feit_thm31",
            "--base-max", "20", "--m-max", "10", "--golden", str(golden),
        ],
        capsys,
    )
    assert code == 0 and "matches golden file" in out
    tampered = golden.read_text().replace("2 4", "2 5")
    golden.write_text(tampered)
    code, out, _ = run_cli(
        [
            "zsig", "scan", "--table", "feit_thm31",
            "--base-max", "20", "--m-max", "10", "--golden", str(golden),
        ],
        capsys,
    )
    assert code == 2 and "MISMATCH" in out


def test_scan_unknown_table_is_usage_error(capsys):
    code, _, err = run_cli(
        ["zsig", "scan", "--table", "nope", "--base-max", "5", "--m-max", "5"],
        capsys,
    )
    assert code == 1 and "usage error" in err


# ---------------------------------------------------------------------------
# simple-order / out-order
# ---------------------------------------------------------------------------


def test_simple_order_json_shape(capsys):
    code, out, _ = run_cli(
        [
            "simple-order", "A_n", "--n", "2", "--p", "2", "--f", "2",
            "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["family"] == "A_n"
    assert (report["n"], report["p"], report["f"], report["q"]) == (2, 2, 2, 4)
    assert report["order"] == "20160"
    assert report["order_factored"] == [[2, 6], [3, 2], [5, 1], [7, 1]]
    assert report["out_order"] == 12
    assert report["out_abelian"] is False
    assert report["kk_bound"] == 6


def test_out_order_sporadic_and_plain(capsys):
    code, out, _ = run_cli(["out-order", "Sporadic", "--name", "M12"], capsys)
    assert code == 0
    assert "|Out| = 2" in out
    code, out, _ = run_cli(["simple-order", "Alt", "--n", "6"], capsys)
    assert code == 0 and "360" in out


def test_catalog_rejects_bad_parameters(capsys):
    code, _, err = run_cli(["simple-order", "A_n", "--n", "2"], capsys)
    assert code == 1
    code, _, err = run_cli(
        ["simple-order", "A_n", "--n", "2", "--p", "6", "--f", "1"], capsys
    )
    assert code == 1


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


def test_audit_small_window_json(capsys):
    code, out, _ = run_cli(
        [
            "audit", "--n-max", "2", "--q-max", "8",
            "--family", "A_n", "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["summary"]["no_witness"] == []
    labels = [cert["label"] for cert in report["certificates"]]
    assert labels == sorted(labels)
    assert "A_2(4)" in labels
    for cert in report["certificates"]:
        assert cert["checks"] == {
            "bound_2sqrt": True, "bound_kk": True, "coprime": True,
        }


def test_audit_check_paper_sections(capsys):
    code, out, _ = run_cli(
        [
            "audit", "--n-max", "1", "--q-max", "4",
            "--family", "Alt", "--check-paper", "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    check = report["published_check"]
    expressions = {
        item["expression"] for item in check["factorization_mismatches"]
    }
    assert expressions == {"2^13-1", "2^27-1", "2^18-1"}
    assert len(check["out_discrepancies"]) == 3
    printed = {
        (item["printed"], item["computed"])
        for item in check["out_discrepancies"]
    }
    assert printed == {(8, 24), (4, 12), (12, 6)}


def test_audit_report_file_and_determinism(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    for path in (first, second):
        code, _, _ = run_cli(
            [
                "audit", "--n-max", "2", "--q-max", "9",
                "--family", "2B2,G2", "--report", str(path),
            ],
            capsys,
        )
        assert code == 0
    assert first.read_bytes() == second.read_bytes()
    report = json.loads(first.read_text())
    assert report["summary"]["certified"] == len(report["certificates"])


def test_audit_unknown_family(capsys):
    code, _, err = run_cli(
        ["audit", "--n-max", "2", "--q-max", "4", "--family", "Z_n"], capsys
    )
    assert code == 1


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------


def _write_gens(tmp_path, payload):
    path = tmp_path / "gens.json"
    path.write_text(json.dumps(payload))
    return str(path)


def test_orbits_fixture_with_bound(tmp_path, capsys):
    path = _write_gens(
        tmp_path,
        {"p": 3, "dim": 2, "generators": [[1, 1, 0, 1], [0, 2, 1, 0]]},
    )
    code, out, _ = run_cli(
        ["orbits", "--gens", path, "--check-bound", "--json"], capsys
    )
    assert code == 0
    report = json.loads(out)
    assert report["order"] == 24
    assert report["orbit_sizes"] == [1, 8]
    assert report["verdict"]["passed"] is True
    assert report["verdict"]["abelianization"] == 3


def test_orbits_rejected_module_exits_one(tmp_path, capsys):
    path = _write_gens(tmp_path, {"p": 3, "dim": 2, "generators": [[1, 1, 0, 1]]})
    code, _, err = run_cli(["orbits", "--gens", path, "--check-bound"], capsys)
    assert code == 1 and "error" in err


def test_orbits_cap_and_bad_file(tmp_path, capsys):
    path = _write_gens(
        tmp_path,
        {"p": 3, "dim": 2, "generators": [[1, 1, 0, 1], [0, 2, 1, 0]]},
    )
    code, _, err = run_cli(["orbits", "--gens", path, "--cap", "10"], capsys)
    assert code == 1
    missing = _write_gens(tmp_path, {"p": 3, "generators": []})
    code, _, err = run_cli(["orbits", "--gens", missing], capsys)
    assert code == 1 and "missing keys" in err
    code, _, err = run_cli(
        ["orbits", "--gens", str(tmp_path / "absent.json")], capsys
    )
    assert code == 1


def test_orbits_csv_lists_sizes(tmp_path, capsys):
    path = _write_gens(
        tmp_path, {"p": 2, "dim": 2, "generators": [[0, 1, 1, 0], [1, 1, 0, 1]]}
    )
    code, out, _ = run_cli(
        ["orbits", "--gens", path, "--format", "csv"], capsys
    )
    assert code == 0
    assert out.strip().splitlines() == ["orbit_size", "1", "3"]


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def test_verify_corpus_and_fixtures(capsys):
    code, out, _ = run_cli(
        [
            "verify", "--seed", "0", "--count", "10",
            "--p-set", "2,3,5,7", "--dim-max", "3", "--format", "json",
        ],
        capsys,
    )
    assert code == 0
    report = json.loads(out)
    assert report["all_passed"] is True
    assert len(report["instances"]) == 10
    names = [fixture["name"] for fixture in report["fixtures"]]
    assert any("SL(2,3)" in name for name in names)
    assert any("GL(2,2)" in name for name in names)
    scalars = [f for f in report["fixtures"] if "scalar" in f["name"]]
    assert [f["tight"] for f in scalars] == [True, True, True]
    assert [f["module_size"] for f in scalars] == [5, 7, 13]


def test_verify_rejects_bad_p_set(capsys):
    code, _, err = run_cli(
        ["verify", "--seed", "0", "--count", "1", "--p-set", "2,x",
         "--dim-max", "2"],
        capsys,
    )
    assert code == 1 and "usage error" in err


# ---------------------------------------------------------------------------
# plumbing: config files, output path, timestamps, determinism
# ---------------------------------------------------------------------------


def test_config_file_sets_format_and_flags_override(tmp_path, capsys):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("format = json\n")
    code, out, _ = run_cli(
        ["zsig", "find", "3", "4", "--config", str(cfg)], capsys
    )
    assert code == 0
    assert json.loads(out)["found"] is True
    code, out, _ = run_cli(
        ["zsig", "find", "3", "4", "--config", str(cfg), "--format", "plain"],
        capsys,
    )
    assert code == 0
    assert "Zsigmondy primes of 3^4 - 1: 5" in out


def test_config_file_rejects_unknown_keys(tmp_path, capsys):
    cfg = tmp_path / "cfg.txt"
    cfg.write_text("frobnicate = yes\n")
    code, _, err = run_cli(
        ["zsig", "find", "3", "4", "--config", str(cfg)], capsys
    )
    assert code == 1 and "unknown config key" in err


def test_output_path_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        [
            "zsig", "find", "2", "4", "--format", "json",
            "--output", str(target),
        ],
        capsys,
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["found"] is True


def test_timestamps_only_on_request(capsys):
    code, out, _ = run_cli(
        ["zsig", "find", "2", "4", "--format", "json"], capsys
    )
    assert "generated_at" not in json.loads(out)
    code, out, _ = run_cli(
        ["zsig", "find", "2", "4", "--format", "json", "--timestamps"],
        capsys,
    )
    assert "generated_at" in json.loads(out)


def test_reports_byte_identical_across_runs(capsys):
    argv = [
        "zsig", "scan", "--table", "larger_thm32",
        "--base-max", "30", "--m-max", "20", "--format", "json",
    ]
    code, first, _ = run_cli(argv, capsys)
    assert code == 0
    code, second, _ = run_cli(argv + ["--jobs", "3"], capsys)
    assert code == 0
    assert first == second


def test_csv_rejected_for_nested_reports(capsys):
    code, _, err = run_cli(
        ["simple-order", "Alt", "--n", "5", "--format", "csv"], capsys
    )
    assert code == 1 and "flat tables" in err


def test_missing_subcommand_is_usage_error(capsys):
    code, _, err = run_cli([], capsys)
    assert code == 1 and "usage error" in err
    code, _, err = run_cli(["zsig"], capsys)
    assert code == 1
