"""The qhopf command line: exit codes, derived output and report files."""
import json

import pytest

from qhopf.cli.main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from qhopf.cli.suites import SUITES, parse_suites

from test_catalog import KZ2_TEXT

QUIET = ["--log-level", "ERROR"]


def test_verify_passes_on_h2(capsys):
    code = main(QUIET + ["verify", "--algebra", "builtin:H2", "--suites", "axioms,twist,pq", "--samples", "2"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.startswith("# H2 (dim 2 over Q)")
    assert "[axioms]" in out and "[pq]" in out
    assert "(q6): PASS" in out
    assert "FAIL" not in out


def test_verify_skips_qt_without_r_matrix(capsys):
    code = main(QUIET + ["verify", "--algebra", "builtin:H2", "--suites", "qt", "--samples", "1"])
    assert code == EXIT_OK
    assert "[qt] skipped:" in capsys.readouterr().out


def test_broken_file_fails_with_tag(tmp_path, capsys):
    path = tmp_path / "broken.qh"
    path.write_text(KZ2_TEXT.replace("beta 1 1", "beta 1 2"), encoding="utf-8")
    code = main(QUIET + ["verify", "--algebra", str(path), "--suites", "axioms", "--samples", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_FAILURE
    assert "(q6): FAIL" in out
    assert "first failure:" in out


def test_derive_twist_of_kz2(capsys):
    assert main(QUIET + ["derive", "f", "--algebra", "builtin:kZ2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# f for kZ2 (dim 2 over Q)"
    assert "f 1 1 1" in lines
    assert "f_inv 1 1 1" in lines


def test_derive_u(capsys):
    assert main(QUIET + ["derive", "u", "--algebra", "builtin:kZ2_Rt"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "u g 1" in lines and "u_inv g 1" in lines


def test_derive_to_file(tmp_path):
    out = tmp_path / "derived" / "rinv.txt"
    assert main(QUIET + ["derive", "rinv", "--algebra", "builtin:kZ2", "--out", str(out)]) == EXIT_OK
    assert "R_inv 1 1 1" in out.read_text(encoding="utf-8").splitlines()


def test_derive_mu_needs_triangular(capsys):
    code = main(QUIET + ["derive", "mu", "--algebra", "builtin:dZ2"])
    assert code == EXIT_USAGE
    assert "not triangular" in capsys.readouterr().err


def test_derive_u_needs_r_matrix(capsys):
    assert main(QUIET + ["derive", "u", "--algebra", "builtin:H2"]) == EXIT_USAGE
    assert "R-matrix" in capsys.readouterr().err


def test_report_is_deterministic(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code = main(QUIET + ["report", "--algebra", "builtin:kZ2_Rt", "--suites", "axioms,qt,braided",
                             "--seed", "7", "--samples", "2", "--out", str(p)])
        assert code == EXIT_OK
    assert paths[0].read_bytes() == paths[1].read_bytes()
    data = json.loads(paths[0].read_text(encoding="utf-8"))
    assert data["algebra"] == "kZ2_Rt" and data["seed"] == 7
    assert [s["suite"] for s in data["suites"]] == ["axioms", "qt", "braided"]
    assert "seconds" not in data["suites"][0]


def test_timings_are_opt_in(tmp_path):
    out = tmp_path / "t.json"
    main(QUIET + ["report", "--algebra", "builtin:kZ2", "--suites", "twist", "--samples", "1", "--timings",
                  "--out", str(out)])
    assert "seconds" in json.loads(out.read_text(encoding="utf-8"))["suites"][0]


@pytest.mark.parametrize("argv", [
    ["verify", "--algebra", "does/not/exist.qh"],
    ["verify", "--algebra", "builtin:nope"],
    ["verify", "--algebra", "builtin:kZ2", "--suites", "axioms,colour"],
    ["verify", "--algebra", "builtin:H2_Ri", "--field", "q"],
])
def test_usage_errors(argv, capsys):
    assert main(QUIET + argv) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_malformed_file_reports_position(tmp_path, capsys):
    path = tmp_path / "bad.qh"
    path.write_text(KZ2_TEXT.replace("alpha 1 1", "alpha 1 0.5"), encoding="utf-8")
    assert main(QUIET + ["verify", "--algebra", str(path)]) == EXIT_USAGE
    assert f"{path}:19:9" in capsys.readouterr().err


def test_samples_must_be_positive():
    with pytest.raises(SystemExit):
        main(QUIET + ["verify", "--algebra", "builtin:kZ2", "--samples", "0"])


def test_list(capsys):
    assert main(["list"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "builtin:H2_Ri (field fp:101)" in out
    assert "derive: f, pq, u, rinv, h0, mu" in out


def test_parse_suites():
    assert parse_suites("all") == list(SUITES)
    assert parse_suites("qt, axioms") == ["axioms", "qt"]
    with pytest.raises(ValueError):
        parse_suites(" , ")
