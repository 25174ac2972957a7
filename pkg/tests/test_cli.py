import io
import subprocess
import sys

import pytest

from domramsey.cli import EXIT_CONFLICT, EXIT_DATAERR, EXIT_NOINPUT, EXIT_OK, EXIT_UNDETERMINED, EXIT_USAGE, main
from domramsey.canon import is_isomorphic
from domramsey.graph import complete_graph, cycle_graph, encode_graph6, parse_graph6


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_params_from_stdin(capsys, monkeypatch):
    text = encode_graph6(cycle_graph(6)) + "\n" + encode_graph6(complete_graph(5)) + "\n"
    code, out, _ = run(capsys, "params", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0].split()[:4] == ["6", "3", "3", "3"]
    assert lines[0].endswith("beta={0,2,4} Gamma={0,2,4} IR={0,2,4}")
    assert lines[1].split()[:4] == ["5", "1", "1", "1"]


def test_params_reports_bad_line(capsys, tmp_path):
    path = tmp_path / "in.g6"
    path.write_text("Dhc\n\nDh\n")
    code, out, err = run(capsys, "params", str(path))
    assert code == EXIT_DATAERR
    assert "line 3:" in err
    assert out.startswith("5 2 2 2")


@pytest.mark.parametrize("spec, value", [("r(3,3)", 6), ("v(3,4)", 9), ("u(3,3)", 6)])
def test_compute(capsys, spec, value):
    code, out, _ = run(capsys, "compute", "--variant", spec, "--p-max", "10")
    assert code == EXIT_OK
    assert out.splitlines()[0] == f"{spec} = {value}"


def test_compute_undetermined(capsys):
    code, out, _ = run(capsys, "compute", "--variant", "s(3,5)", "--p-max", "10")
    assert code == EXIT_UNDETERMINED and "undetermined at cap 10" in out


def test_compute_flags_printed_conflict(capsys):
    code, out, _ = run(capsys, "compute", "--variant", "w(4,3)", "--p-max", "9")
    assert code == EXIT_CONFLICT
    assert "w(4,3) = 8" in out and "printed table gives w(4,3) = 6" in out


def test_compute_writes_and_verifies_certificate(capsys, tmp_path):
    cert = tmp_path / "t34.cert"
    extremal = tmp_path / "t34.g6"
    code, _, _ = run(capsys, "compute", "--variant", "t(3,4)", "--p-max", "9", "--out", str(cert),
                     "--extremal-out", str(extremal))
    assert code == EXIT_OK
    assert len(extremal.read_text().split()) == 2
    code, out, _ = run(capsys, "verify", str(cert))
    assert code == EXIT_OK and out.strip() == "t(3,4) = 9: valid"
    tampered = tmp_path / "bad.cert"
    tampered.write_text(cert.read_text().replace("examined = ", "examined = 1"))
    code, out, _ = run(capsys, "verify", str(tampered))
    assert code == EXIT_CONFLICT and "INVALID" in out


def test_compute_output_independent_of_workers(capsys, tmp_path, monkeypatch):
    paths = []
    for workers in ("1", "2"):
        path = tmp_path / f"w{workers}.cert"
        monkeypatch.setenv("DOMRAMSEY_WORKERS", workers)
        assert run(capsys, "compute", "--variant", "s(4,3)", "--p-max", "9", "--out", str(path))[0] == 0
        paths.append(path.read_bytes())
    assert paths[0] == paths[1]


def test_bad_worker_env(capsys, monkeypatch):
    monkeypatch.setenv("DOMRAMSEY_WORKERS", "zero")
    code, _, _ = run(capsys, "compute", "--variant", "r(3,3)", "--p-max", "6")
    assert code == EXIT_USAGE


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--variant", "r(3,3)", "--p", "6")
    assert code == EXIT_OK and "status = exhausted" in out
    code, out, _ = run(capsys, "certify", "--variant", "r(3,3)", "--p", "5")
    assert code == EXIT_OK and "status = counterexample" in out
    code, out, _ = run(capsys, "certify", "--variant", "w(4,3)", "--p", "7")
    assert code == EXIT_CONFLICT   # printed 6, yet an avoider exists on 7 vertices
    code, _, _ = run(capsys, "certify", "--variant", "r(4,4)", "--p", "10", "--budget", "3")
    assert code == EXIT_UNDETERMINED


def test_find(capsys):
    code, out, _ = run(capsys, "find", "--variant", "r(3,3)", "--p", "5")
    assert code == EXIT_OK and is_isomorphic(parse_graph6(out.strip()), cycle_graph(5))
    code, out, _ = run(capsys, "find", "--variant", "r(3,3)", "--p", "6")
    assert code == EXIT_OK and "no avoidance colouring" in out
    code, _, _ = run(capsys, "find", "--variant", "r(4,4)", "--p", "17", "--budget", "10")
    assert code == EXIT_UNDETERMINED


def test_table_small_orders(capsys):
    code, out, _ = run(capsys, "table", "--max-order", "5")
    assert code == EXIT_OK and "no printed value is within the order cap" in out
    code, out, _ = run(capsys, "table", "--max-order", "6")
    for letter in "swutvr":
        assert f"{letter}(3,3): printed=6 computed=6 agree" in out
    assert "w(4,3): printed=6 computed=undetermined refuted" in out
    assert code == EXIT_CONFLICT


def test_table_order_nine(capsys):
    code, out, _ = run(capsys, "table", "--max-order", "9")
    assert code == EXIT_CONFLICT
    assert "w(4,3): printed=6 computed=8 disagree" in out
    assert out.count(" agree") == 6 + 11
    assert "printed table inconsistent: printed s(4,3)=8 > w(4,3)=6" in out
    assert "chain violation" not in out


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "lemma2", "--n-max", "8")
    assert code == EXIT_OK and out.rstrip().endswith("0 violators")
    code, out, _ = run(capsys, "scan", "theorem3", "--n-max", "8")
    assert code == EXIT_CONFLICT and "1 violators" in out and "violator GQjVRg" in out


def test_check_t38_errors(capsys, tmp_path):
    code, _, err = run(capsys, "check-t38", str(tmp_path / "missing.g6"))
    assert code == EXIT_NOINPUT and "no such file" in err
    empty = tmp_path / "empty.g6"
    empty.write_text("")
    code, _, err = run(capsys, "check-t38", str(empty))
    assert code == EXIT_DATAERR


def test_verify_missing_and_malformed(capsys, tmp_path):
    assert run(capsys, "verify", str(tmp_path / "nope"))[0] == EXIT_NOINPUT
    bad = tmp_path / "bad.cert"
    bad.write_text("variant = r(3,3)\n")
    assert run(capsys, "verify", str(bad))[0] == EXIT_DATAERR


@pytest.mark.parametrize("argv", [
    [], ["compute"], ["compute", "--variant", "q(3,3)", "--p-max", "6"],
    ["compute", "--variant", "r(3,3)", "--p-max", "0"], ["scan", "other"], ["bogus"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "domramsey", "compute", "--variant", "r(3,3)", "--p-max", "6"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("r(3,3) = 6")
