import subprocess
import sys

import pytest

from coalgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(out):
    return dict(line.split("=", 1) for line in out.splitlines() if "=" in line and not line.startswith("#"))


def test_analyze_c4(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "cycle:4")
    assert code == 0
    assert out == "n=4\nm=4\nf=0\ndelta=2\nalpha=2\ndomatic=2\nC=4\nc=6\n"


def test_analyze_k5(capsys):
    _, out, _ = run(capsys, "analyze", "--family", "complete:5")
    v = kv(out)
    assert (v["f"], v["domatic"], v["C"], v["c"]) == ("5", "5", "5", "0")


def test_analyze_edge_list_file(tmp_path, capsys):
    path = tmp_path / "c4.txt"
    path.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "analyze", "--file", str(path))
    assert code == 0 and kv(out)["c"] == "6"


def test_analyze_witnesses_revalidate(capsys):
    _, out, _ = run(capsys, "analyze", "--family", "path:6", "--witness")
    v = kv(out)
    assert v["C_witness"] == "0,5|1|2|3|4"
    assert v["c_witness"] == "0,4|1,5|2|3"
    code, cg_out, _ = run(capsys, "cg", "--family", "path:6", "--partition", v["c_witness"])
    assert code == 0 and kv(cg_out)["cg_m"] == "5"


def test_cg_output(capsys):
    code, out, _ = run(capsys, "cg", "--family", "path:6", "--partition", "1|3|0,5|2|4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "parts=5"
    assert [line for line in lines if line.startswith("edge=")] == ["edge=0-2", "edge=0-3", "edge=1-4"]


def test_cg_invalid_partition_exits_1(capsys):
    code, _, err = run(capsys, "cg", "--family", "path:6", "--partition", "0|1|2|3|4|5")
    assert code == 1 and "orphan" in err


def test_construct_pass_and_fail(capsys):
    code, out, _ = run(capsys, "construct", "--family", "cycle:4")
    assert code == 0 and kv(out)["passed"] == "true"
    code, out, _ = run(capsys, "construct", "--family", "fpq:3,0,1")
    v = kv(out)
    assert code == 2 and v["case"] == "CASE1_ODD" and v["partition_valid"] == "false"
    assert "violation=" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--check", "R35", "--max-n", "4")
    assert code == 0 and out.endswith("passed=true\n")
    code, out, _ = run(capsys, "verify", "--check", "T36", "--max-n", "2")
    assert code == 2 and "g6=A? " in out


def test_verify_cap(capsys):
    code, _, err = run(capsys, "verify", "--check", "ORACLE", "--max-n", "7")
    assert code == 1 and "--force-cap" in err


def test_usage_errors(capsys):
    assert run(capsys, "analyze")[0] == 1
    assert run(capsys, "verify", "--check", "X1")[0] == 1
    assert run(capsys, "analyze", "--g6", "C~~")[0] == 1
    assert run(capsys, "analyze", "--family", "cycle:2")[0] == 1


def test_analyze_cap(capsys):
    code, _, err = run(capsys, "analyze", "--family", "path:13")
    assert code == 1 and "cap" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.txt"
    code, out, _ = run(capsys, "--out", str(target), "analyze", "--g6", "C~")
    assert code == 0 and out == ""
    assert kv(target.read_text())["C"] == "4"


def test_formats(capsys):
    code, out, _ = run(capsys, "formats")
    assert code == 0 and "graph6" in out and "edge_list" in out


@pytest.mark.parametrize("argv", [["analyze", "--family", "path:5", "--witness"], ["verify", "--check", "T31", "--max-n", "4"]])
def test_subprocess_byte_identical(argv):
    cmd = [sys.executable, "-m", "coalgraph", *argv]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    assert first.returncode == 0
    assert first.stdout == second.stdout and first.stdout


def test_stdin_input():
    res = subprocess.run(
        [sys.executable, "-m", "coalgraph", "analyze", "--file", "-"],
        input=b"C~\n", capture_output=True, check=False,
    )
    assert res.returncode == 0 and b"c=0" in res.stdout
