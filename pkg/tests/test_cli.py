import json
import subprocess
import sys

import numpy as np
import pytest

from cvm import RootSpec, build_cvm, invert_cvm
from cvm.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, format_float, main


def write_problem(tmp_path, doc, name="p.json"):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


def roots_doc(pairs, **extra):
    return {"roots": [{"lambda": l, "multiplicity": m} for l, m in pairs], **extra}


def parse_csv(text):
    return np.array([[float(v) for v in line.split(",")] for line in text.splitlines()])


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("x, text", [
    (1.0, "1"), (-337.5, "-337.5"), (0.1, "0.1"), (-0.0, "-0"), (1e300, "1e+300"),
    (1 / 3, "0.3333333333333333"),
])
def test_format_float(x, text):
    assert format_float(x) == text
    assert float(text) == x


def test_det_golden(worked_json, capsys):
    code, out, _ = run(["det", "--in", str(worked_json)], capsys)
    assert code == EXIT_OK
    assert out == "-337.5\n"


def test_invert_roundtrip(worked, worked_json, capsys):
    code, out, _ = run(["invert", "--in", str(worked_json)], capsys)
    assert code == EXIT_OK
    assert np.array_equal(parse_csv(out), invert_cvm(worked))


def test_build_roundtrip(worked, worked_json, capsys):
    code, out, _ = run(["build", "--in", str(worked_json)], capsys)
    assert code == EXIT_OK
    M = parse_csv(out)
    assert np.array_equal(M, build_cvm(worked))
    assert M[1, 2] == 1 and M[2, 2] == -6


def test_build_roundtrip_irrational_roots(tmp_path, capsys):
    pairs = [(1 / 3, 2), (-2 ** 0.5, 3), (0.1, 1)]
    code, out, _ = run(["build", "--in", write_problem(tmp_path, roots_doc(pairs))], capsys)
    assert code == EXIT_OK
    assert np.array_equal(parse_csv(out), build_cvm(RootSpec.from_pairs(pairs)))


def test_build_single(tmp_path, capsys):
    code, out, _ = run(["build", "--in", write_problem(tmp_path, roots_doc([(0, 1)]))], capsys)
    assert (code, out) == (EXIT_OK, "1\n")


def test_out_file(worked_json, tmp_path, capsys):
    target = tmp_path / "det.txt"
    code, out, _ = run(["det", "--in", str(worked_json), "--out", str(target)], capsys)
    assert code == EXIT_OK and out == ""
    assert target.read_text() == "-337.5\n"


def test_solve_unit_vector(worked, tmp_path, capsys):
    rhs = build_cvm(worked)[:, 0].tolist()
    doc = roots_doc(worked.roots, rhs=rhs)
    code, out, _ = run(["solve", "--in", write_problem(tmp_path, doc)], capsys)
    assert code == EXIT_OK
    values = [float(v) for v in out.split()]
    assert np.max(np.abs(np.array(values) - np.eye(10)[0])) <= 1e-9
    assert out.splitlines() == [format_float(v) for v in invert_cvm(worked) @ rhs]


def test_interpolate_q(tmp_path, capsys):
    doc = roots_doc([(0, 2), (1, 2)], hermite=[[1, -2], [0, 1]])
    code, out, _ = run(["interpolate", "--in", write_problem(tmp_path, doc)], capsys)
    assert code == EXIT_OK
    assert out.splitlines() == ["1", "-2", "0", "1"]


@pytest.mark.parametrize("doc, fragment", [
    ("{not json", "parse"),
    ("[1, 2]", "parse"),
    ({}, "'roots'"),
    ({"roots": []}, "'roots'"),
    ({"roots": [{"lambda": 1}]}, "roots[0].multiplicity"),
    ({"roots": [{"lambda": "a", "multiplicity": 1}]}, "roots[0].lambda"),
    ({"roots": [{"lambda": 1, "multiplicity": 0}]}, "roots[0].multiplicity"),
    ({"roots": [{"lambda": 1, "multiplicity": 1.5}]}, "roots[0].multiplicity"),
    ({"roots": [{"lambda": 1, "multiplicity": True}]}, "roots[0].multiplicity"),
    (roots_doc([(1, 1), (1, 2)]), "roots"),
    (roots_doc([(1, 2)], rhs=[1.0]), "'rhs'"),
    (roots_doc([(1, 2)], hermite=[[1.0]]), "'hermite'"),
])
def test_invalid_input(tmp_path, capsys, doc, fragment):
    code, out, err = run(["det", "--in", write_problem(tmp_path, doc)], capsys)
    assert code == EXIT_INVALID
    assert out == ""
    assert fragment in err


@pytest.mark.parametrize("command, section", [("solve", "rhs"), ("interpolate", "hermite")])
def test_missing_section(worked_json, capsys, command, section):
    code, out, err = run([command, "--in", str(worked_json)], capsys)
    assert code == EXIT_INVALID and out == ""
    assert f"'{section}'" in err


def test_missing_in_flag(capsys):
    code, _, err = run(["det"], capsys)
    assert code == EXIT_INVALID
    assert "--in" in err


def test_unreadable_input(tmp_path, capsys):
    code, _, err = run(["det", "--in", str(tmp_path / "absent.json")], capsys)
    assert code == EXIT_IO
    assert "cannot read" in err


def test_unwritable_output(worked_json, tmp_path, capsys):
    code, out, err = run(["det", "--in", str(worked_json),
                          "--out", str(tmp_path / "no" / "such" / "dir.txt")], capsys)
    assert code == EXIT_IO
    assert out == "" and "cannot write" in err


def test_bench_single_root(capsys):
    code, out, _ = run(["bench", "--sizes", "64,128"], capsys)
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "mode: single-root"
    ratio = float(lines[3].split()[3])
    assert 3.5 <= ratio <= 4.6


@pytest.mark.parametrize("mode", ["single-root", "distinct-roots", "mixed"])
def test_bench_size_one(capsys, mode):
    code, out, _ = run(["bench", "--sizes", "1", "--mode", mode], capsys)
    assert code == EXIT_OK
    n, _, madds, _, residual = out.splitlines()[2].split()
    assert int(n) == 1 and int(madds) >= 0 and float(residual) == 0.0


def test_bench_distinct_roots_residual(capsys):
    code, out, _ = run(["bench", "--sizes", "64,128", "--mode", "distinct-roots"], capsys)
    assert code == EXIT_OK
    residuals = [float(line.split()[-1]) for line in out.splitlines()[2:]]
    assert all(r <= 1e-7 for r in residuals), f"residual column: {residuals}"


def test_bench_bad_sizes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bench", "--sizes", "0,x"])
    assert exc.value.code == 2


def test_console_entry_point(worked_json):
    proc = subprocess.run([sys.executable, "-m", "cvm", "det", "--in", str(worked_json)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == "-337.5\n"
