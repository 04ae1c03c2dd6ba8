import io
import subprocess
import sys

import pytest

from surfhom import example_path
from surfhom.cli import render_table, run
from surfhom.homology import AlgebraSummary, closed_table

FIG2 = str(example_path("fig2"))
FIG3 = str(example_path("fig3"))


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def tsv_rows(text):
    lines = text.strip().splitlines()
    assert lines[0] == "n\tHH\tHC\tHCco"
    return [tuple(int(x) for x in line.split("\t")) for line in lines[1:]]


def test_validate_ok():
    assert call("validate", FIG2) == (0, "valid\n", "")


def test_validate_broken(tmp_path):
    bad = tmp_path / "broken.tri"
    bad.write_text(example_path("fig2").read_text() + "triangle t7+ t3+ t4+\n")
    code, out, _ = call("validate", str(bad))
    assert code == 1
    assert "arc multiplicity: t7" in out


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.tri"
    bad.write_text("arc t1\narc t2\ntriangle t1+ t2\n")
    code, _, err = call("dims", str(bad))
    assert code == 1 and "line 3" in err


def test_missing_file_is_usage_error():
    assert call("topology", "/nonexistent/x.tri")[0] == 2


def test_usage_errors():
    assert call()[0] == 2
    assert call("dims", FIG2, "--max-n", "-1")[0] == 2
    assert call("dims", FIG2, "--method", "magic")[0] == 2
    assert call("flip", FIG2, "--arc", "b1")[0] == 2


def test_topology():
    code, out, _ = call("topology", FIG2)
    assert code == 0
    assert "genus 0\nboundary_components 3\nmarked_points 4\n" in out
    assert "internal_triangles 3\n" in out


def test_quiver_dump():
    code, out, _ = call("quiver", FIG2)
    lines = out.splitlines()
    assert code == 0
    assert sum(l.startswith("vertex ") for l in lines) == 7
    assert sum(l.startswith("arrow ") for l in lines) == 11
    assert sum(l.startswith("relation ") for l in lines) == 9
    assert "arrow 0/t7->t1 t7 t1" in lines


def test_dims_both_fig2():
    code, out, _ = call("dims", FIG2, "--max-n", "14", "--method", "both")
    assert code == 0
    assert "methods agree: yes" in out
    code, out, _ = call("dims", FIG2, "--max-n", "14", "--format", "tsv")
    rows = tsv_rows(out)
    assert [r[1] for r in rows] == [7, 0, 3, 3, 0, 0, 0, 0, 3, 3, 0, 0, 0, 0, 3]
    assert [n for n, _, hc, _ in rows if hc == 10] == [2, 8, 14]


def test_flip_then_dims(tmp_path):
    target = tmp_path / "out.tri"
    assert call("flip", FIG2, "--arc", "t7", "-o", str(target))[0] == 0
    code, out, _ = call("dims", str(target), "--max-n", "8", "--format", "tsv")
    rows = tsv_rows(out)
    assert [n for n, hh, _, _ in rows if hh == 2] == [2, 3, 8]
    assert [n for n, _, hc, _ in rows if hc == 9] == [2, 8]


def test_flip_roundtrip(tmp_path):
    once, twice = tmp_path / "a.tri", tmp_path / "b.tri"
    call("flip", FIG2, "--arc", "t7", "-o", str(once))
    call("flip", str(once), "--arc", "t7'", "-o", str(twice))
    assert call("validate", str(twice))[0] == 0
    assert call("dims", str(twice), "--format", "tsv")[1] == call("dims", FIG2, "--format", "tsv")[1]


def test_flip_to_stdout_matches_file(tmp_path):
    target = tmp_path / "out.tri"
    call("flip", FIG2, "--arc", "t3", "-o", str(target))
    assert call("flip", FIG2, "--arc", "t3")[1] == target.read_text()


def test_compare():
    code, out, _ = call("compare", FIG2, FIG3, "--max-n", "14")
    assert code == 0
    assert out == ("HH differs at n: 2 3 8 9 14\n"
                   "HC differs at n: 2 8 14\n"
                   "HC^ differs at n: 2 8 14\n")
    assert call("compare", FIG2, FIG2)[1].count("none") == 3


def test_oracle_method():
    code, out, _ = call("dims", str(example_path("triangle_hexagon")), "--method", "oracle",
                        "--max-n", "4", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1:] == ["0\t3\t-\t-", "1\t0\t-\t-", "2\t1\t-\t-", "3\t1\t-\t-", "4\t0\t-\t-"]


def test_oracle_cap_exit_code():
    code, out, err = call("dims", FIG2, "--method", "oracle", "--max-n", "4", "--oracle-cap", "100")
    assert code == 3
    assert "not checked" in err
    assert " - " in out or out.rstrip().endswith("-")


def test_render_table_tsv():
    t = closed_table(AlgebraSummary(7, 3), 2)
    assert render_table(t, "tsv") == "n\tHH\tHC\tHCco\n0\t7\t7\t7\n1\t0\t0\t0\n2\t3\t10\t10\n"
    fig3 = closed_table(AlgebraSummary(7, 2), 2)
    assert render_table(fig3, "tsv").splitlines()[3] == "2\t2\t9\t9"
    assert len(render_table(closed_table(AlgebraSummary(7, 3), 0), "tsv").splitlines()) == 2


def test_render_table_pretty_aligned():
    text = render_table(closed_table(AlgebraSummary(7, 3), 12), "pretty", ["x"])
    lines = text.splitlines()
    assert len({len(l) for l in lines[:-1]}) == 1
    assert lines[-1] == "x"


def test_render_unknown_format():
    with pytest.raises(ValueError):
        render_table(closed_table(AlgebraSummary(1, 0), 1), "json")


def test_subprocess_output_is_deterministic():
    cmd = [sys.executable, "-m", "surfhom", "dims", FIG2, "--method", "both", "--max-n", "20"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and b"methods agree: yes" in a
