"""Command-line surface: subcommands, exit codes, deterministic output."""

import pytest

from freedgl.cli import run
from freedgl.serialize import parse_dgl

CIRCLE = "0 1\n1 2\n0 2\n"
FIG8 = "0 1\n1 2\n0 2\n0 3\n3 4\n0 4\n"


def go(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bch_pinned_prefix(capsys):
    code, out, _ = go(capsys, ["bch", "--trunc", "3"])
    assert code == 0
    assert out.startswith("1 x1 + 1 x2 + 1/4 [x1,x2] - 1/4 [x2,x1]")


def test_build_model_interval_values(capsys):
    code, out, _ = go(capsys, ["build-model", "--n", "1", "--trunc", "6"])
    assert code == 0
    edge = [l for l in out.splitlines() if l.startswith("d a01")][0]
    assert "-1 a0 + 1 a1" in edge
    assert "- 1/4 [a0,a01] - 1/4 [a1,a01] + 1/4 [a01,a0] + 1/4 [a01,a1]" in edge


def test_build_model_out_file(tmp_path, capsys):
    path = tmp_path / "tri.dgl"
    code, out, _ = go(capsys, ["build-model", "--n", "2", "--trunc", "3",
                               "--out", str(path)])
    assert code == 0 and out == ""
    L = parse_dgl(path.read_text())
    assert not list(L.check_d_squared())


def test_model_of_complex_roundtrip(tmp_path, capsys):
    path = tmp_path / "circle.cpx"
    path.write_text(CIRCLE)
    code, out, _ = go(capsys, ["model-of-complex", "--complex", str(path),
                               "--trunc", "2"])
    assert code == 0
    L = parse_dgl(out)
    assert len(L.gens) == 6
    assert not list(L.check_d_squared())


def test_homology_of_complex(tmp_path, capsys):
    path = tmp_path / "circle.cpx"
    path.write_text(CIRCLE)
    code, out, _ = go(capsys, ["homology", "--complex", str(path),
                               "--trunc", "2"])
    assert code == 0
    assert "H[-1] = 1" in out and "H[0] = 1" in out


def test_homology_of_model_file(tmp_path, capsys):
    path = tmp_path / "tri.dgl"
    go(capsys, ["build-model", "--n", "2", "--trunc", "3",
                "--out", str(path)])
    code, out, _ = go(capsys, ["homology", "--model", str(path),
                               "--degrees=-2:0"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "homology"
    assert "H[-2] = 0" in lines and "H[-1] = 0" in lines and "H[0] = 0" in lines


def test_malcev_stages(tmp_path, capsys):
    path = tmp_path / "fig8.cpx"
    path.write_text(FIG8)
    code, out, _ = go(capsys, ["malcev", "--complex", str(path),
                               "--trunc", "3"])
    assert code == 0
    assert "stage 1: dim 2 new 2" in out
    assert "stage 2: dim 3 new 1" in out
    assert "stage 3: dim 5 new 2" in out


def test_pi_subcommand(tmp_path, capsys):
    fig8 = tmp_path / "fig8.cpx"
    fig8.write_text(FIG8)
    code, out, _ = go(capsys, ["pi", "--complex", str(fig8), "--n", "1",
                               "--trunc", "2"])
    assert code == 0
    assert "pi_1 dim 3" in out and "abelian no" in out

    circle = tmp_path / "circle.cpx"
    circle.write_text(CIRCLE)
    code, out, _ = go(capsys, ["pi", "--complex", str(circle), "--n", "1",
                               "--trunc", "3"])
    assert code == 0
    assert "pi_1 dim 1" in out and "abelian yes" in out
    code, out, _ = go(capsys, ["pi", "--complex", str(circle), "--n", "2",
                               "--trunc", "3"])
    assert code == 0
    assert "pi_2 dim 0" in out


def test_whitney_listing_and_suite(capsys):
    code, out, _ = go(capsys, ["whitney", "--n", "1"])
    assert code == 0
    assert "w_01 = dt1" in out
    code, out, _ = go(capsys, ["whitney", "--n", "2", "--check"])
    assert code == 0
    assert "FAIL" not in out
    assert "projection_splits_inclusion ok" in out


def test_check_clean_and_corrupted(tmp_path, capsys):
    path = tmp_path / "tri.dgl"
    go(capsys, ["build-model", "--n", "2", "--trunc", "4",
                "--out", str(path)])
    code, out, _ = go(capsys, ["check", "--model", str(path)])
    assert code == 0
    assert out.splitlines()[-1] == "ok"

    bad = tmp_path / "bad.dgl"
    bad.write_text(path.read_text().replace(
        "d a01 = -1 a0 + 1 a1", "d a01 = -1 a0 + 2 a1"))
    code, out, _ = go(capsys, ["check", "--model", str(bad)])
    assert code == 1
    assert "d_squared FAIL a01:" in out
    assert out.splitlines()[-1] == "FAIL"


def test_check_built_model_axioms(capsys):
    code, out, _ = go(capsys, ["check", "--n", "2", "--trunc", "3",
                               "--flavor", "symmetric"])
    assert code == 0
    for key in ("d_squared", "vertices_mc", "linear_part", "cofaces"):
        assert "%s ok" % key in out


def test_usage_errors_exit_two(capsys):
    for argv in (
        [],
        ["no-such-command"],
        ["bch", "--trunc", "0"],
        ["bch", "--count", "1"],
        ["build-model", "--n", "1", "--flavor", "fancy"],
        ["homology"],
        ["pi", "--complex", "x.cpx", "--n", "0"],
        ["check"],
        ["check", "--model", "/nonexistent/path.dgl"],
    ):
        code, _, err = go(capsys, argv)
        assert code == 2, argv
        assert err.strip(), argv


def test_parse_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.cpx"
    bad.write_text("0 1\n0 x\n")
    code, _, err = go(capsys, ["homology", "--complex", str(bad)])
    assert code == 2
    assert "line 2" in err

    disconnected = tmp_path / "two.cpx"
    disconnected.write_text("0\n1\n")
    code, _, err = go(capsys, ["malcev", "--complex", str(disconnected),
                               "--trunc", "2"])
    assert code == 2
    assert "components" in err


def test_repeat_runs_are_identical(tmp_path, capsys):
    path = tmp_path / "fig8.cpx"
    path.write_text(FIG8)
    argv = ["model-of-complex", "--complex", str(path), "--trunc", "3"]
    _, first, _ = go(capsys, argv)
    _, second, _ = go(capsys, argv)
    assert first == second and first
