"""Command line surface: subcommands, exit codes, deterministic bytes."""

import io
import json

import pytest

from grhopf.cli import main

P3_TEXT = "v a\nv b\nv c\ne a b\ne b c\n"


@pytest.fixture
def p3_path(tmp_path):
    path = tmp_path / "p3.graph"
    path.write_text(P3_TEXT, encoding="utf-8")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_count(capsys, p3_path):
    code, out, err = run(capsys, ["enumerate", "--monoid", "L", "--graph", p3_path])
    assert (code, out, err) == (0, "6\n", "")


def test_enumerate_list(capsys, p3_path):
    code, out, err = run(
        capsys, ["enumerate", "--monoid", "AO", "--graph", p3_path, "--list"]
    )
    assert code == 0
    assert out == "a>b,b>c\na>b,c>b\nb>a,b>c\nb>a,c>b\n"


def test_graph_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(P3_TEXT))
    code, out, err = run(capsys, ["enumerate", "--monoid", "E", "--graph", "-"])
    assert (code, out) == (0, "1\n")


def test_product(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "product",
            "--monoid",
            "L",
            "--graph",
            p3_path,
            "--split",
            "a,b|c",
            "--left",
            "b<a",
            "--right",
            "c",
        ],
    )
    assert (code, out) == (0, "(1) b<a<c\n")


def test_coproduct(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "coproduct",
            "--monoid",
            "L",
            "--graph",
            p3_path,
            "--split",
            "b|a,c",
            "--key",
            "a<b<c",
        ],
    )
    assert (code, out) == (0, "(q) b (x) a<c\n")


def test_antipode_single_method(capsys, p3_path):
    code, out, err = run(
        capsys,
        ["antipode", "--monoid", "L", "--graph", p3_path, "--key", "a<b<c"],
    )
    assert (code, out) == (0, "(-q^2*t) c<b<a\n")


def test_antipode_all_methods(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "antipode",
            "--monoid",
            "L",
            "--graph",
            p3_path,
            "--key",
            "a<b<c",
            "--method",
            "all",
        ],
    )
    assert code == 0
    assert out == (
        "takeuchi: (-q^2*t) c<b<a\n"
        "milnor-moore-left: (-q^2*t) c<b<a\n"
        "milnor-moore-right: (-q^2*t) c<b<a\n"
        "closed: (-q^2*t) c<b<a\n"
        "verdict: AGREE\n"
    )


def test_antipode_all_skips_missing_closed_form(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "antipode",
            "--monoid",
            "SPi_m",
            "--graph",
            p3_path,
            "--key",
            "a,c/b",
            "--method",
            "all",
        ],
    )
    assert code == 0
    assert "closed:" not in out
    assert out.endswith("verdict: AGREE\n")


def test_basis_change(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "basis-change",
            "--monoid",
            "Pi_m",
            "--graph",
            p3_path,
            "--to",
            "Pi_p",
            "--key",
            "a,b/c",
        ],
    )
    assert (code, out) == (0, "(1) a,b/c + (1) a/b/c\n")


def test_morphism(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "morphism",
            "--name",
            "iota_L_SSigma",
            "--monoid",
            "L",
            "--graph",
            p3_path,
            "--key",
            "b<a<c",
        ],
    )
    assert (code, out) == (0, "(1) b|a|c\n")


def test_corpus_stats(capsys):
    code, out, err = run(capsys, ["corpus-stats", "--nmax", "2"])
    assert code == 0
    assert out == "n=0: 1 graphs\nn=1: 1 graphs\nn=2: 2 graphs\ntotal: 4 graphs\n"


def test_verify_summary_and_json(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, err = run(
        capsys,
        [
            "verify",
            "--suite",
            "stanley",
            "--nmax",
            "2",
            "--json",
            str(report_path),
        ],
    )
    assert code == 0
    assert out == "suite=stanley n_max=2 graphs=4 checks=4 passed=4 failed=0 -> PASS\n"
    data = json.loads(report_path.read_text(encoding="utf-8"))
    assert data["schema"] == "grhopf.report/1"
    assert data["summary"] == {"checks": 4, "passed": 4, "failed": 0}
    assert "wall_time_s" in data
    # file is written with sorted keys for stable diffs
    assert list(data) == sorted(data)


def test_verify_monoid_filter(capsys):
    code, out, err = run(
        capsys,
        ["verify", "--suite", "bimonoid", "--nmax", "2", "--monoid", "L", "--monoid", "AO"],
    )
    assert code == 0
    assert "checks=8 passed=8 failed=0 -> PASS" in out


def test_reruns_are_byte_identical(capsys, p3_path):
    argv = ["antipode", "--monoid", "Sigma", "--graph", p3_path, "--key", "a|b,c"]
    first = run(capsys, argv)
    second = run(capsys, argv)
    assert first == second


def test_jobs_env(capsys, monkeypatch):
    monkeypatch.setenv("GRHOPF_JOBS", "2")
    code, out, err = run(capsys, ["verify", "--suite", "stanley", "--nmax", "2"])
    assert code == 0
    assert out.endswith("-> PASS\n")


def test_jobs_env_invalid(capsys, monkeypatch):
    monkeypatch.setenv("GRHOPF_JOBS", "many")
    code, out, err = run(capsys, ["verify", "--suite", "stanley", "--nmax", "1"])
    assert code == 2
    assert err.startswith("error: GRHOPF_JOBS must be an integer")


def test_error_exit_codes(capsys, tmp_path, p3_path):
    code, out, err = run(capsys, ["enumerate", "--monoid", "L", "--graph", str(tmp_path / "nope")])
    assert code == 2
    assert err.startswith("error: cannot read graph file")

    code, out, err = run(
        capsys,
        ["coproduct", "--monoid", "L", "--graph", p3_path, "--split", "a|b", "--key", "a<b<c"],
    )
    assert code == 2
    assert "does not partition" in err

    code, out, err = run(
        capsys,
        ["coproduct", "--monoid", "L", "--graph", p3_path, "--split", "a|b|c", "--key", "a<b<c"],
    )
    assert code == 2
    assert "exactly one '|'" in err

    code, out, err = run(
        capsys,
        ["antipode", "--monoid", "L", "--graph", p3_path, "--key", "a<b"],
    )
    assert code == 2
    assert err.startswith("error:")

    code, out, err = run(
        capsys,
        ["basis-change", "--monoid", "Pi_m", "--graph", p3_path, "--to", "FL_M", "--key", "a,b/c"],
    )
    assert code == 2
    assert err.startswith("error:")


def test_split_tolerates_spaces(capsys, p3_path):
    code, out, err = run(
        capsys,
        [
            "coproduct",
            "--monoid",
            "Pi_m",
            "--graph",
            p3_path,
            "--split",
            " b , c | a ",
            "--key",
            "a,b/c",
        ],
    )
    assert code == 0
    assert "(x)" in out
