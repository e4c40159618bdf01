from __future__ import annotations

import io
import json
from pathlib import Path

import pytest

from knotpoly.cli import RunConfig, main, run
from knotpoly.locus import Region

GOLDEN = Path(__file__).parent / "golden"

# typed from the published tables, highest power first
V_PUBLISHED = {
    1: "+t^5 -2*t^4 +2*t^3 -2*t^2 +2*t -1 +t^-1",
    2: "+t^7 -4*t^6 +8*t^5 -12*t^4 +15*t^3 -16*t^2 +15*t -11 +8*t^-1 -4*t^-2 +t^-3",
    3: "+t^12 -6*t^11 +18*t^10 -38*t^9 +64*t^8 -91*t^7 +111*t^6 -118*t^5 +111*t^4 "
       "-92*t^3 +66*t^2 -39*t +19 -6*t^-1 +t^-2",
}


def _golden(name):
    lines = (GOLDEN / name).read_text().splitlines(keepends=True)
    return "".join(l for l in lines if not l.startswith("## "))


def _run(argv, capsys):
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.mark.parametrize("argv,name", [
    (["jones", "--m", "1"], "jones_m1.txt"),
    (["jones", "--m", "2"], "jones_m2.txt"),
    (["jones", "--m", "3"], "jones_m3.txt"),
    (["tutte", "--m", "1"], "tutte_m1.txt"),
    (["endpoints"], "endpoints.txt"),
    (["zeros", "--m", "1", "--format", "csv"], "zeros_m1.csv"),
    (["locus", "--grid", "20", "--format", "csv"], "locus_grid20.csv"),
    (["verify", "--suite", "values"], "verify_values.txt"),
])
def test_golden(argv, name, capsys):
    code, out, _ = _run(argv, capsys)
    assert code == 0
    assert out == _golden(name)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_jones_golden_is_published(m):
    first = _golden(f"jones_m{m}.txt").splitlines()[0]
    assert first.split(" = ", 1)[1] == V_PUBLISHED[m]


def test_jones_machine(capsys):
    code, out, _ = _run(["jones", "--m", "1", "--format", "machine"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["r"] == 6 and doc["terms"][0] == [5, "1"]
    assert doc["mirror_terms"][0] == [1, "1"]


def test_jones_verbose_flag(capsys):
    _, out, _ = _run(["jones", "--m", "11", "--verbose"], capsys)
    assert out.startswith("# m=11 r=46")
    assert "conjectured" in out


def test_tutte_cache(tmp_path, capsys):
    _, a, _ = _run(["tutte", "--m", "3", "--cache", str(tmp_path)], capsys)
    assert (tmp_path / "T_Sm_3.poly").exists()
    _, b, _ = _run(["tutte", "--m", "3", "--cache", str(tmp_path)], capsys)
    assert a == b


def test_corrupt_cache_exit_1(tmp_path):
    (tmp_path / "T_Sm_2.poly").write_text("+x\n")
    err = io.StringIO()
    assert run(RunConfig("tutte", m=2, cache_dir=tmp_path), io.StringIO(), err) == 1
    assert "CorruptCache" in err.getvalue()


@pytest.mark.parametrize("argv", [
    ["jones"],
    ["zeros", "--m", "0"],
    ["locus", "--grid", "1"],
    ["locus", "--eps", "0"],
    ["locus", "--re-min", "2", "--re-max", "1"],
    ["bogus"],
    ["tutte", "--m", "1", "--format", "png"],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_invalid_parameter_exit_2():
    err = io.StringIO()
    assert run(RunConfig("zeros", m=500), io.StringIO(), err) == 2
    assert "error" in err.getvalue()


def test_outputs_to_files(tmp_path, capsys):
    csv, svg = tmp_path / "z.csv", tmp_path / "z.svg"
    code, out, _ = _run(["zeros", "--m", "2", "--out", str(csv), "--svg", str(svg)], capsys)
    assert code == 0 and out == ""
    assert csv.read_text().startswith("re,im\n")
    assert len(csv.read_text().splitlines()) == 11
    assert svg.read_text().startswith("<svg")


def test_bad_output_path_exit_1(tmp_path):
    cfg = RunConfig("zeros", m=1, out=tmp_path / "no" / "z.csv")
    assert run(cfg, io.StringIO(), io.StringIO()) == 1


def test_locus_text(capsys):
    code, out, _ = _run(["locus", "--grid", "10"], capsys)
    assert code == 0
    assert out.startswith("# samples=")


def test_verify_exit_code(capsys):
    code, out, _ = _run(["verify", "--suite", "endpoints"], capsys)
    assert code == 0
    assert out.rstrip().endswith("checks passed")


@pytest.mark.parametrize("argv", [
    ["tutte", "--m", "4"],
    ["jones", "--m", "7", "--format", "machine"],
    ["zeros", "--m", "5"],
    ["locus", "--grid", "30", "--format", "svg"],
    ["endpoints", "--format", "machine"],
    ["verify", "--suite", "identities"],
])
def test_deterministic(argv, capsys):
    _, a, _ = _run(argv, capsys)
    _, b, _ = _run(argv, capsys)
    assert a == b and a


def test_region_in_config():
    cfg = RunConfig("locus", region=Region(-1, 1, -1, 1), grid=8)
    out = io.StringIO()
    assert run(cfg, out, io.StringIO()) == 0
