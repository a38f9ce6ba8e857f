import json

import pytest

from wedgelab import incidence
from wedgelab.cli import run_subcommand
from wedgelab.geom import RotationRecord
from wedgelab.incidence import CorrespondenceReport


def run(*argv):
    return run_subcommand(list(argv))


def test_gen_then_count_areas(tmp_path, capsys):
    out = tmp_path / "g3.pts"
    assert run("gen", "grid", "--n", "3", "-o", str(out)) == 0
    assert out.exists()
    assert run("count", "areas", str(out)) == 0
    captured = capsys.readouterr()
    assert captured.out.strip().splitlines()[-1] == "8"


def test_count_dots_energy_and_json(tmp_path, capsys):
    pts = tmp_path / "g3.pts"
    run("gen", "grid", "--n", "3", "-o", str(pts))
    jout = tmp_path / "dots.json"
    assert run("count", "dots", str(pts), "--json", str(jout)) == 0
    assert json.loads(jout.read_text())["distinct_dots"] == 14
    assert run("count", "energy", str(pts)) == 0
    assert capsys.readouterr().out.strip().splitlines()[-1] == "183"


def test_count_bipartite_other(tmp_path, capsys):
    p = tmp_path / "p.pts"
    q = tmp_path / "q.pts"
    p.write_text("1 0\n")
    q.write_text("0 1\n0 2\n")
    assert run("count", "areas", str(p), "--other", str(q)) == 0
    assert capsys.readouterr().out.strip() == "2"


def test_count_missing_file_is_usage_error(capsys):
    assert run("count", "areas", "no-such-file.pts") == 2
    assert "error" in capsys.readouterr().err


def test_usage_errors():
    assert run("count", "nonsense", "x.pts") == 2
    assert run("frobnicate") == 2
    assert run("sumprod") == 2  # neither file nor --upto


def test_lines_export_and_projection(tmp_path):
    pts = tmp_path / "g2.pts"
    run("gen", "grid", "--n", "2", "-o", str(pts))
    out4 = tmp_path / "fam4.lines"
    out3 = tmp_path / "fam3.lines"
    assert run("lines", str(pts), "-o", str(out4)) == 0
    assert run("lines", str(pts), "-o", str(out3), "--projected", "--oriented") == 0
    from wedgelab.io import read_line_family

    fam4 = read_line_family(out4)
    fam3 = read_line_family(out3)
    assert len(fam4) == 10
    assert len(fam3) == 5
    assert fam3.ambient_dim == 3


def test_verify_correspondence_ok(tmp_path):
    pts = tmp_path / "g2.pts"
    run("gen", "grid", "--n", "2", "-o", str(pts))
    assert run("verify", "correspondence", str(pts)) == 0


def test_verify_invariants_ok(tmp_path, capsys):
    pts = tmp_path / "c4.pts"
    run("gen", "circle", "--n", "4", "-o", str(pts))
    assert run("verify", "invariants", str(pts)) == 0
    assert "ok: True" in capsys.readouterr().out


def test_verify_invariants_handles_scaled_twins(tmp_path, capsys):
    # grid(4) holds index pairs that are scalar multiples of one another, the
    # one legitimate source of repeated lines
    pts = tmp_path / "g4.pts"
    run("gen", "grid", "--n", "4", "-o", str(pts))
    assert run("verify", "invariants", str(pts)) == 0
    assert "ok: True" in capsys.readouterr().out


def test_gen_is_byte_stable(tmp_path):
    a = tmp_path / "a.pts"
    b = tmp_path / "b.pts"
    run("gen", "random", "--n", "7", "--denom", "9", "--seed", "11", "-o", str(a))
    run("gen", "random", "--n", "7", "--denom", "9", "--seed", "11", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_verify_gkt_ok_and_json(tmp_path):
    pts = tmp_path / "tri.pts"
    pts.write_text("1 0\n0 1\n1 1\n")
    jout = tmp_path / "gkt.json"
    assert run("verify", "gkt", str(pts), "--json", str(jout)) == 0
    payload = json.loads(jout.read_text())
    assert payload["ok"] is True
    assert payload["max_concurrency"] <= payload["n_points"]


def test_verify_falsified_exits_one(tmp_path, monkeypatch, capsys):
    pts = tmp_path / "g2.pts"
    run("gen", "grid", "--n", "2", "-o", str(pts))

    def fake_check(ps, cap=12, witness_limit=6):
        return CorrespondenceReport(
            quadruple_count=4,
            line_pair_count=5,
            rotation=RotationRecord(1, 0, 0),
        )

    monkeypatch.setattr(incidence, "correspondence_check", fake_check)
    assert run("verify", "correspondence", str(pts)) == 1
    assert "FALSIFIED" in capsys.readouterr().err


def test_verify_cap_exceeded_is_usage_error(tmp_path):
    pts = tmp_path / "g4.pts"
    run("gen", "grid", "--n", "4", "-o", str(pts))
    assert run("verify", "correspondence", str(pts), "--max-n", "12") == 2


def test_sumprod_upto_and_file(tmp_path, capsys):
    assert run("sumprod", "--upto", "2") == 0
    out = capsys.readouterr().out
    assert "product_sumset_minus: 7" in out
    assert "dio_solutions: 54" in out
    assert "cs_ok: True" in out

    reals = tmp_path / "a.reals"
    reals.write_text("1\n2\n3\n")
    jout = tmp_path / "sp.json"
    assert run("sumprod", str(reals), "--json", str(jout)) == 0
    payload = json.loads(jout.read_text())
    assert payload["dio_solutions"] == 591
    assert payload["grid_wedge_equivalence"] is True


def test_report_from_generator_and_stability(tmp_path):
    j1 = tmp_path / "r1.json"
    j2 = tmp_path / "r2.json"
    assert run("report", "--gen", "grid", "--n", "2", "--json", str(j1)) == 0
    assert run("report", "--gen", "grid", "--n", "2", "--json", str(j2)) == 0
    assert j1.read_bytes() == j2.read_bytes()
    payload = json.loads(j1.read_text())
    assert payload["distinct_areas"] == 3
    assert payload["quadruples_restricted"] == payload["intersections_4d"] == 4
    assert payload["generator"] == "grid(n=2)"
    keys = list(payload)
    assert keys[:11] == [
        "n_points",
        "distinct_areas",
        "distinct_dots",
        "energy",
        "quadruples_restricted",
        "line_count",
        "intersections_4d",
        "intersections_3d",
        "max_concurrency",
        "max_coplanar",
        "regulus_max",
    ]


def test_report_needs_exactly_one_source(tmp_path):
    pts = tmp_path / "g2.pts"
    run("gen", "grid", "--n", "2", "-o", str(pts))
    assert run("report") == 2
    assert run("report", str(pts), "--gen", "grid", "--n", "2") == 2


def test_report_collinear_is_all_zero(tmp_path):
    jout = tmp_path / "c.json"
    assert run("report", "--gen", "collinear", "--n", "5", "--json", str(jout)) == 0
    payload = json.loads(jout.read_text())
    assert payload["distinct_areas"] == 0
    assert payload["line_count"] == 0
    assert payload["intersections_4d"] == 0


def test_report_csv_appends(tmp_path):
    csv_path = tmp_path / "runs.csv"
    run("report", "--gen", "grid", "--n", "2", "--csv", str(csv_path))
    run("report", "--gen", "grid", "--n", "3", "--csv", str(csv_path))
    rows = csv_path.read_text().strip().splitlines()
    assert len(rows) == 3  # header + two runs
    assert rows[0].startswith("n_points,distinct_areas")
    assert rows[1].split(",")[0] == "4"
    assert rows[2].split(",")[0] == "9"


def test_report_figures(tmp_path):
    figs = tmp_path / "figs"
    csv_path = tmp_path / "runs.csv"
    assert (
        run(
            "report",
            "--gen",
            "grid",
            "--n",
            "2",
            "--csv",
            str(csv_path),
            "--figures",
            str(figs),
        )
        == 0
    )
    written = sorted(p.name for p in figs.iterdir())
    assert written == ["grid2_histogram.png", "grid2_ratios.png", "trend.png"]
    for p in figs.iterdir():
        assert p.stat().st_size > 0


def test_report_from_file_uses_stored_provenance(tmp_path):
    pts = tmp_path / "r.pts"
    run("gen", "random", "--n", "6", "--denom", "9", "--seed", "5", "-o", str(pts))
    jout = tmp_path / "r.json"
    assert run("report", str(pts), "--json", str(jout)) == 0
    payload = json.loads(jout.read_text())
    assert payload["generator"] == "random(n=6,denom=9,seed=5)"
