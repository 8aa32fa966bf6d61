import json

from jumplines.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_deterministic_bytes(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["gen", "--count", "8", "--field", "fp:101", "--seed", "1", "--out", str(a)]) == 0
    assert main(["gen", "--count", "8", "--field", "fp:101", "--seed", "1", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    payload = json.loads(a.read_text())
    assert payload["field"] == "fp:101" and len(payload["points"]) == 8


def test_gen_field_too_small(capsys):
    code, _, err = run(capsys, "gen", "--count", "8", "--field", "fp:5", "--seed", "1")
    assert code == 2
    assert "degenerate" in err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "jump")
    assert code == 1
    code2, _, _ = run(capsys, "jump", "--config", "/nonexistent/file.json")
    assert code2 == 1


def test_unknown_command_exit_code(capsys):
    assert main(["definitely-not-a-command"]) == 1
    capsys.readouterr()


def test_jump_six_points_json_and_csv(tmp_path, capsys):
    cfgp = tmp_path / "c6.json"
    assert main(["gen", "--count", "6", "--seed", "1", "--out", str(cfgp)]) == 0
    outp = tmp_path / "rep.json"
    assert main(["jump", "--config", str(cfgp), "--out", str(outp)]) == 0
    rep = json.loads(outp.read_text())
    assert all(rep["verdicts"].values())
    assert rep["counts"]["jumping_points"] == 6
    outc = tmp_path / "rep.csv"
    assert main(["jump", "--config", str(cfgp), "--format", "csv", "--out", str(outc)]) == 0
    lines = outc.read_text().splitlines()
    assert lines[0] == "x0,x1,x2,eps1,eps2,order,in_z,in_gamma"
    assert len(lines) == 1 + 101 * 101 + 101 + 1
    # replay is byte identical
    outp2 = tmp_path / "rep2.json"
    assert main(["jump", "--config", str(cfgp), "--out", str(outp2)]) == 0
    assert outp.read_bytes() == outp2.read_bytes()


def test_monoidal_command(tmp_path, capsys):
    cfgp = tmp_path / "c5.json"
    assert main(["gen", "--count", "5", "--seed", "1", "--out", str(cfgp)]) == 0
    code, out, _ = run(capsys, "monoidal", "--config", str(cfgp))
    assert code == 0
    payload = json.loads(out)
    assert payload["degree"] == 2 and len(payload["coeffs"]) == 6


def test_gamma_command(tmp_path, capsys):
    cfgp = tmp_path / "c8.json"
    assert main(["gen", "--count", "8", "--seed", "1", "--out", str(cfgp)]) == 0
    code, out, _ = run(capsys, "gamma", "--config", str(cfgp))
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == len(payload["gamma"])


def test_pencil4_command(tmp_path, capsys):
    cfgp = tmp_path / "c8.json"
    assert main(["gen", "--count", "8", "--seed", "1", "--out", str(cfgp)]) == 0
    code, out, _ = run(capsys, "pencil4", "--config", str(cfgp))
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == {"r16": 16, "r4": 4, "r12": 12}
    assert payload["squarefree"] is True
    assert sum(t for _, t in payload["closure_degree_buckets"]) == 12


def test_degrees_command(capsys):
    code, out, _ = run(capsys, "degrees", "--n-max", "6")
    assert code == 0
    rows = json.loads(out)
    assert [r["n"] for r in rows] == [2, 3, 4, 5, 6]
    assert rows[1]["deg"] == 12 and rows[2]["jumping_length"] == 36


def test_render_five_points(tmp_path, capsys):
    cfgp = tmp_path / "c5q.json"
    assert main(["gen", "--count", "5", "--field", "q", "--seed", "2", "--out", str(cfgp)]) == 0
    svg = tmp_path / "c5.svg"
    assert main(["render", "--config", str(cfgp), "--out", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and text.count("<circle") == 5 and "<line" in text


def test_render_contour_tracks_the_conic(tmp_path):
    from jumplines.algebra import RATIONALS
    from jumplines.forms import curves_through, monomials
    from jumplines.geom import random_config
    from jumplines.render import contour_segments

    cfg = random_config(5, RATIONALS, seed=2)
    conic = curves_through(cfg, 2).basis[0]
    window = ((-3.0, 3.0), (-3.0, 3.0))
    segs = contour_segments(conic, window, 200)
    assert segs
    scale = max(abs(float(c)) for c in conic.coeffs)
    for (ax, ay), (bx, by) in segs[:200]:
        mx, my = (ax + bx) / 2, (ay + by) / 2
        val = sum(
            float(c) * mx ** a * my ** b
            for (a, b, _e), c in zip(monomials(2), conic.coeffs)
        )
        assert abs(val) < 0.15 * scale * (1 + mx * mx + my * my)


def test_render_rejects_prime_field(tmp_path, capsys):
    cfgp = tmp_path / "c5p.json"
    assert main(["gen", "--count", "5", "--field", "fp:101", "--seed", "1", "--out", str(cfgp)]) == 0
    code, _, err = run(capsys, "render", "--config", str(cfgp))
    assert code == 2 and "rational" in err


def test_render_seven_points_degree_six(tmp_path):
    from jumplines.algebra import RATIONALS
    from jumplines.forms import monoidal_det
    from jumplines.geom import random_config

    cfg = random_config(7, RATIONALS, seed=1)
    assert monoidal_det(cfg).degree == 6
    from jumplines.render import render_svg

    text = render_svg(cfg, grid=60)
    assert text.count("<circle") == 7


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--seeds", "1")
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("[")]
    assert len(lines) == 10
    assert all(l.startswith("[PASS]") for l in lines)
