import io
import json

import pytest

from magforest.cli import main

CIRCLE = {"curve": {"type": "circle", "center": [0, 0], "radius": 1}, "sampling": {"count": 360}, "hiker": [0.25, 0]}


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def scene(tmp_path):
    def write(doc, name="scene.json"):
        p = tmp_path / name
        p.write_text(json.dumps(doc) if isinstance(doc, dict) else doc, encoding="utf-8")
        return p
    return write


def assert_one_line_failure(code, out, err, expected):
    assert code == expected
    assert out == ""
    assert err.count("\n") == 1 and err.startswith("magforest: error:")


def test_escape_row(scene):
    assert run("escape", scene(CIRCLE)) == (0, "0.25,0,1,0,0.75,1.0,1\n", "")


def test_escape_header(scene):
    code, out, _ = run("escape", scene(CIRCLE), "--header")
    assert out.splitlines()[0] == "hiker_x,hiker_y,exit_x,exit_y,length,ortho_residual,tie_count"


def test_magnetize_row(scene):
    assert run("magnetize", scene(CIRCLE))[1] == "0.25,0,0,1,0,0.75,1.0,0\n"


def test_origin_hiker(scene):
    p = scene({**CIRCLE, "hiker": [0, 0]})
    assert_one_line_failure(*run("escape", p), 1)
    code, out, _ = run("magnetize", p, "--strict-origin", "false")
    assert code == 0
    assert out.rstrip().split(",")[-1] == ";".join(map(str, range(360)))


def test_missing_scene():
    code, out, err = run("escape", "missing.json")
    assert_one_line_failure(code, out, err, 2)
    assert "scene not found" in err


def test_malformed_scene(scene):
    assert_one_line_failure(*run("escape", scene("{oops")), 2)


def test_bowtie_scene(scene):
    p = scene({"curve": {"type": "polygon", "vertices": [[0, 0], [1, 1], [1, 0], [0, 1]]}})
    assert_one_line_failure(*run("escape", p), 1)


def test_exterior_hiker(scene):
    assert_one_line_failure(*run("escape", scene({**CIRCLE, "hiker": [3, 0]})), 1)


def test_missing_hiker(scene):
    doc = {k: v for k, v in CIRCLE.items() if k != "hiker"}
    assert_one_line_failure(*run("escape", scene(doc)), 2)


@pytest.mark.parametrize("argv", [[], ["fly"], ["escape"], ["mc", "x.json", "--trials", "many"],
                                  ["escape", "x.json", "--strict-origin", "maybe"]])
def test_argument_errors(argv):
    assert_one_line_failure(*run(*argv), 2)


def test_mc(scene):
    code, out, _ = run("mc", scene(CIRCLE), "--trials", 300, "--seed", 42)
    assert code == 0
    header, row = out.splitlines()
    assert header == "trials,mean_length,stddev,max_length,seed"
    fields = row.split(",")
    assert fields[0] == "300" and fields[-1] == "42"
    assert abs(float(fields[1]) - 1 / 3) < 0.05


def test_mc_bad_trials(scene):
    assert_one_line_failure(*run("mc", scene(CIRCLE), "--trials", 0), 1)


def test_convergence(scene):
    code, out, _ = run("convergence", scene({**CIRCLE, "hiker": [0.5, 0]}), "--resolutions", "90,360")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "resolution,measure,analytic,error" and len(lines) == 3
    assert lines[1].startswith("90,")


def test_convergence_bad_order(scene):
    assert_one_line_failure(*run("convergence", scene(CIRCLE), "--resolutions", "360,90"), 1)


def test_classify(scene):
    a = scene(CIRCLE, "a.json")
    b = scene({**CIRCLE, "curve": {"type": "circle", "center": [0, 0], "radius": 2}}, "b.json")
    c = scene({**CIRCLE, "curve": {"type": "circle", "center": [10, 0], "radius": 1}}, "c.json")
    assert run("classify", a, b, c) == (0, "class,members\n0,0;1\n1,2\n", "")


def test_render_to_file(scene, tmp_path):
    out = tmp_path / "o.svg"
    code, stdout, _ = run("render", scene(CIRCLE), "--out", out)
    assert code == 0 and stdout == ""
    assert out.read_text(encoding="utf-8").startswith("<?xml")


def test_render_to_stdout(scene):
    code, out, _ = run("render", scene(CIRCLE))
    assert code == 0 and out.rstrip().endswith("</svg>")


def test_bench_small():
    code, out, _ = run("bench", "--magnets", 1000, "--queries", 100)
    assert code == 0
    header, row = out.splitlines()
    assert header.split(",")[-1] == "ids_match"
    assert row.startswith("1000,100,") and row.endswith(",true")


def test_module_entry_point(scene):
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "magforest", "escape", str(scene(CIRCLE))],
                       capture_output=True, text=True, check=False)
    assert (r.returncode, r.stdout) == (0, "0.25,0,1,0,0.75,1.0,1\n")
