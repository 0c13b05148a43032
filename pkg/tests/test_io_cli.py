import io as stdio
import json
import random
import subprocess
import sys

import pytest

from supportcalc import GradedRing, io
from supportcalc.cli import main, parse_window
from supportcalc.complexes import FreeComplex, GradedModule
from supportcalc.dg import BicomplexInput, WindowError
from supportcalc.random_instances import random_complex
from supportcalc.suites import CHECKS, SuiteConfig, replay, run_suite
from supportcalc.support import koszul_object

R = GradedRing(101, [("x", 2), ("y", 2)])
RING = {"characteristic": 101, "variables": [["x", 2], ["y", 2]]}
SPEC = {"primes": [{"label": "(0)", "generators": []}, {"label": "(x)", "generators": ["x"]},
                   {"label": "(y)", "generators": ["y"]}, {"label": "(x,y)", "generators": ["x", "y"]}]}


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)

    A = FreeComplex.free_module(R)
    return {
        "ring": write("ring.json", RING),
        "spec": write("spec.json", SPEC),
        "kx": write("kx.json", io.complex_to_json(koszul_object(A, "x"), include_ring=False)),
        "zero": write("zero.json", {"degrees": []}),
        "A": write("a.json", {"degrees": [{"degree": 0, "twists": [0]}]}),
        "bad": write("bad.json", {"degrees": [{"degree": 0}, {"degree": 2}]}),
        "dir": tmp_path,
    }


def run(argv, environ=None):
    out = stdio.StringIO()
    code = main(argv, out=out, environ=environ or {})
    return code, out.getvalue()


def test_complex_round_trip():
    rng = random.Random(4)
    for _ in range(10):
        X = random_complex(R, rng)
        Y = io.complex_from_json(json.loads(json.dumps(io.complex_to_json(X))))
        assert Y.lo == X.lo and Y.terms == X.terms
        assert all(a == b for a, b in zip(X.diffs, Y.diffs))


def test_bicomplex_round_trip():
    M = GradedModule.cyclic(R, ["x", "y^2"])
    F = BicomplexInput.single(M).module_shift(2)
    G = io.bicomplex_from_json(io.bicomplex_to_json(F))
    assert G.modules[0].presentation == F.modules[0].presentation


def test_ring_and_spec_round_trip():
    Q = GradedRing(101, [("x", 2), ("y", 2)], ["x*y"])
    assert io.ring_from_json(io.ring_to_json(Q)).digest == Q.digest
    spec = io.spec_from_json(SPEC, R)
    assert io.spec_to_json(spec)["primes"][1]["generators"] == ["x"]


def test_format_errors():
    with pytest.raises(io.FormatError):
        io.load_json("{not json")
    with pytest.raises(io.FormatError, match="consecutive"):
        io.complex_from_json({"degrees": [{"degree": 0}, {"degree": 2}]}, R)
    with pytest.raises(io.FormatError, match="no ring"):
        io.complex_from_json({"degrees": []})
    with pytest.raises(io.FormatError, match="characteristic"):
        io.ring_from_json({"variables": ["x"]})
    with pytest.raises(io.FormatError):
        io.complex_from_json({"degrees": [{"degree": 0, "twists": [0], "differential": [["x"]]},
                                          {"degree": 1, "twists": [0]}]}, R)


def test_parse_window():
    assert parse_window("8") == (0, 8)
    assert parse_window("-2:6") == (-2, 6)
    with pytest.raises(WindowError):
        parse_window("5:2")


def test_supp_command(files):
    base = ["supp", "--ring", files["ring"], "--spec", files["spec"]]
    assert run(base + [files["kx"]]) == (0, "(x), (x,y)\n")
    assert run(base + [files["zero"]]) == (0, "\n")
    assert run(base + ["--complex", files["A"]]) == (0, "(0), (x), (y), (x,y)\n")


def test_exit_codes(files):
    assert run(["supp", files["bad"]])[0] == 2
    assert run(["supp"])[0] == 2
    assert run(["check", "nope"])[0] == 2
    assert run(["frobnicate"])[0] == 2
    assert run(["totalize", files["A"], "--window", "5:2"])[0] == 4
    assert run(["koszul", "--elements", "x^2+y^2,x*y,x^3+y^3", "--gb-ceiling", "2"])[0] == 3
    assert run(["check", "thick"])[0] == 1
    assert run(["check", "minimality"])[0] == 0


def test_environment_defaults_and_flag_override(files):
    env = {"ENGINE_RING": files["ring"], "ENGINE_SPEC": files["spec"]}
    assert run(["supp", files["kx"]], env) == (0, "(x), (x,y)\n")
    # a flag beats the environment
    one_prime = files["dir"] / "one.json"
    one_prime.write_text(json.dumps([{"label": "m", "generators": ["x", "y"]}]))
    assert run(["supp", "--spec", str(one_prime), files["kx"]], env) == (0, "m\n")
    assert run(["supp", files["kx"]], {"ENGINE_GB_CEILING": "many"})[0] == 2


def test_koszul_and_model_commands():
    code, out = run(["koszul", "--elements", "x", "--tower", "y:2", "--window", "0:20"])
    assert code == 0 and out.startswith("support: (x), (x,y)") and "tower y^2: pass" in out
    code, out = run(["model"])
    assert code == 0 and "layers: (0) | (x), (y) | (x,y)" in out


def test_totalize_command(files, tmp_path):
    code, out = run(["totalize", files["kx"], "--window=-4:8", "--json", str(tmp_path / "t.json")])
    assert code == 0
    table = json.loads((tmp_path / "t.json").read_text())["homology"]
    # tot of the Koszul complex on x: one class in every even degree from -2
    assert {int(k): v for k, v in table.items() if v} == {-2: 1, 0: 1, 2: 1, 4: 1, 6: 1, 8: 1}


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["check", "kos-props", "--instances", "3", "--seed", "11", "--json", str(a)])[0] == 0
    assert run(["check", "kos-props", "--instances", "3", "--json", str(b)], {"ENGINE_SEED": "11"})[0] == 0
    assert a.read_bytes() == b.read_bytes()
    report = json.loads(a.read_text())
    rec = report["records"][0]
    assert set(rec) == {"check_id", "statement", "inputs_digest", "verdict", "details"}
    c = tmp_path / "c.json"
    run(["check", "kos-props", "--instances", "3", "--seed", "12", "--json", str(c)])
    assert c.read_bytes() != a.read_bytes()


def test_counterexample_replays(tmp_path):
    rep = run_suite("thick", SuiteConfig(counterexample_dir=str(tmp_path)))
    fails = rep.failures()
    assert [f["check_id"] for f in fails] == ["thick/thick-witness/(x,y)"]
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    ok, details = replay(str(files[0]))
    assert not ok and details["power_needed"] == 3
    assert run(["check", "--replay", str(files[0])])[0] == 1


def test_every_check_is_registered_with_a_statement():
    from supportcalc.suites import STATEMENTS

    assert set(CHECKS) == set(STATEMENTS)
    assert all(STATEMENTS[k] for k in CHECKS)


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(seed=-1)
    with pytest.raises(ValueError):
        SuiteConfig(instances=0)
    assert run(["check", "tensor", "--instances", "-3"])[0] == 2


def test_engine_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "supportcalc.cli", "supp", "--ring", files["ring"],
                           "--spec", files["spec"], files["kx"]], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(x), (x,y)\n"
