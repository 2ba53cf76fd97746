import csv
import io
import json
import math

import pytest

from fracgreen import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#")))


def test_green_gaussian(capsys):
    code, out, _ = run(capsys, "green", "--single", "1.0", "--x", "0:2:1", "--t", "1")
    assert code == 0
    assert out.splitlines()[0] == "x,t,u,abs_error,method"
    r = rows(out)
    assert [float(v["x"]) for v in r] == [0.0, 1.0, 2.0]
    expected = [math.exp(-x * x / 4) / (2 * math.sqrt(math.pi)) for x in (0, 1, 2)]
    for v, e in zip(r, expected):
        assert float(v["u"]) == pytest.approx(e, abs=1e-8)
        assert v["method"] == "series"


def test_green_density(capsys):
    code, out, _ = run(capsys, "green", "--density", "atoms:0.5=1.0", "--x", "0:0:1", "--t", "1")
    assert code == 0
    assert float(rows(out)[0]["u"]) == pytest.approx(1 / (2 * math.gamma(0.75)), abs=1e-8)


def test_normalization_error(capsys):
    code, _, err = run(capsys, "green", "--density", "atoms:0.5=0.5")
    assert code == 1
    assert "normalization" in err


@pytest.mark.parametrize("argv, token", [
    (["green", "--density", "atoms:0.5=abc"], "abc"),
    (["green", "--single", "0.5", "--x", "0:1:zz"], "zz"),
    (["green", "--single", "0.5", "--t", "1,q"], "q"),
    (["moments", "--density", "blob"], "blob"),
])
def test_parse_errors_name_token(capsys, argv, token):
    code, _, err = run(capsys, *argv)
    assert code == 1 and token in err


def test_precision_loss_exit_code(capsys):
    code, out, err = run(capsys, "green", "--single", "0.25", "--x", "0:12:6", "--t", "1",
                         "--method", "series", "--tol", "1e-12")
    assert code == 2
    r = rows(out)
    assert len(r) == 3 and r[-1]["method"] == "precision_loss" and math.isnan(float(r[-1]["u"]))
    assert float(r[0]["u"]) > 0


def test_grid_inclusive_within_half_step():
    assert len(cli.RunConfig("green", x_grid=(0.0, 1.0, 0.1)).x_values()) == 11
    assert len(cli.RunConfig("green", x_grid=(0.0, 1.04, 0.1)).x_values()) == 11
    assert len(cli.RunConfig("green", x_grid=(0.0, 1.06, 0.1)).x_values()) == 12


def test_config_invariants():
    with pytest.raises(cli.InputError):
        cli.RunConfig("green", tol=1e-2)
    with pytest.raises(cli.InputError):
        cli.RunConfig("green", t_values=(0.0,))
    with pytest.raises(cli.InputError):
        cli.parse_grid("0:1:0")


def test_env_tol(capsys, monkeypatch):
    monkeypatch.setenv("FRACGREEN_TOL", "1e-2")
    code, _, err = run(capsys, "green", "--single", "0.5")
    assert code == 1 and "tol" in err
    monkeypatch.setenv("FRACGREEN_TOL", "1e-10")
    code, _, _ = run(capsys, "green", "--single", "0.5")
    assert code == 0


def test_csv_is_deterministic_and_lossless(tmp_path, capsys):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        assert cli.main(["green", "--density", "uniform", "--x=-1:1:0.5", "--t", "0.5,2", "--output", str(p)]) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    from fracgreen import distributed_order as do

    for v in rows(paths[0].read_text()):
        ref = do.green(do.uniform(), float(v["x"]), float(v["t"]), 1e-8).value
        assert float(v["u"]) == ref


def test_json_round_trip(tmp_path):
    p = tmp_path / "g.json"
    assert cli.main(["green", "--single", "0.5", "--x", "0:2:0.5", "--format", "json", "--output", str(p)]) == 0
    doc = json.loads(p.read_text())
    assert doc["columns"] == ["x", "t", "u", "abs_error", "method"]
    from fracgreen import single_order as so

    for r in doc["rows"]:
        assert r["u"] == so.green(0.5, r["x"], r["t"], 1e-8, large_x="integral").value


def test_moments(capsys):
    code, out, _ = run(capsys, "moments", "--single", "0.5", "--t", "1")
    assert code == 0 and out.splitlines()[0] == "t,mu2,method"
    assert float(rows(out)[0]["mu2"]) == pytest.approx(4 / math.sqrt(math.pi), rel=1e-9)
    code, out, _ = run(capsys, "moments", "--single", "1.0", "--t", "3")
    assert float(rows(out)[0]["mu2"]) == pytest.approx(6.0, rel=1e-12)


def test_moments_fit_uniform(capsys):
    code, out, _ = run(capsys, "moments", "--density", "uniform", "--t-logspace", "1e-3:1e3:25",
                       "--fit", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 25
    large = next(f for f in doc["fit"] if f["regime"] == "large")
    assert large["law"] == "log" and large["within_5_percent"]


def test_moments_fit_needs_two_decades(capsys):
    code, _, err = run(capsys, "moments", "--density", "uniform", "--t-logspace", "1:10:5", "--fit")
    assert code == 1 and "2 decades" in err


def test_phik(capsys):
    code, out, _ = run(capsys, "phik", "--single", "0.5", "--k", "0:2", "--t", "1")
    assert code == 0
    r = rows(out)
    assert float(r[1]["phi"]) == pytest.approx(math.sqrt(math.pi), abs=1e-9)


def test_verify_fast(capsys):
    code, out, _ = run(capsys, "verify", "--profile", "fast")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert len(report["checks"]) >= 20
    assert set(report["checks"][0]) >= {"check_name", "residual", "threshold", "pass"}


def test_verify_detects_perturbed_gamma(capsys):
    code, out, _ = run(capsys, "verify", "--perturb-gamma", "1e-6", "--only", "M")
    report = json.loads(out)
    assert code != 0
    failing = [c["check_name"] for c in report["checks"] if not c["pass"]]
    assert any(name.startswith("M") for name in failing)
