import json
import subprocess
import sys

import pytest

from curvescatter.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


def run(capsys, *args):
    code = main([str(a) for a in args])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_curve_from_counts(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 1, "counts": [3]})
    code, out, _ = run(capsys, "curve", "--input", inp, "--out", tmp_path / "o")
    assert code == 0
    assert "RH: PASS | causal: yes | agreement: yes" in out
    report = json.loads((tmp_path / "o" / "report.json").read_text())
    assert report["P"] == [1, 0, 2] and report["h"] == 3
    assert report["closed_form_residual"] < 1e-9
    for name in ("em_table.csv", "scattering_samples.csv", "manifest.json"):
        assert (tmp_path / "o" / name).exists()
    header = (tmp_path / "o" / "scattering_samples.csv").read_text().splitlines()[0]
    assert header == "theta,naive_re,naive_im,dual_re,dual_im"


def test_curve_negative_control(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 1, "numerator": [1, 3, 2], "synthetic": True})
    code, out, _ = run(capsys, "curve", "--input", inp, "--out", tmp_path / "o")
    assert code == 0
    assert "RH: FAIL | causal: no | agreement: yes" in out
    assert json.loads((tmp_path / "o" / "report.json").read_text())["synthetic"] is True


def test_curve_from_model(tmp_path, capsys):
    model = {"kind": "hyperelliptic", "f": [0, 0, 0, 0, 0, 1], "h": [1]}
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 2, "model": model})
    code, out, _ = run(capsys, "curve", "--input", inp, "--out", tmp_path / "o")
    assert code == 0 and "RH: PASS" in out


def test_genus_zero_exits_one(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 0, "counts": []})
    code, _, err = run(capsys, "curve", "--input", inp, "--out", tmp_path / "o")
    assert code == 1 and "g >= 1" in err


def test_refuses_to_overwrite(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 1, "counts": [3]})
    assert run(capsys, "curve", "--input", inp, "--out", tmp_path / "o")[0] == 0
    code, _, err = run(capsys, "curve", "--input", inp, "--out", tmp_path / "o")
    assert code == 1 and "--force" in err
    assert run(capsys, "curve", "--input", inp, "--out", tmp_path / "o", "--force")[0] == 0


def test_reruns_are_byte_identical(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 3, "genus": 1, "counts": [4]})
    run(capsys, "curve", "--input", inp, "--out", tmp_path / "a")
    run(capsys, "curve", "--input", inp, "--out", tmp_path / "b")
    for name in ("report.json", "em_table.csv", "scattering_samples.csv", "manifest.json"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_bad_grid(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 1, "counts": [3]})
    code, _, err = run(capsys, "curve", "--input", inp, "--out", tmp_path / "o", "--grid", 100)
    assert code == 1 and "power of two" in err


def test_factor_interior_zero(tmp_path, capsys):
    inp = write(tmp_path, "f.json", {"psi": [[-1, 0], [2, 0]]})
    code, out, _ = run(capsys, "factor", "--input", inp, "--out", tmp_path / "o")
    assert code == 0
    data = json.loads((tmp_path / "o" / "factorization.json").read_text())
    assert data["inner_zeros"] == [[0.5, 0.0]]
    assert data["causal"] == "no"


def test_factor_constant(tmp_path, capsys):
    inp = write(tmp_path, "f.json", {"psi": [1]})
    code, out, _ = run(capsys, "factor", "--input", inp, "--out", tmp_path / "o")
    data = json.loads((tmp_path / "o" / "factorization.json").read_text())
    assert code == 0 and data["inner_zeros"] == [] and data["causal"] == "yes"


def test_factor_degenerate_density(tmp_path, capsys):
    inp = write(tmp_path, "f.json", {"density": {"samples": [1, 0, 1, 2]}})
    code, _, err = run(capsys, "factor", "--input", inp, "--out", tmp_path / "o")
    assert code == 1 and "nonpositive" in err


def test_factor_not_hardy(tmp_path, capsys):
    inp = write(tmp_path, "f.json", {"psi": {"numerator": [[1, 0]], "denominator": [[1, 0], [-2, 0]]}})
    code, _, err = run(capsys, "factor", "--input", inp, "--out", tmp_path / "o")
    assert code == 1 and "pole" in err


def test_simulate_white_noise(tmp_path, capsys):
    inp = write(tmp_path, "s.json", {"model": "white_noise"})
    code, out, _ = run(capsys, "simulate", "--input", inp, "--out", tmp_path / "o", "--seed", 1)
    assert code == 0 and "9/9" in out
    rows = (tmp_path / "o" / "autocov_compare.csv").read_text().splitlines()
    assert rows[0] == "lag,analytic,estimate,standard_error,pass"
    assert all(r.endswith("pass") for r in rows[1:])


def test_simulate_curve(tmp_path, capsys):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 1, "counts": [3]})
    code, out, _ = run(capsys, "simulate", "--input", inp, "--out", tmp_path / "o",
                       "--seed", 7, "--truncation", 40)
    assert code == 0 and "9/9" in out


def test_simulate_too_short(tmp_path, capsys):
    inp = write(tmp_path, "s.json", {"model": "white_noise"})
    code, _, err = run(capsys, "simulate", "--input", inp, "--out", tmp_path / "o", "--n", 10)
    assert code == 1 and "too short" in err


def test_module_entry_point(tmp_path):
    inp = write(tmp_path, "c.json", {"q": 2, "genus": 1, "counts": [3]})
    proc = subprocess.run([sys.executable, "-m", "curvescatter", "curve", "--input", str(inp),
                           "--out", str(tmp_path / "o")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "RH: PASS | causal: yes | agreement: yes"


@pytest.mark.parametrize("bad", ["{", "[1, 2]", '{"q": 2}'])
def test_malformed_input(tmp_path, capsys, bad):
    (tmp_path / "c.json").write_text(bad)
    code, _, err = run(capsys, "curve", "--input", tmp_path / "c.json", "--out", tmp_path / "o")
    assert code == 1 and err.startswith("error:")
