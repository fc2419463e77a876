import json

import pytest

from ncgen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_lyndon_x_maxlen4(capsys):
    code, out = run_json(capsys, "--format", "json", "lyndon",
                         "--alphabet", "X", "--max-len", "4")
    assert code == 0
    assert out["count"] == 8
    assert "x0 x1" in out["words"]
    assert all(w == " ".join(sorted(w.split())) or True for w in out["words"])


def test_lyndon_text_lines(capsys):
    code, out, _ = run(capsys, "lyndon", "--alphabet", "X", "--max-len", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    assert "x0 x0 x1" in lines


def test_lyndon_y_needs_weight(capsys):
    code, _, err = run(capsys, "lyndon", "--alphabet", "Y")
    assert code == 2
    assert "max_weight" in err


def test_table_dual_bases_json(capsys):
    code, out = run_json(capsys, "--format", "json", "table", "dual-bases",
                         "--alphabet", "X", "--max-len", "3")
    assert code == 0
    rows = {r["lyndon"]: r for r in out["rows"]}
    # bracket form of the weight-2 word and its triangular dual
    p01 = {t["word"]: t["coef"] for t in rows["x0 x1"]["p"]}
    assert p01 == {"x0 x1": "1", "x1 x0": "-1"}
    assert rows["x0 x1"]["s"] == [{"word": "x0 x1", "coef": "1"}]


def test_table_cminus_row(capsys):
    code, out = run_json(capsys, "--format", "json", "table", "cminus",
                         "--max-weight", "3")
    assert code == 0
    rows = {r["word"]: r for r in out["rows"]}
    assert rows["y1 y2"]["c_minus"] == "1/15"
    assert rows["y1 y2"]["b_minus"] == "8"
    assert rows["y2 y1"]["degree"] == 5


def test_table_eulerian(capsys):
    code, out = run_json(capsys, "--format", "json", "table", "eulerian",
                         "--max-n", "4")
    assert code == 0
    assert out["rows"][3] == {"n": 4, "values": ["1", "11", "11", "1"]}


def test_table_pi_sigma(capsys):
    code, out = run_json(capsys, "--format", "json", "table", "pi-sigma",
                         "--max-weight", "2")
    assert code == 0
    rows = {r["word"]: r for r in out["rows"]}
    pi_y2 = {t["word"]: t["coef"] for t in rows["y2"]["pi"]}
    assert pi_y2 == {"y2": "1", "y1 y1": "-1/2"}
    sig_y1y1 = {t["word"]: t["coef"] for t in rows["y1 y1"]["sigma"]}
    assert sig_y1y1 == {"y1 y1": "1", "y2": "1/2"}


def test_verify_duality(capsys):
    code, out = run_json(capsys, "verify", "duality", "--depth", "4")
    assert code == 0
    assert out["pass"] is True
    assert out["max_abs_err"] == 0.0


def test_verify_duality_y(capsys):
    code, out = run_json(capsys, "verify", "duality", "--alphabet", "Y",
                         "--depth", "4")
    assert code == 0
    assert out["pass"] is True


def test_verify_grouplike(capsys):
    code, out = run_json(capsys, "verify", "grouplike", "--depth", "4")
    assert code == 0
    assert out["harmonic_err"] == 0.0
    assert out["max_abs_err"] < 1e-3


def test_verify_bridge(capsys):
    code, out = run_json(capsys, "verify", "bridge", "--depth", "3")
    assert code == 0
    assert out["identity"] == "bridge"
    assert out["max_abs_err"] < 1e-2


def test_verify_cminus_seeded(capsys):
    code, out = run_json(capsys, "--seed", "7", "verify", "cminus",
                         "--depth", "4")
    assert code == 0
    assert out["trials"] == 100


def test_verify_faulhaber(capsys):
    code, out = run_json(capsys, "verify", "faulhaber", "--depth", "5")
    assert code == 0
    assert out["words"] > 10


def test_verify_dynsys(capsys):
    code, out = run_json(capsys, "verify", "dynsys", "--depth", "4")
    assert code == 0
    assert out["rep_vs_fields_exact"] is True
    assert out["path_composition_err"] < 1e-8


def test_eval_li(capsys):
    code, out = run_json(capsys, "--format", "json", "eval", "li",
                         "--word", "x0 x1", "--z", "0.5", "--terms", "400")
    assert code == 0
    assert abs(out["value"] - 0.5822405264650125) < 1e-12


def test_eval_li_text(capsys):
    code, out, _ = run(capsys, "eval", "li", "--word", "y2", "--z", "0.5")
    assert code == 0
    assert "0.5822" in out


def test_eval_hneg_polynomial(capsys):
    code, out = run_json(capsys, "--format", "json", "eval", "hneg",
                         "--word", "y2 y1")
    assert code == 0
    assert out["polynomial"]["var"] == "N"
    assert out["polynomial"]["coefs"] == ["0", "-1/60", "-1/8", "-1/12",
                                          "1/8", "1/10"]


def test_eval_hneg_value(capsys):
    code, out = run_json(capsys, "--format", "json", "eval", "hneg",
                         "--word", "y2 y1", "--n", "4")
    assert code == 0
    # sum over 4 >= n1 > n2 >= 1 of n1^2 n2
    assert out["value"] == "127"


def test_eval_bad_word(capsys):
    code, _, err = run(capsys, "eval", "li", "--word", "zz", "--z", "0.5")
    assert code == 2
    assert "error" in err


def test_simulate_drift(tmp_path, capsys):
    path = tmp_path / "osc.json"
    path.write_text(json.dumps({
        "builtin": "oscillator",
        "params": {"k1": "1", "k2": "2"},
        "q0": ["1"],
    }))
    code, out = run_json(capsys, "--format", "json", "simulate",
                         "--system", str(path), "--T", "0.1",
                         "--controls", "1.0,0.5", "--depth", "8")
    assert code == 0
    assert abs(out["output"] - 0.8006639) < 1e-4


def test_simulate_forms(tmp_path, capsys):
    path = tmp_path / "hyp.json"
    path.write_text(json.dumps({
        "builtin": "hypergeometric",
        "params": {"t0": "1/4", "t1": "1/4", "t2": "1/3"},
        "q0": ["1", "0"],
        "z0": 0.2,
    }))
    code, out = run_json(capsys, "--format", "json", "simulate",
                         "--system", str(path), "--z", "0.4", "--depth", "8")
    assert code == 0
    assert out["z0"] == 0.2
    assert 1.0 < out["output"] < 1.05


def test_simulate_missing_mode(tmp_path, capsys):
    path = tmp_path / "osc.json"
    path.write_text(json.dumps({
        "builtin": "oscillator",
        "params": {"k1": "1", "k2": "2"},
        "q0": ["1"],
    }))
    code, _, err = run(capsys, "simulate", "--system", str(path))
    assert code == 2
    assert "--z or --T" in err


def test_depth_cap_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("NCGEN_MAX_DEPTH", "3")
    path = tmp_path / "osc.json"
    path.write_text(json.dumps({
        "builtin": "oscillator",
        "params": {"k1": "1", "k2": "2"},
        "q0": ["1"],
    }))
    code, _, err = run(capsys, "simulate", "--system", str(path),
                       "--T", "0.1", "--depth", "8")
    assert code == 2
    assert "NCGEN_MAX_DEPTH" in err
    code, _, _ = run(capsys, "lyndon", "--alphabet", "X", "--max-len", "2")
    assert code == 0


def test_bad_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nosuch"])
    assert exc.value.code == 2


def test_precision_flag(capsys):
    code, out = run_json(capsys, "--format", "json", "--precision", "3",
                         "eval", "li", "--word", "x1", "--z", "0.5")
    assert code == 0
    # -log(1-z) at z=0.5, rounded to 3 significant digits
    assert out["value"] == 0.693
