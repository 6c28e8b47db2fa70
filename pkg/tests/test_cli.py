import json

from jsonschema import Draft202012Validator

from linkage_lab import cli
from linkage_lab.verify import GridReport

try:
    from importlib.resources import files
except ImportError:  # pragma: no cover
    from importlib_resources import files

SCHEMA = json.loads(
    files("linkage_lab").joinpath("schemas/cli_output.schema.json").read_text()
)
VALIDATOR = Draft202012Validator(SCHEMA)


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    payload = json.loads(out) if out.strip() else None
    if payload is not None:
        VALIDATOR.validate(payload)
    return code, payload, err


def test_linkage_false(capsys):
    code, payload, _ = run_json(capsys, "linkage", "--type", "A1", "--ell", "5",
                                "--from", "[0]", "--to", "[1]")
    assert code == 0
    assert payload["linked"] is False


def test_linkage_true_with_variant(capsys):
    code, payload, _ = run_json(capsys, "linkage", "--type", "A1", "--ell", "5",
                                "--from", "[0]", "--to", "[8]", "--variant", "Wl")
    assert code == 0 and payload["linked"] is True


def test_bwb_output(capsys):
    code, payload, _ = run_json(capsys, "bwb", "--type", "A2", "--weight", "[-2,1]")
    assert code == 0
    assert payload == {"command": "bwb", "status": "regular", "weight": [-2, 1],
                       "lambda": [0, 0], "degree": 1, "word": [1]}
    code, payload, _ = run_json(capsys, "bwb", "--type", "A1", "--weight", "[-1]")
    assert payload["status"] == "singular"


def test_malformed_weight_exits_2(capsys):
    code, out, err = run(capsys, "linkage", "--type", "A1", "--ell", "5",
                         "--from", "[0]", "--to", "oops")
    assert code == 2
    assert "position" in err


def test_wrong_rank_exits_2(capsys):
    code, _, err = run(capsys, "bwb", "--type", "A2", "--weight", "[1]")
    assert code == 2 and "expected 2" in err


def test_verify_prop_aff_example(capsys):
    code, payload, _ = run_json(capsys, "verify", "prop-aff",
                                "--types", "A2,B2,G2", "--ell-range", "2..12")
    assert code == 0
    assert payload["reports"][0]["instances"] == 33
    assert payload["ok"] is True


def test_verify_failure_exits_1(capsys):
    # a genuinely false instance: with 3 | ell the declared alcove walls for
    # G2 do not bound an alcove, and the validator must say so
    code, payload, _ = run_json(capsys, "verify", "alcove-walls", "--cases", "G2:9")
    assert code == 1
    assert payload["ok"] is False
    assert payload["reports"][0]["failures"]


def test_exit_code_mapping_unit():
    good = GridReport(name="x", instances=2, passes=2)
    bad = GridReport(name="x", instances=2, passes=1, failures=[{"y": 1}])
    assert good.ok and not bad.ok


def test_deterministic_output(capsys):
    args = ("char", "--type", "A2", "--highest", "[1,1]")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_char_euler_kostant(capsys):
    code, payload, _ = run_json(capsys, "char", "--type", "A2", "--highest", "[1,1]")
    assert code == 0 and payload["dimension"] == 8
    assert payload["weights"]["[0,0]"] == 2
    code, payload, _ = run_json(capsys, "euler", "--type", "A1", "--weight", "[-2]")
    assert payload["sign"] == -1 and payload["lambda"] == [0]
    code, payload, _ = run_json(capsys, "euler", "--type", "A1", "--weight", "[-1]")
    assert payload["zero"] is True
    code, payload, _ = run_json(capsys, "kostant", "--type", "A2", "--root", "r[1,1]")
    assert payload["count"] == 2
    code, payload, _ = run_json(capsys, "kostant", "--type", "A2", "--root", "r[1,1]",
                                "--parts", "1")
    assert payload["count"] == 1


def test_stabilize_and_ext_dim(capsys):
    code, payload, _ = run_json(capsys, "stabilize", "--type", "A1",
                                "--mu", "[0]", "--tau", "[-4]")
    assert code == 0 and payload["N"] == 2
    assert payload["verma"] == payload["weyl"] == 1
    code, payload, _ = run_json(capsys, "ext-dim", "--type", "A1",
                                "--zeta", "[2]", "--eta", "[0]", "--n", "4")
    assert payload["dimension"] == 0
    code, payload, _ = run_json(capsys, "ext-dim", "--type", "A1",
                                "--zeta", "[2]", "--eta", "[0]", "--n", "2")
    assert payload["dimension"] == 1


def test_block_alcove_strong_linkage(capsys):
    code, payload, _ = run_json(capsys, "block", "--type", "A1", "--ell", "5",
                                "--box", "12")
    assert payload["weights"] == [[-12], [-10], [-2], [0], [8], [10]]
    code, payload, _ = run_json(capsys, "alcove", "--type", "A1", "--ell", "5",
                                "--weight", "[8]")
    assert payload["position"] == "outside" and payload["word"] == [0]
    code, payload, _ = run_json(capsys, "alcove", "--type", "A1", "--ell", "5",
                                "--weight", "[4]")
    assert payload["position"] == "wall"
    code, payload, _ = run_json(capsys, "strong-linkage", "--type", "A1", "--ell", "5",
                                "--from", "[0]", "--to", "[8]", "--chain")
    assert payload["strongly_linked"] is True
    assert payload["chain"] == [[8], [0]]


def test_quantum_commands(capsys):
    code, payload, _ = run_json(capsys, "quantum", "qbinom", "--n", "4", "--t", "2",
                                "--d", "1")
    assert payload["coefficients"] == {"-4": 1, "-2": 1, "0": 2, "2": 1, "4": 1}
    code, payload, _ = run_json(capsys, "quantum", "qbinom", "--n", "4", "--t", "2",
                                "--d", "1", "--ell", "5")
    assert payload["residue"] == [1, 0, 0, 0]
    code, payload, _ = run_json(capsys, "quantum", "qint", "--n", "3", "--d", "2")
    assert payload["coefficients"] == {"-4": 1, "0": 1, "4": 1}


def test_translate_analyze(capsys):
    code, payload, _ = run_json(capsys, "translate", "analyze", "--type", "A1",
                                "--ell", "5", "--lambda", "[0]", "--mu", "[4]",
                                "--word", "s0")
    assert code == 0
    assert payload["nu1"] == [4]
    assert payload["case"] == "down"
    assert payload["triangle_ok"] is True


def test_info_with_cartan_file(tmp_path, capsys):
    path = tmp_path / "cartan.json"
    path.write_text(json.dumps([[2, -3], [-1, 2]]))
    code, payload, _ = run_json(capsys, "info", "--cartan", str(path))
    assert code == 0
    assert payload["coxeter_number"] == 6
    assert payload["symmetrizers"] == [1, 3]


def test_required_flags_refusal_and_force(capsys):
    code, _, err = run(capsys, "alcove", "--type", "G2", "--ell", "9",
                       "--weight", "[0,0]")
    assert code == 2 and "force" in err
    code, out, _ = run(capsys, "alcove", "--type", "G2", "--ell", "9",
                       "--weight", "[0,0]", "--force")
    assert code == 0


def test_text_output(capsys):
    code, out, _ = run(capsys, "kostant", "--type", "A2", "--root", "r[1,1]", "--text")
    assert code == 0
    assert "count: 2" in out


def test_type_with_rank_flag(capsys):
    code, payload, _ = run_json(capsys, "info", "--type", "A", "--rank", "3")
    assert code == 0 and payload["rank"] == 3


def test_missing_type_exits_2(capsys):
    code, _, err = run(capsys, "bwb", "--weight", "[0]")
    assert code == 2


def test_thread_cap_env_var(monkeypatch):
    from linkage_lab import verify

    serial = verify.verify_affine_lattices(("A2", "G2"), range(2, 7))
    monkeypatch.setenv("LINKAGELAB_THREADS", "3")
    fanned = verify.verify_affine_lattices(("A2", "G2"), range(2, 7))
    assert fanned.ok == serial.ok
    assert fanned.instances == serial.instances
    assert fanned.failures == serial.failures
