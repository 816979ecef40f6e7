import json

import pytest

from cubiclifford.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_hilbert(capsys):
    code, payload = run_json(capsys, "hilbert", "--max-degree", "6")
    assert code == 0
    assert payload["schema"] == 1 and payload["ok"]
    assert payload["table"][4] == {"degree": 4, "engine": 13, "oracle": 13,
                                   "match": True}


def test_nf(capsys):
    code, payload = run_json(capsys, "nf", "--poly", "1*xxxy + -1*yxxx")
    assert code == 0
    assert payload["normal_form"] == "0"


def test_center_check(capsys):
    code, payload = run_json(capsys, "center-check")
    assert code == 0
    assert all(payload["verdicts"].values())
    assert set(payload["verdicts"]) >= {"z0", "z1", "z2", "z3", "z4", "z5"}


def test_relation_check(capsys):
    code, payload = run_json(capsys, "relation-check", "--prime", "31")
    assert code == 0
    assert payload["relation_holds"]


def test_singular_check(capsys):
    code, payload = run_json(capsys, "singular-check", "--point", "1,1,1,1")
    assert code == 0
    assert payload["discriminant"] == 0
    assert payload["on_twisted_cubic"]
    assert payload["singular_locus_member"]
    assert payload["partials"] == [0, 0, 0, 0]


def test_quotient_and_dump(capsys, tmp_path):
    dump = str(tmp_path / "alg.json")
    code, payload = run_json(capsys, "quotient", "--point", "0,0,0,0",
                             "--dump", dump)
    assert code == 0
    assert payload["dim"] == 17
    with open(dump) as fh:
        stored = json.load(fh)
    assert stored["dim"] == 17


def test_irreps(capsys):
    code, payload = run_json(capsys, "irreps", "--point", "1,1,1,1")
    assert code == 0
    assert payload["dim"] == 15
    assert payload["gram_rank"] == 3
    assert payload["irrep_dims"] == [1, 1, 1]
    assert len(payload["dim1_reps"]) == 3


def test_search_dim2(capsys):
    code, payload = run_json(capsys, "search-dim2", "--prime", "7")
    assert code == 0
    assert payload["irreducible_pairs"] == 0


def test_point_module_diagonal(capsys):
    code, payload = run_json(capsys, "point-module",
                             "--triple", "1:2,1:2,1:2")
    assert code == 0
    assert payload["next_point"] == [1, 2]
    assert payload["gamma_squared_equals_XYZ"]
    assert payload["predicted_simple_quotient_dims"] == [1]
    assert payload["central_character_singular"]


def test_point_module_off_diagonal(capsys):
    code, payload = run_json(capsys, "point-module",
                             "--triple", "1:0,0:1,1:1")
    assert code == 0
    assert payload["predicted_simple_quotient_dims"] == [0, 3]
    assert not payload["abc_system_admits_solution"]
    assert "central_character" not in payload


def test_disc_locus(capsys):
    code, payload = run_json(capsys, "disc-locus", "--ell", "3,12",
                             "--samples", "2")
    assert code == 0
    rep = payload["report"]
    assert rep["3"]["cubic"]["members"] == 0
    assert rep["12"]["smooth"]["members"] == 2


def test_verify_all_and_determinism(capsys):
    code1, out1 = run(capsys, "verify-all", "--prime", "13", "--seed", "0")
    code2, out2 = run(capsys, "verify-all", "--prime", "13", "--seed", "0")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["ok"] and all(payload["results"].values())


def test_error_exit_code_one(capsys):
    # characteristic 3 is rejected by the field layer
    code, out = run(capsys, "hilbert", "--prime", "3")
    assert code == 1
    payload = json.loads(out)
    assert not payload["ok"]
    assert payload["error"] == "CharTwoOrThree"


def test_usage_error_exit_code_two(capsys):
    code = main(["singular-check", "--point", "1,2,3"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.err.strip()


def test_human_output(capsys):
    code, out = run(capsys, "nf", "--poly", "yx", "--output", "human")
    assert code == 0
    assert "normal_form:" in out


def test_env_default_prime(capsys, monkeypatch):
    monkeypatch.setenv("CUBICLIFFORD_PRIME", "31")
    code, payload = run_json(capsys, "relation-check")
    assert code == 0
    assert payload["prime"] == 31
