import json

import pytest

from plumbkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_expand_eval(capsys):
    code, out = run(capsys, "expand", "9/2")
    assert code == 0 and out.out.strip() == "5,2"
    code, out = run(capsys, "eval", "5,2")
    assert out.out.strip() == "9/2"


def test_dual(capsys):
    assert run(capsys, "dual", "5,2")[1].out.strip() == "2,2,2,3"
    assert run(capsys, "dual", "5,2", "--adjusted")[1].out.strip() == "1,0,0,2"
    assert run(capsys, "dual", "2,2,2,3", "--convention", "dual")[1].out.strip() == "5,2"


def test_check_and_strict(capsys):
    code, out = run(capsys, "check", "5,2", "--strict")
    assert code == 1 and "a:" in out.out
    code, out = run(capsys, "check", "2,2,2,3", "--side", "dual", "--json")
    data = json.loads(out.out)
    assert data["result"]["hits"][0]["id"] == "VI.a"


def test_usage_errors(capsys):
    assert run(capsys, "expand", "4/2")[0] == 2
    assert run(capsys, "check", "2,x")[0] == 2
    assert run(capsys, "complement", "2,2,2", "--class", "9")[0] == 2
    assert run(capsys, "allconfig")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_allconfig(capsys):
    code, out = run(capsys, "allconfig", "--case", "1", "--json", "--strict")
    data = json.loads(out.out)
    assert code == 0 and data["result"]["total"] == 386
    code, out = run(capsys, "allconfig", "--bad", "2,4,2", "--bad-pos", "2", "--left", "2,2,2|2,2,3,2,2",
                    "--right", "2,2,2|2,2,3,2,2")
    assert "Total number of embeddings: 32" in out.out


def test_json_round_trip_and_threads(capsys):
    _, one = run(capsys, "allconfig", "--case", "3", "--json", "--threads", "1")
    _, two = run(capsys, "allconfig", "--case", "3", "--json", "--threads", "2")
    assert one.out == two.out
    data = json.loads(one.out)
    assert json.dumps(data, indent=2, sort_keys=True) + "\n" == one.out


def test_embed_complement_gram(capsys):
    out = run(capsys, "embed", "2,3,3,3,2", "--show")[1].out
    assert "semi-standard at (0,2)" in out
    out = run(capsys, "complement", "2,3,3,3,2", "--class", "2", "--json")[1].out
    assert json.loads(out)["result"]["complement"] == [[2, 0, -1], [0, 5, 0], [-1, 0, 6]]
    assert run(capsys, "gram", "2,2", "--convention", "dual")[1].out.split() == ["2,-1", "-1,2"]


def test_xk_mine_fillings(capsys):
    data = json.loads(run(capsys, "xk", "9/8", "--k", "8", "--json")[1].out)["result"]
    assert not data["satisfies"] and data["witness"] == [[3]]
    assert "holds" in run(capsys, "xk", "4/1", "--k", "2")[1].out
    data = json.loads(run(capsys, "mine", "--k", "1", "--max-weight", "3", "--max-vertices", "2", "--json")[1].out)
    assert "3,3" in data["result"]["minimal"]
    data = json.loads(run(capsys, "fillings", "55/21", "--json")[1].out)["result"]
    assert (data["count"], data["n_L"], data["reduced"], data["pi1"]) == (3, 3, True, "Trivial")
    assert data["q_squared_is_1"] and not data["q_is_1"]


def test_verify(capsys):
    code, out = run(capsys, "verify", "--complements", "--fillings", "--strict")
    assert code == 0 and "2/2 checks passed" in out.out
