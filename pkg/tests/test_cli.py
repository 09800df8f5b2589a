import json

import pytest

from polyforge.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_toroidal(capsys):
    code, out = run(capsys, "--json", "toroidal", "--n", "6")
    data = json.loads(out.out)
    assert code == 0
    assert data["values"]["params"] == "(2,2)"
    assert data["values"]["order"] == 64
    assert data["values"]["self_dual"] is True


def test_flat(capsys):
    code, out = run(capsys, "--json", "flat", "--types", "5,5")
    data = json.loads(out.out)
    assert code == 0
    assert data["values"]["order"] == 128
    assert data["checks"]["intersection property"] and data["checks"]["FAP facets"]


def test_semireg(capsys):
    code, out = run(capsys, "--json", "semireg", "--last", "5,6")
    data = json.loads(out.out)
    assert code == 0
    assert data["values"]["order"] == 256 and data["values"]["doubling"] is False
    assert data["values"]["f-vector"][0] == 8


def test_power(capsys):
    code, out = run(capsys, "--json", "power", "--base", "torus:2,0", "--m", "3")
    data = json.loads(out.out)
    assert code == 0
    assert data["values"]["order"] == 512
    assert data["values"]["predicted |2^(K,G(2^3))|"] == 8192


def test_verify_empty_registry(capsys):
    code, out = run(capsys, "verify", "--all")
    assert code == 0
    assert out.out.strip() == "verify"


def test_verify_groups(capsys):
    code, out = run(capsys, "verify", "--group", "torus:5", "--group", "cube", "--diamond")
    assert code == 0
    assert "cube diamond" in out.out


def test_lattice_exports(capsys, tmp_path):
    j = tmp_path / "p.json"
    code, _ = run(capsys, "lattice", "--group", "torus:2,0", "--export", "json", "--out", str(j))
    assert code == 0 and json.loads(j.read_text())["f_vector"] == [4, 8, 4]
    d = tmp_path / "p.dot"
    code, _ = run(capsys, "lattice", "--export", "dot", "--out", str(d))
    assert code == 0 and d.read_text().startswith("digraph")


@pytest.mark.parametrize("argv, order", [
    (("tc", "--preset", "torus", "--params", "2,2"), 64),
    (("tc", "--preset", "flat", "--types", "5,5,5", "--strategy", "felsch"), 512),
    (("tc", "--preset", "flat", "--types", "6,6", "--no-commutators"), 1024),
    (("tc", "--preset", "universal", "--sections", "2,0;4,0"), 512),
])
def test_tc(capsys, argv, order):
    code, out = run(capsys, "--json", *argv)
    assert code == 0
    assert json.loads(out.out)["values"]["order"] == order


def test_resource_error_exit_code(capsys):
    code, out = run(capsys, "tc", "--preset", "torus", "--params", "4,0", "--max-cosets", "10")
    assert code == 2
    assert "cosets" in out.err


def test_invalid_input_exit_code(capsys):
    code, out = run(capsys, "toroidal", "--params", "2,1")
    assert code == 1


def test_unknown_flag():
    with pytest.raises(SystemExit):
        main(["toroidal", "--bogus"])


def test_reproduce_subset(capsys):
    code, out = run(capsys, "--json", "reproduce", "--only", "08", "--only", "04")
    data = json.loads(out.out)
    assert code == 0
    assert list(data["checks"]) == ["04.all-fives", "08.medial"]
