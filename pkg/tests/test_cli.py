import json

import pytest

from fano3.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    data = json.loads(out)
    assert data.get("schema", "fano3/1") == "fano3/1"
    return data


def test_euler_dp_dp(capsys):
    code, out, _ = run(capsys, "euler", "--bundle", "0,0,0,1,1", "--divisors", "2M,2M")
    assert code == 0 and out.strip() == "Eu=-16 (closed form agrees)"


def test_euler_dp_conic_json(capsys):
    data = run_json(capsys, "euler", "--bundle", "0,0,1,1,1", "--divisors", "2M-F,2M")
    assert data["euler"] == data["closed_form"] == -12 and data["agrees"]


@pytest.mark.parametrize("divisors", ["2X", "2M-", "M^", "*M"])
def test_euler_parse_errors(capsys, divisors):
    code, _, err = run(capsys, "euler", "--bundle", "0,0,0,1,1", "--divisors", divisors)
    assert code == 2 and "parse error" in err


def test_euler_bad_bundle(capsys):
    assert run(capsys, "euler", "--bundle", "0,a", "--divisors", "2M")[0] == 2


def test_links_genus_8(capsys):
    code, out, _ = run(capsys, "links", "--genus", "8")
    assert code == 0
    data = run_json(capsys, "links", "--genus", "8")
    assert sorted(r["row"] for r in data["links"]) == [4, 12]


def test_links_genus_11(capsys):
    code, _, err = run(capsys, "links", "--genus", "11")
    assert code == 2 and "genus outside {5..10,12}" in err


def test_links_all_joins_catalog(capsys):
    links = run_json(capsys, "links", "--all")["links"]
    rows = run_json(capsys, "catalog")["rows"]
    assert len(links) == len(rows) == 12

    def key(r):
        return (r["genus"], tuple(sorted(json.dumps(s, sort_keys=True) for s in (r["left"], r["right"]))))

    by_key = {key(r): r for r in rows}
    for link in links:
        row = by_key[key(link)]
        assert (link["row"], link["nodes"], link["nonrational"]) == (row["row"], row["nodes"], row["nonrational"])


def test_catalog_row_7(capsys):
    data = run_json(capsys, "catalog", "--row", "7")
    assert data["rows"][0]["nodes"] == 6


def test_catalog_bad_row(capsys):
    with pytest.raises(SystemExit) as e:
        main(["catalog", "--row", "13"])
    assert e.value.code == 2


def test_effcone(capsys):
    code, out, _ = run(capsys, "effcone")
    assert code == 0
    assert "g=5 r=4 degrees=[4,4,4,4]" in out and "CaseI" in out
    assert "CaseII_Excluded" in out and "ExtraArithmetic" in out
    assert "-> excluded" in out


def test_castelnuovo(capsys):
    assert run(capsys, "castelnuovo", "7", "3")[1].strip() == "6"
    assert run(capsys, "castelnuovo", "2", "3")[0] == 2


def test_quadrics_nodes(capsys):
    code, out, _ = run(capsys, "quadrics", "nodes", "--seed", "1")
    assert code == 0 and out.startswith("nodes=4 ") and "certified=true" in out
    assert run_json(capsys, "quadrics", "nodes", "--seed", "1", "--two")["count"] == 8


def test_quadrics_nodes_from_file(capsys, tmp_path):
    from fano3.quadrics import random_corank3_net

    q1, q2, q3, _ = random_corank3_net(3)
    path = tmp_path / "net.json"
    path.write_text(json.dumps({"Q1": q1.to_json(), "Q2": q2.to_json(), "Q3": q3.to_json()}))
    assert run_json(capsys, "quadrics", "nodes", str(path))["total_multiplicity"] == 4
    assert run(capsys, "quadrics", "nodes", str(tmp_path / "missing.json"))[0] == 2


def test_quadrics_skew(capsys, tmp_path):
    from fano3.quadrics import skew_pencil_instance

    code, out, _ = run(capsys, "quadrics", "skew", "--case", "3")
    assert code == 0 and "kernel_meet=1" in out
    path = tmp_path / "pencil.json"
    path.write_text(json.dumps(skew_pencil_instance(2, 4).to_json()))
    assert run_json(capsys, "quadrics", "skew", str(path))["case"] == 2


def test_classify(capsys):
    data = run_json(capsys, "classify", "ci", "--bundle", "0,0,0,1,1", "--divisors", "2M,2M")
    assert data["verdict"] == "Nonrational" and data["inputs"]["euler"] == -16
    assert run_json(capsys, "classify", "conic", "--degree", "5", "--theta", "odd")["verdict"] == "Nonrational"
    assert run_json(capsys, "classify", "conic", "--base", "quadric", "--degree", "3,7")["verdict"] == "Rational"
    assert run_json(capsys, "classify", "dp", "--degree", "4", "--euler", "-4")["verdict"] == "Undetermined"
    assert run(capsys, "classify", "ci", "--bundle", "0,0,0,1,1", "--divisors", "2M")[0] == 2
    assert run(capsys, "classify", "conic", "--base", "quadric", "--degree", "3")[0] == 2


def test_deterministic(capsys):
    first = run(capsys, "quadrics", "nodes", "--seed", "5", "--json")[1]
    assert run(capsys, "quadrics", "nodes", "--seed", "5", "--json")[1] == first
