import json

from sgdelta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_compute_delta_semigroup(capsys):
    code, doc = run_json(capsys, "compute", "--gens", "3,10,11", "delta-semigroup", "--p", "inf")
    assert code == 0
    assert doc["result"]["delta"] == [1, 2, 3, 4, 6, 7]
    assert doc["certificate"]["period"] == 120
    assert doc["certificate"]["mode"] == "theorem-backed"
    assert doc["command"] == "compute"
    assert "timing" in doc and "budget" in doc


def test_compute_delta_semigroup_p0(capsys):
    code, doc = run_json(capsys, "compute", "--gens", "3,10,11", "delta-semigroup", "--p", "0")
    assert code == 0
    assert doc["result"]["delta"] == [1, 2]
    assert doc["result"]["stability_bound"] == 111


def test_compute_element_delta(capsys):
    code, doc = run_json(capsys, "compute", "--gens", "3,10,11", "delta", "--x", "21", "--p", "inf")
    assert code == 0
    assert doc["result"]["lengths"] == [1, 7]
    assert doc["result"]["delta"] == [6]


def test_compute_error_path(capsys):
    code, doc = run_json(capsys, "compute", "--gens", "4,6", "frobenius")
    assert code == 1
    assert doc["error"]["code"] == "not-coprime"


def test_compute_budget_exit_code(capsys):
    code, doc = run_json(
        capsys,
        "compute",
        "--gens",
        "6,10,15",
        "delta-semigroup",
        "--p",
        "inf",
        "--budget-elements",
        "500",
    )
    assert code == 3
    assert doc["error"]["code"] == "budget-exceeded"


def test_compute_apery_and_membership(capsys):
    code, doc = run_json(capsys, "compute", "--gens", "3,10,11", "apery", "--m", "3")
    assert code == 0
    assert doc["result"]["entries"] == [0, 10, 11]
    code, doc = run_json(capsys, "compute", "--gens", "3,10,11", "membership", "--x", "8")
    assert doc["result"]["member"] is False


def test_compute_presentation(capsys):
    code, doc = run_json(capsys, "compute", "--gens", "2,3", "presentation")
    assert code == 0
    assert doc["result"]["betti"] == [6]
    assert doc["result"]["trades"] == [{"element": 6, "left": [0, 2], "right": [3, 0]}]


def test_verify_quick(capsys):
    code, doc = run_json(capsys, "verify", "three-gap-family", "--quick")
    assert code == 0
    assert doc["result"]["summary"]["fail"] == 0
    assert doc["result"]["summary"]["pass"] > 0


def test_verify_with_range(capsys):
    code, doc = run_json(capsys, "verify", "three-gap-family", "--m", "3..4")
    assert code == 0
    labels = [r["instance"] for r in doc["result"]["instances"]]
    assert any("m=3" in l for l in labels) and any("m=4" in l for l in labels)
    assert not any("m=5" in l for l in labels)


def test_verify_unknown_claim(capsys):
    code, doc = run_json(capsys, "verify", "no-such-claim")
    assert code == 1
    assert doc["error"]["code"] == "invalid-argument"


def test_verify_csv(capsys):
    code, out = run_cli(capsys, "verify", "med-delta0", "--quick", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "instance,claim,status,detail"
    assert all(",med-delta0,pass" in l for l in lines[1:])


def test_family_command(capsys):
    code, doc = run_json(capsys, "family", "geometric:a=2,b=3,k=3")
    assert code == 0
    assert doc["result"]["generators"] == [4, 6, 9]
    assert doc["result"]["checks"]["0"]["match"] is True
    assert doc["result"]["checks"]["inf"]["match"] is True


def test_family_unspecified_prediction(capsys):
    # no covered max-norm statement for MED inputs: computed but unmatched
    code, doc = run_json(capsys, "family", "med_check:gens=3,10,11", "--p", "inf")
    assert code == 0
    assert doc["result"]["checks"]["inf"]["predicted"] == "unspecified"
    assert doc["result"]["checks"]["inf"]["computed"] == [1, 2, 3, 4, 6, 7]


def test_family_budget_status(capsys):
    # interval k=3 has no covered max-norm statement and a certificate
    # horizon beyond the default budget: reported, not failed
    code, doc = run_json(capsys, "family", "interval:k=3", "--p", "inf")
    assert code == 0
    assert doc["result"]["checks"]["inf"]["status"] == "budget"


def test_search_command(capsys):
    code, doc = run_json(
        capsys, "search", "--target", "1,2", "--p", "0", "--max-gen", "12", "--max-dim", "3"
    )
    assert code == 0
    assert [3, 5, 7] in doc["result"]["hits"]
    assert doc["result"]["exhausted"] is True


def test_search_rejection(capsys):
    code, doc = run_json(
        capsys, "search", "--target", "2", "--p", "0", "--max-gen", "10", "--max-dim", "2"
    )
    assert code == 1
    assert "contains 1" in doc["error"]["message"]


def test_cache_roundtrip(tmp_path, capsys):
    argv = [
        "compute",
        "--gens",
        "3,10,11",
        "delta-semigroup",
        "--p",
        "inf",
        "--cache-dir",
        str(tmp_path),
    ]
    code1, doc1 = run_json(capsys, *argv)
    assert code1 == 0 and not doc1["timing"]["cached"]
    assert list(tmp_path.glob("*.json"))
    code2, doc2 = run_json(capsys, *argv)
    assert code2 == 0 and doc2["timing"]["cached"]
    assert doc2["result"]["delta"] == doc1["result"]["delta"]
    assert doc2["certificate"] == doc1["certificate"]


def test_cache_env_var(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SGDELTA_CACHE_DIR", str(tmp_path))
    run_json(capsys, "compute", "--gens", "2,3", "frobenius")
    assert list(tmp_path.glob("*.json"))


def test_json_keys_sorted(capsys):
    code, out = run_cli(capsys, "compute", "--gens", "2,3", "frobenius")
    doc = json.loads(out)
    assert out.index('"budget"') < out.index('"command"') < out.index('"result"')
    assert doc["result"]["frobenius"] == 1


def test_list_claims(capsys):
    code, doc = run_json(capsys, "verify", "all", "--list")
    assert code == 0
    assert "three-gap-family" in doc
    assert doc["geometric-proof-z"]["kind"] == "report-only"
