import json
import os
import subprocess

import pytest

import metrec

K3 = "0 1 1\n1 0 1\n1 1 0\n"
PATH3 = "0 1 3\n1 0 2\n3 2 0\n"


def test_tree_accepts_with_certificate():
    (v,) = metrec.recognize(PATH3, family="tree")
    assert v["accepted"]
    edges = {(e["u"], e["v"], e["w"]) for e in v["certificate"]["edges"]}
    assert edges == {(1, 2, "1"), (2, 3, "2")}


def test_rejection_carries_witness():
    (v,) = metrec.recognize(K3, family="tree")
    assert not v["accepted"]
    assert v["rejection"]["condition"] == "tree.median"
    assert v["rejection"]["witness"] == [1, 2, 3]


def test_auto_runs_every_family():
    verdicts = metrec.recognize(metrec.generate("hypercube", 3, 5))
    families = [v["family"] for v in verdicts]
    assert families[0] == "hypercube-all-useful"
    assert "petersen" in families and "tree" in families
    assert verdicts[0]["accepted"]
    pet = next(v for v in verdicts if v["family"] == "petersen")
    assert pet["rejection"]["condition"] == "order"


def test_both_hypercube_routes_agree_on_generated_instances():
    for seed in range(5):
        text = metrec.generate("hypercube", 3, seed)
        count = metrec.recognize(text, family="hypercube", method="count")[0]
        layers = metrec.recognize(text, family="hypercube", method="layers")[0]
        assert count["accepted"] and layers["accepted"]


def test_canonical_round_trip():
    text = metrec.canonical("0 1.5\n6/4 0\n")
    assert text == "2\n0 3/2\n3/2 0\n"
    assert metrec.canonical(text) == text
    assert metrec.canonical('[[0, 0.5], ["1/2", 0]]', format="json") == "2\n0 1/2\n1/2 0\n"


def test_indecomposable_pairs():
    assert metrec.indecomposable_pairs(PATH3) == [(1, 2), (2, 3)]


def test_generate_is_deterministic():
    assert metrec.generate("petersen", 0, 3) == metrec.generate("petersen", 0, 3)
    assert metrec.generate("petersen", 0, 3) != metrec.generate("petersen", 0, 4)


def test_errors():
    with pytest.raises(metrec.TriangleViolation):
        metrec.recognize("0 1 5\n1 0 1\n5 1 0\n")
    with pytest.raises(metrec.ParseError):
        metrec.recognize("2\n0 1\n1 x\n")
    with pytest.raises(metrec.OrderError):
        metrec.recognize(K3, family="petersen")
    assert issubclass(metrec.ParseError, ValueError)


def test_float_mode():
    (v,) = metrec.recognize("0 0.1 0.3\n0.1 0 0.2\n0.3 0.2 0\n", family="tree", mode="float")
    assert v["accepted"]


def test_bench_small():
    samples, slope = metrec.bench([4, 8], 1)
    assert [m for m, _ in samples] == [4, 8]
    assert slope == slope  # not NaN with two samples


@pytest.mark.skipif("METREC_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["METREC_CLI"]
    k3 = tmp_path / "k3.txt"
    k3.write_text(K3)
    r = subprocess.run([cli, str(k3), "--family", "tree"], capture_output=True, text=True)
    assert r.returncode == 1
    assert json.loads(r.stdout)["rejection"]["condition"] == "tree.median"
    r = subprocess.run([cli, str(k3), "--family", "tree", "--output", "human"], capture_output=True, text=True)
    assert "[FAIL] tree.median" in r.stdout
    r = subprocess.run([cli, "-", "--family", "tree"], input=PATH3, capture_output=True, text=True)
    assert r.returncode == 0
    r = subprocess.run([cli, "-", "--family", "petersen"], input=K3, capture_output=True, text=True)
    assert r.returncode == 2
    assert json.loads(r.stdout)["error"] == "OrderNot10"
