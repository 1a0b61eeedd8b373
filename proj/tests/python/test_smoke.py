import json

import pytest

import imprim


def test_arc_pair_k5_is_case_a():
    report = imprim.analyze("arc-pair-k5", p=3)
    assert report["case"] == "a"
    assert report["parameters"]["v"] == 4
    assert report["parameters"]["k"] == 1


def test_gamma2_k5_is_case_e():
    assert imprim.analyze("gamma2-k5")["case"] == "e"


def test_inline_triple_matches_catalog():
    code, out, _ = imprim.run(["construct", "--kind", "chain", "--n", "4"])
    assert code == 0
    triple = json.loads(out)["triple"]
    assert imprim.analyze(triple) == imprim.analyze("chain-4")
    assert imprim.analyze(triple)["case"] == "b"


def test_feasible_rows_for_three():
    rows = imprim.feasible_f_rows(3)
    assert rows
    for row in rows:
        assert row["v"] * row["r"] == row["b"] * (row["v"] - 3)


def test_catalog_and_primes():
    assert "arc-pair-k5" in imprim.catalog_keys()
    assert imprim.is_prime(7)
    assert not imprim.is_prime(9)


def test_errors_raise():
    with pytest.raises(Exception):
        imprim.analyze("no-such-key")


def test_run_exit_codes():
    assert imprim.run(["classify", "--catalog", "arc-pair-k5-affine"])[0] == 3
    assert imprim.run(["classify", "--catalog", "arc-pair-k5", "--p", "5"])[0] == 4
