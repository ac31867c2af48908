import pytest

import ncpart


def test_numbers():
    assert ncpart.catalan(10) == 16796
    assert ncpart.fuss_catalan(2, 3) == 12
    assert ncpart.binomial(10, 5) == 252
    assert ncpart.binomial(100, 50) == 100891344545564193334812497256


def test_family_sizes():
    assert ncpart.family_size("A", 3) == 5
    assert ncpart.family_size("A", 3, k=2) == 12
    assert ncpart.family_size("B", 2) == 6
    assert ncpart.family_size("D", 3) == 14
    assert ncpart.family_size("AugA", 1, k=2, r=1) == 4
    assert ncpart.family_size("TildeA", 3, k=2) == 4
    with pytest.raises(ValueError):
        ncpart.family_size("E", 6)


def test_zeta_and_filters():
    assert ncpart.zeta("A", 3, ell=2) == 12
    assert ncpart.zeta("B", 2, ell=2) == 15
    assert ncpart.zeta("D", 3, ell=2) == 55
    assert ncpart.count_chains("A", 3, jumps=[1, 1]) == 3
    assert ncpart.count_chains("D", 3, annular_any=True) == 8
    assert ncpart.count_chains("B", 2, index=1) == 3
    with pytest.raises(ValueError):
        ncpart.count_chains("A", 3, index=1)


def test_formulas():
    ids = ncpart.formula_ids()
    assert len(ids) == 21 and "THM-A" in ids
    assert ncpart.eval_formula("EQ1", 3, jumps=[1, 1]) == 3
    assert ncpart.eval_formula("EQ2", 2, ell=2, jumps=[1, 0, 1]) == 4
    with pytest.raises(ValueError):
        ncpart.eval_formula("EQ999", 3)
    with pytest.raises(ValueError):
        ncpart.eval_formula("EQ1", 3, jumps=[1, 1, 1])


def test_verify():
    reports = ncpart.verify("THM-A", 2, k=2, ell=2)
    assert reports and all(rep["match"] for rep in reports)
    assert ncpart.verify_ok("EQ7", 3, ell=2)


def test_armstrong_iso():
    rep = ncpart.armstrong_iso(1, 1)
    assert rep["ok"] and rep["size"] == 4
    assert rep["aug"] == {"family": "AugA", "n": 1, "k": 2, "r": 1}
    assert rep["tilde"] == {"family": "TildeA", "n": 3, "k": 2, "r": 0}


def test_psi_roundtrip():
    bp = ncpart.psi(2, [[1, -2], [-1, 2]])
    assert bp["sigma"]["blocks"] == [[1, 2]]
    assert bp["x"] == {"kind": "edge", "value": [1, 2]}
    back = ncpart.psi_inv(2, bp["sigma"]["blocks"], bp["x"])
    assert ncpart.psi(2, back["blocks"]) == bp


def test_tau_prime_roundtrip():
    out = ncpart.tau_prime(7, [2, 4, 5], [[2], [2, 6]])
    assert out["B"] == [3]
    assert out["chain"][0]["blocks"] == [[1, 4, 7], [2], [3], [5, 6]]
    assert out["chain"][1]["blocks"] == [[1, 2, 4, 7], [3], [5, 6]]
    back = ncpart.tau_prime_inv(
        7, out["B"], [level["blocks"] for level in out["chain"]]
    )
    assert back == {"n": 7, "L": [2, 4, 5], "Rs": [[2], [2, 6]]}


def test_tau_d_prime_roundtrip():
    elems = ncpart.enumerate_family("D", 3)
    annular = [e for e in elems if e["isAnnular"]]
    assert len(elems) == 14 and len(annular) == 8
    for e in annular:
        datum = ncpart.tau_d_prime_inv(3, 1, [e["value"]["blocks"]])
        chain = ncpart.tau_d_prime(
            3, 1, datum["L"], datum["Rs"], datum["f"], datum["eps"]
        )
        assert [level["blocks"] for level in chain] == [e["value"]["blocks"]]
