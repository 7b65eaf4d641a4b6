from fractions import Fraction

import pytest

import hecke


def test_elliptic_counts():
    assert hecke.elliptic_class_count("G2", 2) == 3
    assert hecke.elliptic_class_count("F4", 4) == 9


def test_residual_points():
    g2 = hecke.residual_points("g2")
    assert len(g2) == 5
    assert {p["subsystem"] for p in g2} == {"G2", "A2", "A1+A1"}
    assert len(hecke.residual_points("f4")) == 18


def test_mass_and_sign():
    b2 = hecke.mass("g2", "b2", {"k1": 1, "k2": 1})
    assert b2["sign"] == -1
    assert b2["vanishing_order"] == 0
    b11 = hecke.mass("f4", "b11", "k1=1,k2=1")
    assert b11["value"] == "0"
    assert hecke.sign_graded("g2", "b2", {"k1": Fraction(1), "k2": 1}) == -1
    assert "k1 - k2" in hecke.singular_locus("f4", "b11")


def test_reeder():
    r = hecke.reeder("g2", "b1")
    assert r["complete"]
    assert r["r_at_zero"] == "1"
    assert all(float(x) > 0 for x in r["values"])


def test_cn():
    assert hecke.bipartitions(2) == ["2|-", "1,1|-", "1|1", "-|2", "-|1,1"]
    m = hecke.cn_module("1|1", (3, 2, 5))
    assert m["dimension"] == 2
    assert m["relation_failures"] == []
    assert not hecke.cn_module("1|", (Fraction(1, 4), 2, 2))["discrete_series"]
    f = hecke.fdeg_c("2,1|", Fraction(3, 7), Fraction(1, 3), Fraction(3, 2))
    assert float(f["value"]) > 0


def test_tables():
    assert hecke.table_checksum("g2") == "bf3cdac61fe9eddf"
    rep = hecke.reconcile("g2")
    assert rep["bijection"]
    assert rep["signs"] == [1, -1, 1, 1, 1]
    assert rep["ledger_total"] == 5


def test_errors():
    with pytest.raises(hecke.UsageError):
        hecke.point_for_row("g2", "b9")
    with pytest.raises(hecke.PreconditionError):
        hecke.mass("g2", "b2", {"k1": 1})


def test_cli_and_acceptance():
    code, out, err = hecke.run("elliptic", "g2")
    assert code == 0 and '"elliptic_class_count": 3' in out
    assert hecke.run("root", "nosuch")[0] == 1
    results = hecke.acceptance(only=[7, 8])
    assert [r["id"] for r in results] == [7, 8]
    assert all(r["passed"] for r in results)
