import pytest

import ringlab


def test_ring_info():
    info = ringlab.ring_info("Z12")
    assert info["order"] == 12
    assert info["uz"] is True
    assert info["units"] == "1,5,7,11"

    sym = ringlab.ring_info("ZZ x ZZ")
    assert sym["kind"] == "symbolic"
    assert sym["factors"] == [0, 0]


def test_classify_ideal_table():
    f = ringlab.classify_ideal("Z12", "<4>")
    assert f["semi_r"] is True
    assert f["semi_n"] is False
    assert f["semiprime"] is False
    assert f["r"] is True
    assert f["witnesses"]["semi_n"] == "2"


def test_classify_ideal_symbolic():
    f = ringlab.classify_ideal("ZZ", "<8>")
    assert f["semi_r"] is False
    assert f["witnesses"]["semi_r"] == "4"
    assert f["mode"] == "exact"

    g = ringlab.classify_ideal("ZZ x ZZ", "<(4,0)>")
    assert g["semi_r"] is True


def test_classify_submodule():
    f = ringlab.classify_submodule("ZZ", "ZZ x ZZ", "<(6,0)>")
    assert f["semi_r"] is True
    assert f["r"] is False
    assert f["sr"] is False
    assert f["witnesses"]["r"] == "(2,(3,0))"


def test_canonical_roundtrip():
    assert ringlab.canonical("dup( Z4 ,<2> )") == "dup(Z4, <2>)"
    with pytest.raises(ringlab.RinglabParseError):
        ringlab.canonical("Zx")


def test_fixture():
    out = ringlab.run_fixture("z_8Z")
    assert out["status"] == "refuted"
    assert out["witness"] == "4"
    assert out["matches_expected"] is True
    assert any(rec["id"] == "ex5_1" for rec in ringlab.fixtures())


def test_mini_suite():
    report = ringlab.run_suite(ids=["T_char", "T_every"], corpus=["Z12", "Z2 x Z2"])
    assert {c["id"] for c in report["checks"]} == {"T_char", "T_every"}
    for c in report["checks"]:
        assert c["status"] == "proved"
        assert c["hypothesis_hits"] > 0


def test_search():
    hits = ringlab.search("semi_r & !semi_n", max_order=12)
    assert any(h["carrier"] == "Z12" and h["object"] == "<4>" for h in hits)


def test_cli_passthrough():
    code, out, err = ringlab.cli(["fixtures", "run", "--id", "zxz_4x6"])
    assert code == 0
    assert "(2,6)" in out
