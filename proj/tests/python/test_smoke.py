import hecke_traces as ht
import pytest


def test_partitions():
    parts = ht.enumerate_partitions(4)
    assert [str(p) for p in parts] == ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]
    p = ht.Partition.parse("3,1")
    assert p.conjugate().parts == [2, 1, 1]
    assert p.hook(1, 1) == 4
    assert ht.Partition([2, 1]).z() == 2


def test_hecke_table_n2():
    t = ht.hecke_char_table(2)
    assert t["order"] == ["2", "1,1"]
    q = ht.RatFun.q()
    assert t["entries"][0] == [q, ht.RatFun(1)]
    assert t["entries"][1] == [ht.RatFun(-1), ht.RatFun(1)]


def test_ratfun_arithmetic():
    q, r = ht.RatFun.q(), ht.RatFun.r()
    one = ht.RatFun(1)
    assert (one - q * q) / (one - q) == one + q
    assert ((q + r) / (one + r)).evaluate("2", "1") == "3/2"
    with pytest.raises(ArithmeticError):
        one / ht.RatFun(0)
    f = (one + r) / (one - q)
    assert ht.RatFun.from_json(f.to_json()) == f


def test_trace_table_and_spec():
    t = ht.markov_trace_table(3, threads=2)
    # identity column carries the degrees f^gamma
    assert [row[-1] for row in t["entries"]] == [ht.RatFun(1), ht.RatFun(2), ht.RatFun(1)]
    q, r, one = ht.RatFun.q(), ht.RatFun.r(), ht.RatFun(1)
    assert ht.schur_spec_product("2") == (one + r) * (one + q * r) / ((one - q) * (one - q * q))
    sym = ht.graded_matrix(2, "sym")
    assert len(sym["entries"]) == 2
    with pytest.raises(ValueError):
        ht.graded_matrix(2, "nope")


def test_verify():
    assert "duality" in ht.check_names()
    report = ht.verify("duality", 4)
    assert report["status"] == "pass"
    assert report["failures"] == []
    limit = ht.verify("limit", 3, N=2)
    assert limit["notes"]["c"] == "1/8"
    with pytest.raises(ValueError):
        ht.verify("nope", 2)
