import pytest

import partmon

ALPHA = "{1,4 | 2,3,4',5' | 5,6 | 1',3',6' | 2'}"
BETA = "{1,3 | 2,4,1' | 5,4',5',6' | 6 | 2' | 3'}"


def test_product():
    ab = partmon.Diagram(ALPHA) * partmon.Diagram(BETA)
    assert str(ab) == "{1,4 | 2,3,1',4',5',6' | 5,6 | 2' | 3'}"


def test_info():
    a = partmon.Diagram(ALPHA)
    assert a.rank == 1
    assert a.dom == [2, 3]
    assert a.codom == [4, 5]
    assert a.ker == "(1,4|2,3|5,6)"


def test_generators_and_evaluation():
    assert partmon.evaluate("e1", 3) == partmon.gen_e(3, 1)
    assert partmon.evaluate("t1,2 e1 t1,2", 3) == partmon.gen_t(3, 1, 2)
    assert partmon.evaluate("s1 s1", 3, "set") == partmon.Diagram.identity(3)


def test_equal_with_certificate():
    r = partmon.equal("t1,2 e1 t1,2", "t1,2", 3)
    assert r["equal"] and r["steps"] == 1
    ok, _ = partmon.replay(r["certificate"])
    assert ok
    assert not partmon.equal("e1", "e2", 3)["equal"]


def test_normal_form_over_set():
    nf = partmon.normal_form("s1 t s2 e", 3, "set")
    ok, _ = partmon.replay(nf["certificate"])
    assert ok


def test_counts():
    assert partmon.bell(6) == 203
    assert partmon.count_Pn(3) == 203


def test_errors():
    with pytest.raises(ValueError):
        partmon.Diagram("{1,x}")
    with pytest.raises(ValueError):
        partmon.evaluate("e9", 3)
