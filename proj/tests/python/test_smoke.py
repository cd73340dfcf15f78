import quadsq_py as q


def test_fields():
    assert q.fields() == ["q3", "q17"]


def test_arithmetic():
    assert q.norm("q3", 2, 1) == 1
    assert q.trace("q17", 3, 2) == 8
    assert q.is_totally_positive("q3", 2, 1)
    assert not q.is_totally_positive("q3", 1, 1)


def test_counts():
    assert q.r2("q3", 13, 0) == 16
    assert q.r2("q3", 13, 0, method="brute") == 16
    assert q.r3("q17", 3, 0) == 8
    assert q.r3("q17", 7, 0) == 0
    assert q.r3("q3", 25, 0, method="brute") == 150
    assert q.representable3("q3", 5, 0)


def test_class_number():
    res = q.class_number("q3", 5, 0)
    assert res["case"] == "B"
    assert res["h"] == 2
    assert res["r3"] == 48


def test_invalid_input():
    import pytest
    with pytest.raises(q.InvalidInput):
        q.class_number("q3", 4, 0)


def test_table_prefix():
    rows = q.table("q3", 3)
    assert rows[0] == {"a": 1, "b": 0, "m": 1, "h": 1}
    assert [r["a"] for r in rows] == [1, 2, 3]
    assert q.enumerate_alphas("q17", 2) == [(1, 0), (2, 0)]


def test_theta_identity():
    assert q.verify_theta_sq("q3", 12)
    assert q.verify_theta_sq("q17", 12)
