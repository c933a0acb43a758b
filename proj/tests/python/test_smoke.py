"""End-to-end smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import rootstack_gw as gw


def test_pinned_quartic_value():
    session = gw.Session(delta=1)
    assert session.invariant(4, 7, 0, 4) == Fraction(416)
    assert session.cache_size() > 0


def test_values_are_fractions():
    session = gw.Session(delta=1)
    value = session.invariant(1, 0, 1, 4)
    assert isinstance(value, Fraction)
    assert value == Fraction(-1, 4)


def test_closed_form_family():
    session = gw.Session(delta=1)
    for k in range(5):
        assert session.invariant(1, 0, k, k + 3) == gw.lambda_k(k)
    assert gw.lambda_k(0) == Fraction(1, 2)
    assert gw.lambda_k(3) == Fraction(-3, 8)


def test_admissibility_and_dimension():
    session = gw.Session(delta=1)
    assert session.admissible(4, 7, 0, 4)
    assert not session.admissible(1, 0, 0, 2)
    assert session.expected_dimension(1, 0, 0, 2) == Fraction(5, 2)
    assert session.invariant(1, 0, 0, 2) == 0


def test_general_invariant():
    session = gw.Session(delta=3)
    assert session.general_invariant(1, [0, 1, 2, 3, 0]) == 6
    assert session.general_invariant(0, [0, 0, 0, 3, 1]) == Fraction(-1, 4)
    assert gw.Session(delta=5).general_invariant(2, [1, 0, 3, 2, 2]) == 0


def test_recursions_cross_check():
    session = gw.Session(delta=1)
    key = (2, 5, 2, 0)
    expected = session.invariant(*key)
    assert expected == 2
    assert session.recursion_applicable(1, *key)
    assert session.recursion_value(1, *key) == expected
    with pytest.raises(ValueError):
        session.recursion_value(1, 1, 2, 1, 0)  # n2 < 3


def test_depth_bound():
    assert gw.Session(delta=1).depth_bound(1, 0, 3) == 11
    assert gw.Session(delta=6).depth_bound(2, 0, 0) == 14
    assert gw.Session(delta=1).depth_bound(4, 0, 4) == 0


def test_quantum_layer():
    session = gw.Session(delta=1)
    assert session.derive_lambda() == Fraction(-1, 4)
    assert session.associativity_holds(3, 3, 4, 1, 3)
    assert session.relation_residual(2, 1, 0, 0, 3, 1, 4) == 0


def test_table():
    rows = gw.Session(delta=1).table(1, 1)
    assert [tuple(r["n"]) for r in rows] == [
        (1, 0, 1),
        (0, 0, 3),
        (2, 1, 0),
        (1, 1, 2),
        (0, 1, 4),
    ]
    values = {tuple(r["n"]): r["value"] for r in rows}
    assert values[(0, 0, 3)] == Fraction(1, 2)
    assert values[(0, 1, 4)] == Fraction(-1, 4)


def test_run_suite():
    report = gw.Session(delta=1).run_suite("pinned")
    assert report["passed"]
    assert report["checks"] > 0
    assert report["failures"] == []
    with pytest.raises(ValueError):
        gw.Session(delta=1).run_suite("bogus")


def test_cache_round_trip(tmp_path):
    path = str(tmp_path / "cache.tsv")
    first = gw.Session(delta=1)
    first.invariant(4, 7, 0, 4)
    first.export_cache(path)

    second = gw.Session(delta=1)
    second.import_cache(path)
    assert second.cache_size() == first.cache_size()
    assert second.invariant(4, 7, 0, 4) == 416
    assert second.stats()["evaluations"] == 0  # served from the cache


def test_usage_errors_are_value_errors():
    with pytest.raises(ValueError):
        gw.Session(delta=0)
    with pytest.raises(ValueError):
        gw.Session(delta=1).invariant(0, 0, 0, 0)
    with pytest.raises(ValueError):
        gw.Session(delta=1).general_invariant(0, [1, 1, 0, 0, 0])
