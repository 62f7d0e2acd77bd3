import pytest

from excseq.verify import (SUITES, verify_all, verify_bijection, verify_counting,
                           verify_duality, verify_mutation)


def _assert_ok(report):
    assert report.ok, [(c.label, c.detail) for c in report.checks if not c.ok]


@pytest.mark.parametrize("tag", ["A2", "A3", "B4", "F4"])
def test_counting_suite(tag):
    _assert_ok(verify_counting(tag))


@pytest.mark.parametrize("tag,m", [("A2", 2), ("A3", 1), ("D4", 1)])
def test_bijection_suite(tag, m):
    _assert_ok(verify_bijection(tag, m))


@pytest.mark.parametrize("tag,m", [("A3", 2), ("D4", 1)])
def test_duality_suite(tag, m):
    _assert_ok(verify_duality(tag, m))


@pytest.mark.parametrize("tag,m", [("A3", 1), ("D4", 1)])
def test_mutation_suite(tag, m):
    _assert_ok(verify_mutation(tag, m))


def test_product_algebra_end_to_end():
    # disconnected quivers run through the whole stack
    _assert_ok(verify_all("A2xA1", 1))


def test_suite_table_names():
    assert set(SUITES) == {"counting", "bijection", "duality", "mutation", "all"}


def test_report_lines_format():
    report = verify_counting("A1")
    lines = report.lines()
    assert lines[-1].startswith("PASS")
    assert all(line.startswith(("PASS", "FAIL")) for line in lines)
