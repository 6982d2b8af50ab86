from __future__ import annotations

from fractions import Fraction as F

import pytest

from superconf.suites import (SUITES, osp_h, run_suite, show, stated_B, stated_C, stated_D21a, stated_sl,
                              thm_cf, thm_super_super)


def failing(results):
    return sorted(a.name for a in results if not a.passed)


def test_stated_values():
    assert stated_sl(2, 1) == {F(-1, 2)}
    assert stated_sl(5, 1) == {F(-1), F(-2)}
    assert stated_sl(4, 3) == {F(1), F(-1, 2)}
    assert stated_sl(6, 2) == {F(1), F(-1), F(-2)}
    assert stated_B(0, 2) == {F(-7, 2)}
    assert stated_B(2, 2) == {F(3, 2)}
    assert stated_C(1) == {F(2)}
    assert stated_D21a(F(1, 3)) == {F(1), F(-4, 3), F(1, 3)}


def test_classification_suite_disagrees_only_on_two_cases():
    results = thm_cf()
    assert len(results) == 121
    assert failing(results) == ["levels C(2)", "levels D(2,1;-1/2)"]


def test_subalgebra_suite_failures_are_the_degenerate_cases():
    results = thm_super_super()
    bad = failing(results)
    want = sorted([f"levels gl({m + 1}|{m}) in sl({m + 2}|{m})" for m in range(1, 6)]
                  + [f"levels gl({m - 2}|{m}) in sl({m - 1}|{m})" for m in range(3, 7)])
    assert bad == want


@pytest.mark.parametrize("name", ["spo23-ledger", "f4-ledger", "g3-ledger", "freefield-singular"])
def test_cheap_suites_pass(name):
    results = run_suite(name)
    assert results and failing(results) == []
    assert all(a.source for a in results)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert "W-vectors" in SUITES


def test_osp_weights_small_n():
    # h[2n+2-r, r] = 2n+2-r at n = 1
    assert osp_h(1, 4, 0) == 4 and osp_h(1, 3, 1) == 3
    assert osp_h(2, 0, 0) == 0


def test_show():
    assert show({F(1, 2), F(1)}) == "{1, 1/2}"
    assert show(((1,), (0, 2))) == "((1), (0, 2))"
