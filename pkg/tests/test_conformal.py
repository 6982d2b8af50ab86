from __future__ import annotations

from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from superconf.conformal import (PoleError, check_conformal, conformal_levels, delta, exclusion_reason,
                                 factor_terms, integrality_sieve, piece_equation)
from superconf.superalg import ModuleLabel, catalog_entries, d21a, f4, g3, osp_B, osp_D, psl_mm, sl_mn, spo23

CATALOG = catalog_entries()


@pytest.mark.parametrize("spec,levels", [
    (f4(), [F(-3, 2), F(1)]),
    (g3(), [F(-4, 3), F(1)]),
    (spo23(), [F(-3, 4)]),
    (sl_mn(2, 1), [F(-1, 2)]),
    (sl_mn(5, 2), [F(-3, 2), F(-1), F(1)]),
    (psl_mm(3), [F(-1), F(1)]),
    (osp_B(0, 2), [F(-7, 2)]),
    (osp_D(5, 2), [F(-1), F(1)]),
    (d21a(3), [F(-4), F(1), F(3)]),
])
def test_stated_levels(spec, levels):
    assert conformal_levels(spec).solutions == levels


def test_critical_level_is_excluded():
    rep = conformal_levels(sl_mn(2, 1))
    assert rep.excluded == [(F(-1), "critical level of g")]
    assert exclusion_reason(sl_mn(2, 1), F(-1)) == "critical level of g"
    assert exclusion_reason(f4(), F(1)) is None


@pytest.mark.parametrize("spec", CATALOG, ids=lambda s: s.name)
def test_solutions_satisfy_every_piece(spec):
    for k in conformal_levels(spec).solutions:
        chk = check_conformal(spec, k)
        assert chk.ok and all(r == 0 for r in chk.residuals)
        for p in spec.pieces:
            assert delta(spec, k, p.label) == 1


def _sympy_roots(spec, label):
    k = sympy.Symbol("k")
    expr = 0
    ab = spec.abelian
    if ab is not None and label.charge:
        expr += sympy.Rational(label.charge ** 2 / ab.scaling) / (2 * sympy.Rational(ab.level_coeff) * k)
    for f, w in zip(spec.nonabelian, label.weights):
        expr += sympy.Rational(f.casimir(w)) / (2 * (sympy.Rational(f.level_coeff) * k + f.h_vee))
    sols = sympy.solve(sympy.together(expr - 1), k)
    return sorted(F(int(sympy.fraction(s)[0]), int(sympy.fraction(s)[1])) for s in sols if s.is_rational)


@pytest.mark.parametrize("spec", CATALOG[::3], ids=lambda s: s.name)
def test_piece_roots_agree_with_sympy(spec):
    for p in spec.pieces:
        eq = piece_equation(spec, p.label)
        assert eq.roots == _sympy_roots(spec, p.label)
        for r in eq.roots:
            assert eq.numerator(r) == 0


@given(st.sampled_from(CATALOG), st.fractions(min_value=-20, max_value=20, max_denominator=7))
def test_non_solutions_fail_the_check(spec, k):
    chk = check_conformal(spec, k)
    if k in conformal_levels(spec).solutions:
        assert chk.ok
    else:
        assert not chk.ok


def test_pole_raises():
    spec = sl_mn(3, 2)
    with pytest.raises(PoleError):
        factor_terms(spec, spec.pieces[0].label, F(0))
    assert check_conformal(spec, F(0)).pole


def test_delta_is_sum_of_factor_terms():
    spec = f4()
    lab = ModuleLabel(F(0), ((2,), (0, 0, 0)))
    # sl(2) casimir of weight 2 is 4, over 2(-2/3 + 2); the trivial B3 weight adds 0
    assert factor_terms(spec, lab, 1) == [F(4) / (2 * (F(-2, 3) + 2)), 0]
    assert delta(spec, 1, lab) == F(3, 2)


def test_sieve_spo23():
    spec = spo23()
    labels = [ModuleLabel(F(0), ((r,), (s,))) for r in range(3) for s in range(9)]
    res = integrality_sieve(spec, F(-3, 4), labels)
    assert set(res.integral) | set(res.negative) | set(res.non_integral) == set(labels)
    assert res.integral[ModuleLabel(F(0), ((1,), (6,)))] == 3
    assert res.integral[ModuleLabel(F(0), ((0,), (0,)))] == 0
    for lab, h in res.non_integral.items():
        assert h.denominator != 1
