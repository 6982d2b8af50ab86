from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import fock_series
from superconf import freefield as ff
from superconf.freefield import I, QI2, SQRT2

parts = st.fractions(min_value=-6, max_value=6, max_denominator=5)
qi2 = st.builds(QI2, parts, parts, parts, parts)


@given(qi2, qi2, qi2)
def test_qi2_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


def test_qi2_units():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert (I * SQRT2) * (I * SQRT2) == -2
    with pytest.raises(ZeroDivisionError):
        QI2().inverse()
    assert hash(QI2(3)) == hash(F(3))


def test_make_fock_validates():
    with pytest.raises(ValueError):
        ff.make_fock(0, 0)
    with pytest.raises(ff.CapExceeded):
        ff.make_fock(30, 2)


@pytest.mark.parametrize("m,n", ff.FOCK_CATALOG)
def test_mode_algebra(m, n):
    spec = ff.make_fock(m, n)
    assert ff.check_mode_algebra(spec, max_e2=3 if m + n > 3 else 4) == []


@pytest.mark.parametrize("m,n", [(0, 1), (0, 2), (1, 0), (3, 0), (1, 1), (2, 1), (2, 2)])
def test_graded_dimension_matches_generating_function(m, n):
    spec = ff.make_fock(m, n)
    table = ff.graded_dimension(spec, 3)
    totals: dict = {}
    for (_, e), (even, odd) in table.items():
        t = totals.setdefault(int(2 * e), [0, 0])
        t[0] += even
        t[1] += odd
    want = fock_series(m, 2 * n, 6)
    assert {k: tuple(v) for k, v in totals.items()} == {k: tuple(v) for k, v in want.items() if any(v)}


def test_graded_dimension_single_weight():
    spec = ff.make_fock(1, 1)
    zero = (F(0),)
    table = ff.graded_dimension(spec, 1, weight=zero)
    assert table[(zero, F(0))] == (1, 0)
    # the weight-zero fermion at energy 1/2
    assert table[(zero, F(1, 2))] == (0, 1)


def test_state_round_trip():
    spec = ff.make_fock(2, 1)
    vec = ff.state(spec, [(0, -1), (2, -2)]) + ff.state(spec, [(3, -1)]).scale(F(-2, 3))
    assert ff.load_state(spec, ff.dump_state(spec, vec)) == vec


@pytest.mark.parametrize("m,n", [(2, 1), (3, 1), (4, 2), (0, 2), (5, 0)])
def test_subalgebra_dimensions(m, n):
    spec = ff.make_fock(m, n)
    assert len(ff.fock_subalgebra(spec, "full").basis) == ff.osp_dimension(m, n)
    assert len(ff.fock_subalgebra(spec, "so").basis) == m * (m - 1) // 2
    assert len(ff.fock_subalgebra(spec, "sp").basis) == n * (2 * n + 1)
    assert len(ff.fock_subalgebra(spec, "even").basis) == m * (m - 1) // 2 + n * (2 * n + 1)
    with pytest.raises(ValueError):
        ff.fock_subalgebra(spec, "odd")


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (3, 1)])
def test_homomorphism_small(m, n):
    assert ff.check_homomorphism(ff.make_fock(m, n)).ok


@pytest.mark.parametrize("m,n", ff.FOCK_CATALOG)
def test_casimir_routes_agree(m, n):
    spec = ff.make_fock(m, n)
    c = ff.casimir_eigenvalue(spec)
    assert c == m - 2 * n - 1
    assert ff.casimir_by_modes(spec) == [c] * spec.size


def test_sugawara_equals_free_virasoro():
    spec = ff.make_fock(2, 1)
    rep = ff.check_sugawara(spec)
    assert rep.ok and rep.equals_free_virasoro and not rep.critical


def test_critical_fock_space():
    spec = ff.make_fock(3, 1)
    rep = ff.check_sugawara(spec)
    assert rep.critical and rep.casimir == 0 and rep.ok
    with pytest.raises(ValueError):
        ff.sugawara_state(spec)
    # the free Virasoro vector still acts as it should
    om = ff.free_virasoro_state(spec)
    for g in range(spec.size):
        v = ff.mode_apply(spec, g, -1, ff.VACUUM)
        assert ff.mode_apply(spec, g, 1, om) == v.scale(F(1, 2))


def test_wick_matches_modes_on_small_space():
    spec = ff.make_fock(1, 1)
    quads = [c.quadratic for c in ff.fock_osp(spec).currents]
    assert ff.check_wick_vs_modes(spec, quads, max_e2=3) == []


def test_singular_vectors_of_single_boson_pair():
    spec = ff.make_fock(0, 1)
    alg = ff.fock_subalgebra(spec, "sp")
    got = ff.singular_weights(ff.enumerate_singular(alg, ff.standard_functional(0, 1), 2))
    assert [(w, e) for w, e, _ in got] == [((F(0),), F(0)), ((F(1),), F(1, 2))]


def test_singular_enumeration_independent_of_basis_order():
    spec = ff.make_fock(2, 1)
    alg = ff.fock_osp(spec, even_only=True)
    fun = ff.standard_functional(1, 1)
    plain = ff.singular_weights(ff.enumerate_singular(alg, fun, F(3, 2)))
    shuffled = ff.singular_weights(ff.enumerate_singular(alg, fun, F(3, 2), seed=7))
    assert plain == shuffled
    for piece in ff.enumerate_singular(alg, fun, F(3, 2), seed=3):
        for v in piece.basis:
            assert ff.is_singular(alg, fun, v)


def test_w_vector_of_rank_one():
    rep = ff.check_W_singular(1, 1)
    assert rep.ok and rep.energy == 1 and rep.sugawara_weight != 1
    with pytest.raises(ValueError):
        ff.w_setup(3)


def test_phi_a_basis_cross_checks():
    ws = ff.w_setup(1)
    pspec = ff.phi_a_spec(ws)
    rows, _ = ff.phi_a_change_of_basis(ws)
    G = ff.transformed_gram(ws, rows)
    assert all(G[i][j] == pspec.gram[i][j] for i in range(len(G)) for j in range(len(G)))
    v1 = ff.current(ws.spec, ff.lift(ws.spec, ff.odd_root_vector(ws, 1))).quadratic
    assert ff.quadratic_to_phi_a_basis(ws, pspec, v1) == ff.closed_form_v(ws, pspec, 1)
    W = ff.build_W_phi_a_basis(ws, pspec, 1)
    lead, prod = ff.leading_part(pspec, W, ws.m), ff.leading_product(ws, pspec, 1)
    # the leading part is the product scaled by 1/sqrt2
    assert lead == prod.scale(QI2(0, 0, F(1, 2)))
