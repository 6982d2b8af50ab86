"""Named verification suites: each returns a list of Assertion records.

Expected values are the published statements; where the engine disagrees the
assertion fails and the detail shows both sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import freefield as ff
from .conformal import conformal_levels, delta
from .fusion import (chain_report, closure, f4_classification, filtered_dot, g3_classification,
                     osp_pair_classification, spo23_classification)
from .superalg import (ModuleLabel, d21a, f4, g3, gl_in_sl, osp_B, osp_C, osp_D, osp_pair, psl_mm,
                       sl2_osp32_in_g3, sl_mn, spo23, super_casimir_osp)

F = Fraction


@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str
    source: str


def _fmt(values) -> str:
    return "{" + ", ".join(str(v) for v in sorted(values)) + "}"


def _levels_assertion(spec, expected, source) -> Assertion:
    got = set(conformal_levels(spec).solutions)
    want = {F(x) for x in expected}
    return Assertion(f"levels {spec.name}", got == want, f"computed {_fmt(got)}, stated {_fmt(want)}", source)


# --- stated conformal levels ------------------------------------------------------------

def stated_sl(m: int, n: int) -> set:
    if (m, n) == (2, 1):
        return {F(-1, 2)}
    if n == 1:
        return {F(-1), F(1 - m, 2)}
    if m == n + 1:
        return {F(1), F(-1, 2)}
    return {F(1), F(-1), F(n - m, 2)}


def stated_B(m: int, n: int) -> set:
    if m == 0:
        return {F(-(2 * n + 3), 2)}
    if m == n:
        return {F(3, 2)}
    return {F(1), F(3 - 2 * m + 2 * n, 2)}


def stated_D(m: int, n: int) -> set:
    return {F(1)} if m == n else {F(1), F(2 - m + n)}


def stated_C(n: int) -> set:
    return {F(2)} if n == 1 else {F(1), F(1 + n)}


def stated_D21a(a) -> set:
    a = F(a)
    if a == F(-1, 2):
        return {F(1, 2)}
    if a in (1, -2):
        return {F(1)}
    return {F(1), -1 - a, a}


def stated_gl_in_sl(n: int, m: int) -> set:
    return {F(1), F(-(n + 1 - m), 2)}


D21A_VALUES = (F(2), F(3), F(1, 3), F(-3), F(5), F(1), F(-1, 2), F(-2))


def thm_cf() -> list:
    src = "classification of conformal levels of the even part"
    out = []
    for m in range(2, 9):
        for n in range(1, m):
            out.append(_levels_assertion(sl_mn(m, n), stated_sl(m, n), src))
    out += [_levels_assertion(psl_mm(m), {1, -1}, src) for m in range(2, 7)]
    for m in range(0, 7):
        for n in range(1, 7):
            out.append(_levels_assertion(osp_B(m, n), stated_B(m, n), src))
    for m in range(2, 7):
        for n in range(1, 7):
            out.append(_levels_assertion(osp_D(m, n), stated_D(m, n), src))
    out += [_levels_assertion(osp_C(n), stated_C(n), src) for n in range(1, 7)]
    out.append(_levels_assertion(f4(), {1, F(-3, 2)}, src))
    out.append(_levels_assertion(g3(), {1, F(-4, 3)}, src))
    out += [_levels_assertion(d21a(a), stated_D21a(a), src) for a in D21A_VALUES]
    return out


def thm_super_super() -> list:
    src = "conformal levels of subalgebras that are not the even part"
    out = []
    for n in range(1, 7):
        for m in range(1, 7):
            if n not in (m, m - 1):
                out.append(_levels_assertion(gl_in_sl(n, m), stated_gl_in_sl(n, m), src))
    out.append(_levels_assertion(sl2_osp32_in_g3(), {1, F(-4, 3)}, src))
    return out


# --- ledgers ----------------------------------------------------------------------------

def show(x) -> str:
    """Readable text for nested sets, tuples and fractions."""
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(sorted(show(v) for v in x)) + "}"
    if isinstance(x, (list, tuple)):
        return "(" + ", ".join(show(v) for v in x) + ")"
    return str(x)


def _check(name, got, want, source) -> Assertion:
    return Assertion(name, got == want, f"computed {show(got)}, expected {show(want)}", source)


def _lab(*weights, charge=0) -> ModuleLabel:
    return ModuleLabel(F(charge), tuple(tuple(w) for w in weights))


def spo23_ledger() -> list:
    spec, k = spo23(), F(-3, 4)
    src = "spo(2|3) at k=-3/4: conformal weights and fusion constraints"
    values = {(1, 10): F(33, 5), (1, 8): F(23, 5), (1, 6): F(3), (2, 8): F(28, 5), (2, 6): F(4),
              (2, 4): F(14, 5), (0, 8): F(4), (0, 6): F(12, 5), (0, 4): F(6, 5), (8, 0): F(16),
              (7, 2): F(13), (6, 2): F(10), (5, 0): F(7)}
    out = [_check(f"h_({r},{s})", delta(spec, k, _lab((r,), (s,))), h, src) for (r, s), h in values.items()]
    so3_only = spo23_classification(admissible_sp2=False)
    inclusions = {(5, 0): {(6, 2)}, (6, 2): {(7, 2), (5, 0)}, (7, 2): {(8, 0), (6, 2)}, (8, 0): {(7, 2)}}
    for b, want in inclusions.items():
        res = filtered_dot(spec, k, so3_only, _lab((1,), (2,)), _lab((b[0],), (b[1],)))
        got = {(lab.weights[0][0], lab.weights[1][0]) for lab in res.kept}
        out.append(_check(f"V(1,2).V{b}", got, want, src))
    fam = closure(spec, k, spo23_classification(), [_lab((1,), (2,))])
    got = {(lab.weights[0][0], lab.weights[1][0]) for lab in fam.family}
    out.append(_check("closure of V(1,2)", got, {(0, 0), (1, 2), (3, 0), (2, 2)}, src))
    return out


def f4_ledger() -> list:
    spec, k, cl = f4(), F(1), f4_classification()
    src = "F(4) at k=1: conformal weights and fusion constraints"
    w0, w1, w3 = (0, 0, 0), (1, 0, 0), (0, 0, 1)
    values = [((7,), w3, F(49, 4)), ((4,), w0, F(9, 2)), ((4,), w1, F(5)), ((6,), w1, F(19, 2)),
              ((6,), w0, F(9)), ((3,), w3, F(13, 4)), ((5,), w3, F(7)), ((2,), w0, F(3, 2)),
              ((0,), w1, F(1, 2))]
    out = [_check(f"h{show((a, b))}", delta(spec, k, _lab(a, b)), h, src) for a, b, h in values]
    g, v = _lab((1,), w3), _lab((2,), w1)
    products = [(g, g, {((0,), w0), ((2,), w1)}), (g, v, {((1,), w3)}), (v, v, {((0,), w0)})]
    for a, b, want in products:
        got = {lab.weights for lab in filtered_dot(spec, k, cl, a, b).kept}
        out.append(_check(f"{show(a.weights)}.{show(b.weights)}", got, want, src))
    return out


def g3_ledger() -> list:
    spec, k, cl = g3(), F(1), g3_classification()
    src = "G(3) at k=1: integrality sieve and the chain from V(8,0)"
    got = set()
    for r in range(0, 10):
        for m in (0, 1):
            if (r, m) == (0, 0):
                continue
            h = delta(spec, k, _lab((r,), (m, 0)))
            if h.denominator == 1:
                got.add(h)
    out = [_check("integral weights", got, {F(x) for x in (16, 7, 3, 1, 13, 10, 2)}, src)]
    rep = chain_report(spec, k, cl, _lab((8,), (0, 0)), _lab((1,), (1, 0)))
    visited = {(lab.weights[0][0], lab.weights[1][0]) for lab in rep.visited}
    out.append(_check("chain family", visited, {(8, 0), (7, 1), (6, 1), (5, 0)}, src))
    out.append(_check("chain is a trap", rep.trap, True, src))
    return out


def _osp_label(n, r, s):
    d = tuple([r] + [0] * (n + 3))
    c = tuple(int(j == s - 1) for j in range(n))
    return _lab(d, c)


def osp_h(n, r, s, spec=None) -> Fraction:
    return delta(spec or osp_pair(n), -2, _osp_label(n, r, s))


def osp_ledger(max_n: int = 8, chain_n: int = 6) -> list:
    src = "osp(2n+8|2n) at k=-2: conformal weights, fusion chain and the weight equation"
    out = []
    for n in range(1, max_n + 1):
        spec = osp_pair(n)

        def h(r, s):
            return osp_h(n, r, s, spec)
        ok1 = all(h(2 * n + 2 - r, r) == 2 * n + 2 - r for r in range(0, n + 1))
        ok4 = all(h(r, r) == r for r in range(0, n + 1))
        bad = [(2 * n + 2 - r, r - 2) for r in range(2, n + 2)] + \
              [(2 * n + 2 - r, r + 2) for r in range(0, n - 1)] + \
              [(r + 1, r - 1) for r in range(1, n + 1)] + [(r - 1, r + 1) for r in range(1, n)]
        nonint = [rs for rs in bad if h(*rs).denominator == 1]
        out.append(_check(f"n={n} h[2n+2-r,r]=2n+2-r", ok1, True, src))
        out.append(_check(f"n={n} h[r,r]=r", ok4, True, src))
        out.append(_check(f"n={n} non-integral items", nonint, [], src))
        sols = [(i, j) for i in range(51) for j in range(n + 1)
                if F(super_casimir_osp(n, i, j), 8) == h(i, j)]
        out.append(_check(f"n={n} weight equation solutions", sols, [(0, 0)], src))
    for n in range(1, chain_n + 1):
        spec, cl = osp_pair(n), osp_pair_classification(n)
        w1 = _osp_label(n, 1, 1)
        for i in range(1, n + 1):
            got = {(lab.weights[0][0], next((j + 1 for j, x in enumerate(lab.weights[1]) if x), 0))
                   for lab in filtered_dot(spec, -2, cl, w1, _osp_label(n, i, i)).kept}
            want = {(i - 1, i - 1), (i + 1, i + 1)} if i < n else {(n - 1, n - 1)}
            out.append(_check(f"n={n} W1.V({i},{i})", got, want, src))
    return out


def b0n_ledger(max_n: int = 8) -> list:
    src = "B(0,n) at its conformal level: weights of 2w1 and w2"
    out = []
    for n in range(1, max_n + 1):
        spec = osp_B(0, n)
        k = F(-(2 * n + 3), 2)
        w = [0] * n
        w[0] = 2
        out.append(_check(f"n={n} h(2w1)", delta(spec, k, _lab(tuple(w))), 2 + F(2, 2 * n + 1), src))
        if n >= 2:
            w = [0] * n
            w[1] = 1
            out.append(_check(f"n={n} h(w2)", delta(spec, k, _lab(tuple(w))), 2 - F(2, 2 * n + 1), src))
    return out


# --- free fields ------------------------------------------------------------------------

def freefield_homo() -> list:
    src = "free-field realization of osp(m|2n) at level 1"
    out = []
    for m, n in ff.FOCK_CATALOG:
        rep = ff.check_homomorphism(ff.make_fock(m, n))
        out.append(Assertion(f"M({m}|{2 * n}) homomorphism", rep.ok,
                             f"{rep.pairs} pairs, {len(rep.failures)} failures", src))
    return out


def freefield_sugawara() -> list:
    src = "Casimir and Sugawara vector of the free-field realization"
    out = []
    for m, n in ff.FOCK_CATALOG:
        spec = ff.make_fock(m, n)
        rep = ff.check_sugawara(spec)
        out.append(_check(f"M({m}|{2 * n}) Casimir", rep.casimir, F(m - 2 * n - 1), src))
        out.append(Assertion(f"M({m}|{2 * n}) Sugawara", rep.ok,
                             "critical level: unnormalized Casimir state checked" if rep.critical
                             else "v(1)Phi(omega) = v/2 and Phi(omega) = free Virasoro", src))
    return out


def _gen_highest(spec, functional):
    return max(spec.weights, key=lambda w: ff.positive_functional(w, functional))


def freefield_singular() -> list:
    src = "singular vectors in Fock spaces up to energy 2"
    out = []
    for m, n in ((1, 1), (2, 1), (2, 2)):
        spec = ff.make_fock(m, n)
        fun = ff.standard_functional(m // 2, n)
        got = {(w, e) for w, e, _ in ff.singular_weights(ff.enumerate_singular(ff.fock_osp(spec), fun, 2))}
        zero = tuple(F(0) for _ in spec.weights[0])
        want = {(zero, F(0)), (tuple(_gen_highest(spec, fun)), F(1, 2))}
        out.append(_check(f"M({m}|{2 * n}) full singular weights", got, want, src))
    spec = ff.make_fock(2, 2)
    fun = ff.standard_functional(1, 2)
    got = {(tuple(int(x) for x in w[:2]), e)
           for w, e, _ in ff.singular_weights(ff.enumerate_singular(ff.fock_osp(spec, True), fun, 2))}
    want = {((0, 0), F(0)), ((1, 0), F(1, 2)), ((-1, 0), F(1, 2)), ((0, 1), F(1, 2)),
            ((1, 1), F(1)), ((-1, 1), F(1)), ((2, 0), F(2)), ((-2, 0), F(2))}
    out.append(_check("M(2|4) even-part singular weights", got, want, src))
    return out


def w_vectors() -> list:
    src = "vectors W_i in M(4n|4m), m = n + 4"
    out = []
    for n in (1, 2):
        ws = ff.w_setup(n)
        for i in range(0, n + 1):
            rep = ff.check_W_singular(n, i, ws)
            out.append(Assertion(f"n={n} W_{i}", rep.ok,
                                 f"energy {rep.energy}, g0-singular {rep.g0_singular}, "
                                 f"affine weight {rep.sugawara_weight}", src))
    return out


SUITES = {
    "thm-cf": thm_cf,
    "thm-super-super": thm_super_super,
    "spo23-ledger": spo23_ledger,
    "f4-ledger": f4_ledger,
    "g3-ledger": g3_ledger,
    "osp-ledger": lambda: osp_ledger() + b0n_ledger(),
    "freefield-homo": freefield_homo,
    "freefield-sugawara": freefield_sugawara,
    "freefield-singular": freefield_singular,
    "W-vectors": w_vectors,
}


def run_suite(name: str) -> list:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn()
