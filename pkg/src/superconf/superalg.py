"""Basic classical Lie superalgebras as catalog data.

A catalog entry records the even part of g as a list of factors (simple,
abelian or, for some embeddings, a Lie superalgebra), the branching of the
odd part into irreducible pieces and the super root data used to recompute
the dual Coxeter number.  Each simple factor carries the scaling of the
restricted invariant form relative to its normalized form; the affine
level of that factor is then level_coeff * k.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache, reduce
from operator import mul
from typing import Sequence

from .liealg import RootSystem, build_root_system, casimir, dual_coxeter, weyl_dimension
from .scalar import ParamRational, evaluate

F = Fraction


class CatalogError(ValueError):
    pass


# --- super root data ---------------------------------------------------------

def _dot(gram, x, y):
    s = F(0)
    for i, a in enumerate(x):
        if a:
            for j, b in enumerate(y):
                if b:
                    s = s + gram[i][j] * a * b
    return s


@dataclass(frozen=True)
class SuperRootData:
    """Roots in an ambient basis with a (possibly degenerate) Gram matrix.

    center, when given, is a weight that is projected out of the form; it is
    used for sl(m|n), whose Cartan subalgebra is the supertraceless part.
    """
    labels: tuple
    gram: tuple
    even_positive: tuple
    odd_positive: tuple
    order: tuple              # linear functional choosing theta
    rank: int
    center: tuple | None = None

    def form(self, x: Sequence, y: Sequence):
        val = _dot(self.gram, x, y)
        if self.center is not None:
            z = self.center
            val = val - _dot(self.gram, x, z) * _dot(self.gram, y, z) / _dot(self.gram, z, z)
        return val

    @property
    def rho2(self) -> tuple:
        n = len(self.labels)
        out = [F(0)] * n
        for r in self.even_positive:
            out = [o + x for o, x in zip(out, r)]
        for r in self.odd_positive:
            out = [o - x for o, x in zip(out, r)]
        return tuple(out)

    @property
    def theta(self) -> tuple:
        roots = list(self.even_positive) + list(self.odd_positive)
        return max(roots, key=lambda r: sum(a * b for a, b in zip(self.order, r)))

    def casimir(self, lam: Sequence):
        """(lam, lam + 2 rho)."""
        return self.form(lam, tuple(a + b for a, b in zip(lam, self.rho2)))

    def dual_coxeter(self):
        return self.casimir(self.theta) / 2

    @property
    def dim_even(self) -> int:
        return self.rank + 2 * len(self.even_positive)

    @property
    def dim_odd(self) -> int:
        return 2 * len(self.odd_positive)

    def substitute(self, a_value) -> SuperRootData:
        g = tuple(tuple(evaluate(x, a_value) for x in row) for row in self.gram)
        return replace(self, gram=g)


def _unit(n, i, c=1):
    return tuple(F(c) if j == i else F(0) for j in range(n))


def _add(*vs):
    return tuple(sum(x) for x in zip(*vs))


def _scale(c, v):
    return tuple(c * x for x in v)


def osp_root_data(M: int, N: int, scale=1) -> SuperRootData:
    """osp(M|2N) with (eps_i, eps_i) = scale, (delta_j, delta_j) = -scale.

    scale = 1 is the form (1/2) str.  The positive system puts the deltas
    on top, so theta = 2 delta_1 when N >= 1.
    """
    m = M // 2
    odd_m = M % 2
    n = m + N
    e = [_unit(n, i) for i in range(m)]
    d = [_unit(n, m + j) for j in range(N)]
    neg = lambda v: _scale(-1, v)
    gram = tuple(tuple((F(scale) if i < m else -F(scale)) if i == j else F(0) for j in range(n)) for i in range(n))
    even = []
    for i in range(N):
        for j in range(i + 1, N):
            even += [_add(d[i], neg(d[j])), _add(d[i], d[j])]
        even.append(_scale(2, d[i]))
    for i in range(m):
        for j in range(i + 1, m):
            even += [_add(e[i], neg(e[j])), _add(e[i], e[j])]
        if odd_m:
            even.append(e[i])
    odd = []
    for i in range(N):
        for j in range(m):
            odd += [_add(d[i], neg(e[j])), _add(d[i], e[j])]
        if odd_m:
            odd.append(d[i])
    order = tuple([F(m - i) for i in range(m)] + [F(1000 * (N - j)) for j in range(N)])
    labels = tuple([f"e{i + 1}" for i in range(m)] + [f"d{j + 1}" for j in range(N)])
    return SuperRootData(labels, gram, tuple(even), tuple(odd), order, n)


def sl_root_data(m: int, n: int) -> SuperRootData:
    """sl(m|n) in the supertrace form, distinguished positive system."""
    size = m + n
    gram = tuple(tuple((F(1) if i < m else F(-1)) if i == j else F(0) for j in range(size)) for i in range(size))
    u = [_unit(size, i) for i in range(size)]
    neg = lambda v: _scale(-1, v)
    even, odd = [], []
    for i in range(size):
        for j in range(i + 1, size):
            root = _add(u[i], neg(u[j]))
            if (i < m) == (j < m):
                even.append(root)
            else:
                odd.append(root)
    order = tuple(F(size - i) for i in range(size))
    labels = tuple([f"e{i + 1}" for i in range(m)] + [f"d{j + 1}" for j in range(n)])
    center = None if m == n else tuple([F(1)] * m + [F(-1)] * n)
    rank = size - 1 if m != n else size - 2
    return SuperRootData(labels, gram, tuple(even), tuple(odd), order, rank, center)


def f4_root_data() -> SuperRootData:
    n = 4
    gram = tuple(tuple((F(1) if i < 3 else F(-3)) if i == j else F(0) for j in range(n)) for i in range(n))
    e = [_unit(n, i) for i in range(3)]
    d = _unit(n, 3)
    neg = lambda v: _scale(-1, v)
    even = [d]
    for i in range(3):
        for j in range(i + 1, 3):
            even += [_add(e[i], neg(e[j])), _add(e[i], e[j])]
        even.append(e[i])
    odd = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            for s3 in (1, -1):
                odd.append((F(s1, 2), F(s2, 2), F(s3, 2), F(1, 2)))
    return SuperRootData(("e1", "e2", "e3", "d"), gram, tuple(even), tuple(odd),
                         (F(3), F(2), F(1), F(100)), 4)


def g3_root_data() -> SuperRootData:
    """Coordinates eps_1, eps_2, eps_3 (summing to zero) and delta."""
    t = F(2, 3)
    gram = ((t, -F(1, 3), -F(1, 3), F(0)),
            (-F(1, 3), t, -F(1, 3), F(0)),
            (-F(1, 3), -F(1, 3), t, F(0)),
            (F(0), F(0), F(0), -F(2, 3)))
    order = (F(2), F(1), F(-3), F(100))
    e = [_unit(4, i) for i in range(3)]
    d = _unit(4, 3)
    neg = lambda v: _scale(-1, v)
    f = lambda v: sum(a * b for a, b in zip(order, v))
    g2 = []
    for i in range(3):
        g2 += [e[i], neg(e[i])]
        for j in range(3):
            if i != j:
                g2.append(_add(e[i], neg(e[j])))
    even = [r for r in g2 if f(r) > 0] + [_scale(2, d)]
    odd = [d] + [_add(d, e[i]) for i in range(3)] + [_add(d, neg(e[i])) for i in range(3)]
    return SuperRootData(("e1", "e2", "e3", "d"), gram, tuple(even), tuple(odd), order, 3)


def d21a_root_data(a) -> SuperRootData:
    half = F(1, 2)
    gram = ((half, F(0), F(0)), (F(0), a * half, F(0)), (F(0), F(0), -(1 + a) * half))
    even = (_unit(3, 0, 2), _unit(3, 1, 2), _unit(3, 2, 2))
    odd = tuple((F(1), F(s2), F(s3)) for s2 in (1, -1) for s3 in (1, -1))
    return SuperRootData(("e1", "e2", "e3"), gram, even, odd, (F(100), F(10), F(1)), 3)


# --- factors, pieces, specs --------------------------------------------------

@dataclass(frozen=True)
class Factor:
    name: str
    kind: str                          # "abelian", "simple" or "super"
    scaling: object                    # form scaling; for abelian the value (w|w)
    level_coeff: object                # level of the factor is level_coeff * k
    h_vee: object = F(0)
    root_system: RootSystem | None = None
    super_data: SuperRootData | None = None
    long_root: tuple | None = None     # a long root in the ambient root data
    source: str = ""

    def casimir(self, weight) -> Fraction:
        if self.kind == "simple":
            return casimir(self.root_system, weight)
        if self.kind == "super":
            return self.super_data.casimir(weight)
        raise CatalogError("abelian factor has no Casimir")

    def dimension(self) -> int:
        if self.kind == "abelian":
            return 1
        if self.kind == "simple":
            return self.root_system.dimension
        return self.super_data.dim_even + self.super_data.dim_odd

    def module_dimension(self, weight) -> int:
        if self.kind == "simple":
            return weyl_dimension(self.root_system, weight)
        raise CatalogError("dimension only for simple factors")


@dataclass(frozen=True, order=True)
class ModuleLabel:
    """Highest weight of a module of the even part: abelian charge and one
    weight per non-abelian factor."""
    charge: Fraction
    weights: tuple

    def __str__(self):
        parts = [",".join(str(x) for x in w) for w in self.weights]
        body = ";".join(f"({p})" for p in parts)
        return body if self.charge == 0 else f"q={self.charge}:{body}"


@dataclass(frozen=True)
class BranchPiece:
    charge: Fraction
    weights: tuple
    multiplicity: int = 1

    @property
    def label(self) -> ModuleLabel:
        return ModuleLabel(self.charge, self.weights)


@dataclass(frozen=True)
class SuperAlgebraSpec:
    family: str
    params: tuple
    name: str
    h_vee: object
    factors: tuple
    pieces: tuple
    root_data: SuperRootData | None
    dim_even: int
    dim_odd: int
    source: str = ""
    embedding: bool = False

    @property
    def abelian(self) -> Factor | None:
        for f in self.factors:
            if f.kind == "abelian":
                return f
        return None

    @property
    def nonabelian(self) -> tuple:
        return tuple(f for f in self.factors if f.kind != "abelian")

    def param(self, key, default=None):
        return dict(self.params).get(key, default)

    def is_symbolic(self) -> bool:
        vals = [self.h_vee] + [f.scaling for f in self.factors] + [f.level_coeff for f in self.factors]
        return any(isinstance(v, ParamRational) and not v.is_constant() for v in vals)

    def at(self, a_value) -> SuperAlgebraSpec:
        """Instantiate the free parameter a."""
        facs = tuple(replace(f, scaling=evaluate(f.scaling, a_value), level_coeff=evaluate(f.level_coeff, a_value),
                             h_vee=evaluate(f.h_vee, a_value)) for f in self.factors)
        rd = self.root_data.substitute(a_value) if self.root_data else None
        params = tuple((k, F(a_value) if k == "a" else v) for k, v in self.params)
        return replace(self, factors=facs, root_data=rd, h_vee=evaluate(self.h_vee, a_value), params=params,
                       name=self.name.replace("a)", f"{F(a_value)})"))


def _simple(family: str, rank: int, c, long_root=None, name=None, source="") -> Factor:
    rs = build_root_system(family, rank)
    c = c if isinstance(c, ParamRational) else F(c)
    return Factor(name or str(rs), "simple", c, c, dual_coxeter(rs), rs, None, long_root, source)


def _abelian(value, name="u(1)") -> Factor:
    return Factor(name, "abelian", F(value), F(1), F(0), source="supertrace of the central element squared")


def _e(n, i):
    return tuple(F(int(j == i)) for j in range(n))


def _known_dimension(family: str, p: dict) -> tuple[int, int]:
    def osp(M, N):
        return M * (M - 1) // 2 + N * (2 * N + 1), 2 * M * N
    if family == "sl":
        m, n = p["m"], p["n"]
        return m * m + n * n - 1, 2 * m * n
    if family == "psl":
        m = p["m"]
        return 2 * (m * m - 1), 2 * m * m
    if family == "B":
        return osp(2 * p["m"] + 1, p["n"])
    if family == "D":
        return osp(2 * p["m"], p["n"])
    if family == "C":
        return osp(2, p["n"])
    if family == "F4":
        return 24, 16
    if family == "G3":
        return 17, 14
    if family == "D21a":
        return 9, 8
    if family == "spo23":
        return 6, 6
    raise CatalogError(f"no dimension formula for {family}")


def validate(spec: SuperAlgebraSpec) -> SuperAlgebraSpec:
    """Consistency checks; raises CatalogError on any mismatch."""
    if spec.root_data is not None and not spec.is_symbolic():
        hv = spec.root_data.dual_coxeter()
        if hv != spec.h_vee:
            raise CatalogError(f"{spec.name}: stored h_vee {spec.h_vee} != computed {hv}")
    for f in spec.factors:
        if f.kind == "simple":
            if f.h_vee != dual_coxeter(f.root_system):
                raise CatalogError(f"{spec.name}: wrong dual Coxeter number for {f.name}")
            if f.scaling != f.level_coeff:
                raise CatalogError(f"{spec.name}: level coefficient of {f.name} differs from form scaling")
            if f.long_root is not None and spec.root_data is not None:
                norm = spec.root_data.form(f.long_root, f.long_root)
                if 2 / norm != f.scaling:
                    raise CatalogError(f"{spec.name}: form scaling of {f.name} inconsistent with root data")
        elif f.kind == "super":
            if f.super_data.dual_coxeter() != f.h_vee:
                raise CatalogError(f"{spec.name}: wrong dual Coxeter number for {f.name}")
    if not spec.embedding:
        de = sum(f.dimension() for f in spec.factors)
        do = 0
        simple = [f for f in spec.nonabelian]
        for piece in spec.pieces:
            do += piece.multiplicity * reduce(mul, (f.module_dimension(w) for f, w in zip(simple, piece.weights)), 1)
        if (de, do) != (spec.dim_even, spec.dim_odd):
            raise CatalogError(f"{spec.name}: dimensions {(de, do)} != {(spec.dim_even, spec.dim_odd)}")
        if spec.root_data is not None and (spec.root_data.dim_even, spec.root_data.dim_odd) != (de, do):
            raise CatalogError(f"{spec.name}: root data dimensions disagree with factors")
    return spec


def _spec(family, params, name, h_vee, factors, pieces, root_data, source="", embedding=False, dims=None):
    if dims is None:
        dims = _known_dimension(family, dict(params))
    return validate(SuperAlgebraSpec(family, tuple(params), name, h_vee, tuple(factors), tuple(pieces), root_data,
                                     dims[0], dims[1], source, embedding))


def _w(rank, i, c=1):
    """c times the i-th fundamental weight (1-based) as Dynkin labels."""
    return tuple(c if j == i - 1 else 0 for j in range(rank))


def sl_mn(m: int, n: int) -> SuperAlgebraSpec:
    if m < 1 or n < 1 or m == n or m + n < 3:
        raise CatalogError("sl(m|n) needs m != n, m, n >= 1")
    rd = sl_root_data(m, n)
    size = m + n
    factors = [_abelian(F(m * n, n - m))]
    plus, minus = [], []
    if m >= 2:
        factors.append(_simple("A", m - 1, 1, _add(_e(size, 0), _scale(-1, _e(size, 1)))))
        plus.append(_w(m - 1, 1))
        minus.append(_w(m - 1, m - 1))
    if n >= 2:
        factors.append(_simple("A", n - 1, -1, _add(_e(size, m), _scale(-1, _e(size, m + 1)))))
        plus.append(_w(n - 1, n - 1))
        minus.append(_w(n - 1, 1))
    pieces = [BranchPiece(F(1), tuple(plus)), BranchPiece(F(-1), tuple(minus))]
    return _spec("sl", (("m", m), ("n", n)), f"sl({m}|{n})", F(m - n), factors, pieces, rd)


def psl_mm(m: int) -> SuperAlgebraSpec:
    if m < 2:
        raise CatalogError("psl(m|m) needs m >= 2")
    rd = sl_root_data(m, m)
    size = 2 * m
    factors = [_simple("A", m - 1, 1, _add(_e(size, 0), _scale(-1, _e(size, 1)))),
               _simple("A", m - 1, -1, _add(_e(size, m), _scale(-1, _e(size, m + 1))))]
    pieces = [BranchPiece(F(0), (_w(m - 1, 1), _w(m - 1, m - 1))),
              BranchPiece(F(0), (_w(m - 1, m - 1), _w(m - 1, 1)))]
    return _spec("psl", (("m", m),), f"psl({m}|{m})", F(0), factors, pieces, rd)


def _sp_factor(n, M, N, t):
    size = M // 2 + N
    probe = _scale(2, _e(size, M // 2))
    return _simple("C", n, -1 / (2 * F(t)), probe)


def osp_B(m: int, n: int) -> SuperAlgebraSpec:
    """B(m,n) = osp(2m+1|2n), m >= 0, n >= 1."""
    if m < 0 or n < 1:
        raise CatalogError("B(m,n) needs m >= 0, n >= 1")
    M = 2 * m + 1
    if m == 0:
        rd = osp_root_data(1, n, -1)
        factors = [_sp_factor(n, M, n, -1)]
        pieces = [BranchPiece(F(0), (_w(n, 1),))]
        h = F(2 * n + 1)
    else:
        rd = osp_root_data(M, n)
        size = m + n
        if m == 1:
            so = _simple("A", 1, 2, _e(size, 0), name="so(3)")
            vec = (2,)
        else:
            so = _simple("B", m, 1, _add(_e(size, 0), _scale(-1, _e(size, 1))))
            vec = _w(m, 1)
        factors = [so, _sp_factor(n, M, n, 1)]
        pieces = [BranchPiece(F(0), (vec, _w(n, 1)))]
        h = F(2 * m - 2 * n - 1)
    return _spec("B", (("m", m), ("n", n)), f"B({m},{n})", h, factors, pieces, rd)


def osp_D(m: int, n: int) -> SuperAlgebraSpec:
    """D(m,n) = osp(2m|2n), m >= 2, n >= 1."""
    if m < 2 or n < 1:
        raise CatalogError("D(m,n) needs m >= 2, n >= 1")
    rd = osp_root_data(2 * m, n)
    size = m + n
    e0, e1 = _e(size, 0), _e(size, 1)
    if m == 2:
        factors = [_simple("A", 1, 1, _add(e0, _scale(-1, e1)), name="sl(2)"),
                   _simple("A", 1, 1, _add(e0, e1), name="sl(2)'"),
                   _sp_factor(n, 4, n, 1)]
        pieces = [BranchPiece(F(0), ((1,), (1,), _w(n, 1)))]
    else:
        factors = [_simple("D", m, 1, _add(e0, _scale(-1, e1))), _sp_factor(n, 2 * m, n, 1)]
        pieces = [BranchPiece(F(0), (_w(m, 1), _w(n, 1)))]
    return _spec("D", (("m", m), ("n", n)), f"D({m},{n})", F(2 * m - 2 * n - 2), factors, pieces, rd)


def osp_C(n: int) -> SuperAlgebraSpec:
    """C(n+1) = osp(2|2n), n >= 1."""
    if n < 1:
        raise CatalogError("C(n+1) needs n >= 1")
    rd = osp_root_data(2, n)
    factors = [_abelian(1), _sp_factor(n, 2, n, 1)]
    pieces = [BranchPiece(F(1), (_w(n, 1),)), BranchPiece(F(-1), (_w(n, 1),))]
    return _spec("C", (("n", n),), f"C({n + 1})", F(-2 * n), factors, pieces, rd)


def osp(M: int, N: int) -> SuperAlgebraSpec:
    """osp(M|2N) dispatched to the B, C or D series."""
    if M % 2:
        return osp_B((M - 1) // 2, N)
    if M == 2:
        return osp_C(N)
    return osp_D(M // 2, N)


def f4() -> SuperAlgebraSpec:
    rd = f4_root_data()
    factors = [_simple("A", 1, F(-2, 3), _e(4, 3), name="sl(2)"),
               _simple("B", 3, 1, (F(1), F(-1), F(0), F(0)))]
    pieces = [BranchPiece(F(0), ((1,), (0, 0, 1)))]
    return _spec("F4", (), "F(4)", F(3), factors, pieces, rd)


def g3() -> SuperAlgebraSpec:
    rd = g3_root_data()
    factors = [_simple("A", 1, F(-3, 4), _scale(2, _e(4, 3)), name="sl(2)"),
               _simple("G", 2, 1, (F(1), F(-1), F(0), F(0)))]
    pieces = [BranchPiece(F(0), ((1,), (1, 0)))]
    return _spec("G3", (), "G(3)", F(2), factors, pieces, rd)


def d21a(a=None) -> SuperAlgebraSpec:
    """D(2,1;a); with a=None the parameter stays symbolic."""
    sym = a is None
    av = ParamRational.variable("a") if sym else F(a)
    if not sym and av in (0, -1):
        raise CatalogError("D(2,1;a) needs a not in {0, -1}")
    rd = d21a_root_data(av)
    one = ParamRational(1) if sym else F(1)
    cs = [one, 1 / av, -1 / (1 + av)]
    factors = [_simple("A", 1, c, _unit(3, i, 2), name=f"sl(2)_{i + 1}") for i, c in enumerate(cs)]
    pieces = [BranchPiece(F(0), ((1,), (1,), (1,)))]
    name = "D(2,1;a)" if sym else f"D(2,1;{av})"
    spec = SuperAlgebraSpec("D21a", (("a", None if sym else av),), name, F(0), tuple(factors), tuple(pieces),
                            rd, 9, 8)
    return validate(spec)


def spo23() -> SuperAlgebraSpec:
    """spo(2|3), i.e. osp(3|2) with the form giving sp(2) level k."""
    t = F(-1, 2)
    rd = osp_root_data(3, 1, t)
    factors = [_simple("A", 1, 1, _scale(2, _e(2, 1)), name="sp(2)"),
               _simple("A", 1, -4, _e(2, 0), name="so(3)")]
    pieces = [BranchPiece(F(0), ((1,), (2,)))]
    return _spec("spo23", (), "spo(2|3)", F(1, 2), factors, pieces, rd)


# --- embeddings of subalgebras that are not the even part ---------------------

def gl_in_sl(n: int, m: int) -> SuperAlgebraSpec:
    """gl(n|m) inside sl(n+1|m)."""
    if n < 1 or m < 1 or n == m or n == m - 1:
        raise CatalogError("gl(n|m) in sl(n+1|m) needs n != m, m-1")
    sub = sl_root_data(n, m)
    size = n + m
    sup = Factor(f"sl({n}|{m})", "super", F(1), F(1), F(n - m), None, sub)
    ab = _abelian(F(n - m, n - m + 1))
    plus = BranchPiece(F(1), (_e(size, 0),))
    minus = BranchPiece(F(-1), (_scale(-1, _e(size, size - 1)),))
    dims = ((n + 1 + m) ** 2 - 1, 0)
    return _spec("gl_in_sl", (("n", n), ("m", m)), f"gl({n}|{m}) in sl({n + 1}|{m})", F(n + 1 - m),
                 [ab, sup], [plus, minus], sl_root_data(n + 1, m), embedding=True, dims=dims)


def sl2_osp32_in_g3() -> SuperAlgebraSpec:
    sub = osp_root_data(3, 1)
    sup = Factor("osp(3|2)", "super", F(3, 2), F(3, 2), F(-1), None, sub)
    sl2 = _simple("A", 1, 1, name="sl(2)")
    # coordinates of the osp(3|2) weight: (eps_1, delta_1)
    piece = BranchPiece(F(0), ((1,), (F(1, 2), F(1))))
    return _spec("sl2_osp32_in_G3", (), "sl(2)+osp(3|2) in G(3)", F(2), [sl2, sup], [piece], g3_root_data(),
                 embedding=True, dims=(31, 0))


def osp_pair(n: int) -> SuperAlgebraSpec:
    """osp(2n+8|2n) = D(n+4, n), whose level -2 is studied by the fusion tools."""
    return osp_D(n + 4, n)


FAMILIES = {
    "sl": sl_mn, "psl": psl_mm, "B": osp_B, "D": osp_D, "C": osp_C, "F4": f4, "G3": g3,
    "D21a": d21a, "spo23": spo23, "osp": osp, "gl_in_sl": gl_in_sl, "sl2_osp32_in_G3": sl2_osp32_in_g3,
}


def catalog(family: str, **params) -> SuperAlgebraSpec:
    try:
        ctor = FAMILIES[family]
    except KeyError:
        raise CatalogError(f"unknown family {family!r}") from None
    return ctor(**params)


def catalog_entries() -> list[SuperAlgebraSpec]:
    """A representative finite list of catalog entries used by checks."""
    out = []
    for m in range(2, 6):
        for n in range(1, 5):
            if m != n:
                out.append(sl_mn(m, n))
    out += [psl_mm(m) for m in range(2, 5)]
    out += [osp_B(m, n) for m in range(0, 5) for n in range(1, 4)]
    out += [osp_D(m, n) for m in range(2, 6) for n in range(1, 4)]
    out += [osp_C(n) for n in range(1, 5)]
    out += [f4(), g3(), spo23()]
    out += [d21a(a) for a in (2, 3, F(1, 3), -3, 5, 1, F(-1, 2), -2)]
    return out


@lru_cache(maxsize=None)
def _osp_pair_root_data(n: int) -> SuperRootData:
    return osp_root_data(2 * n + 8, n)


def super_casimir_osp(n: int, i: int, j: int) -> Fraction:
    """(lam, lam + 2 rho) for lam = i eps_1 + delta_1 + ... + delta_j in
    osp(2n+8|2n) with the form (1/2) str."""
    rd = _osp_pair_root_data(n)
    m = n + 4
    lam = [F(0)] * (m + n)
    lam[0] = F(i)
    for t in range(j):
        lam[m + t] = F(1)
    return rd.casimir(lam)


# --- catalog overrides ---------------------------------------------------------

def spec_from_dict(data: dict) -> SuperAlgebraSpec:
    """Build a spec from a JSON-style dict (used for catalog overrides)."""
    from .scalar import as_rational
    factors = []
    for fd in data["factors"]:
        kind = fd["kind"]
        if kind == "abelian":
            factors.append(_abelian(as_rational(fd["scaling"])))
        else:
            fam = fd["type"].rstrip("0123456789")
            rank = int(fd["type"][len(fam):])
            c = as_rational(fd.get("level_coeff", fd["scaling"]))
            f = _simple(fam, rank, c, name=fd.get("name"))
            if as_rational(fd["scaling"]) != c:
                raise CatalogError("level coefficient must equal the form scaling")
            factors.append(f)
    pieces = [BranchPiece(as_rational(p.get("charge", 0)), tuple(tuple(w) for w in p["weights"]),
                          int(p.get("mult", 1))) for p in data["branching"]]
    params = tuple(sorted(data.get("params", {}).items()))
    spec = SuperAlgebraSpec(data["family"], params, data.get("name", data["family"]), as_rational(data["h_vee"]),
                            tuple(factors), tuple(pieces), None, int(data.get("dim_even", 0)),
                            int(data.get("dim_odd", 0)), data.get("source", "catalog override"),
                            embedding=True)
    return validate(spec)
