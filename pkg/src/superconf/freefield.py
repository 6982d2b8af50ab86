"""Exact Fock-space engine for free fermions and symplectic bosons.

M_(m|2n) is generated by V = Pi C^{m|2n} with lambda-bracket
[v_lambda w] = <w, v>.  A generator e with mode e(q) (the q-th product
mode) creates for q < 0 and annihilates for q >= 0.  The state
e(-q-1)|0> has energy q + 1/2; energies are doubled internally.

Fock vectors are dicts {monomial: coefficient}; a monomial is a sorted
tuple of creation slots (generator, q) standing for e_generator(-q-1).
Coefficients are Fractions, or QI2 numbers where sqrt(-1) and sqrt(2)
are needed.
"""
from __future__ import annotations

import json
import random
from bisect import bisect_left
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .linalg import sparse_nullspace

F = Fraction
MAX_GENERATORS = 32
MAX_ENERGY2 = 12

# the free-field specs used by the identity checks
FOCK_CATALOG = ((1, 1), (2, 1), (3, 1), (2, 2), (4, 2))


class CapExceeded(ValueError):
    pass


class NotInAlgebra(ValueError):
    pass


# --- Q(i, sqrt2) -------------------------------------------------------------------

class QI2:
    """a + b i + c r + d i r with r = sqrt(2), r^2 = 2, exact rational parts."""
    __slots__ = ("v",)

    def __init__(self, a=0, b=0, c=0, d=0):
        self.v = (F(a), F(b), F(c), F(d))

    @classmethod
    def coerce(cls, x) -> "QI2":
        return x if isinstance(x, QI2) else cls(x)

    def __add__(self, o):
        o = QI2.coerce(o)
        return QI2(*(x + y for x, y in zip(self.v, o.v)))

    __radd__ = __add__

    def __neg__(self):
        return QI2(*(-x for x in self.v))

    def __sub__(self, o):
        return self + (-QI2.coerce(o))

    def __rsub__(self, o):
        return QI2.coerce(o) - self

    def __mul__(self, o):
        a, b, c, d = self.v
        e, f, g, h = QI2.coerce(o).v
        # basis 1, i, r, ir:  i*i = -1, r*r = 2, i*ir = -r, r*ir = 2i, ir*ir = -2
        return QI2(a * e - b * f + 2 * c * g - 2 * d * h,
                   a * f + b * e + 2 * c * h + 2 * d * g,
                   a * g + c * e - b * h - d * f,
                   a * h + d * e + b * g + c * f)

    __rmul__ = __mul__

    def _gauss_inverse(self):
        # inverse of u = a + b i (c = d = 0)
        a, b = self.v[0], self.v[1]
        n = a * a + b * b
        return QI2(a / n, -b / n)

    def inverse(self) -> "QI2":
        if not self:
            raise ZeroDivisionError("QI2 division by zero")
        a, b, c, d = self.v
        u, w = QI2(a, b), QI2(c, d)          # self = u + w r
        conj = u - QI2(0, 0, c, d)           # u - w r
        norm = u * u - w * w * 2             # lies in Q(i)
        return conj * norm._gauss_inverse()

    def __truediv__(self, o):
        return self * QI2.coerce(o).inverse()

    def __rtruediv__(self, o):
        return QI2.coerce(o) * self.inverse()

    def __eq__(self, o):
        try:
            return self.v == QI2.coerce(o).v
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        if not any(self.v[1:]):
            return hash(self.v[0])
        return hash(self.v)

    def __bool__(self):
        return any(self.v)

    def __repr__(self):
        return f"QI2{tuple(str(x) for x in self.v)}"

    def to_json(self):
        return [{"num": x.numerator, "den": x.denominator} for x in self.v]


I = QI2(0, 1)
SQRT2 = QI2(0, 0, 1)


# --- spec ----------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeFieldSpec:
    names: tuple
    parity: tuple          # field parity: 1 = fermion (odd field), 0 = symplectic boson
    gram: tuple            # gram[i][j] = <e_i, e_j>
    weights: tuple         # weight coordinates of each generator
    label: str = ""

    def __post_init__(self):
        n = len(self.names)
        if n > MAX_GENERATORS:
            raise CapExceeded(f"{n} generators exceeds cap {MAX_GENERATORS}")
        for i in range(n):
            for j in range(n):
                g, h = self.gram[i][j], self.gram[j][i]
                if g and self.parity[i] != self.parity[j]:
                    raise ValueError("pairing mixes fermions and bosons")
                # fermion block symmetric, boson block antisymmetric
                if self.parity[i] and g != h or not self.parity[i] and g != -h:
                    raise ValueError("pairing is not supersymmetric")

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def fermions(self) -> int:
        return sum(self.parity)

    @property
    def cparity(self) -> tuple:
        """Parity in C^{m|2n}, the reverse of the field parity."""
        return tuple(1 - p for p in self.parity)

    @cached_property
    def dual(self) -> list:
        """Rows c with e^j = sum_b c[j][b] e_b, so that <e_i, e^j> = delta."""
        from .linalg import inverse, transpose
        return inverse(transpose([list(r) for r in self.gram]))

    def index(self, name: str) -> int:
        return self.names.index(name)

    @cached_property
    def cache(self) -> dict:
        """Memo of single-monomial mode actions."""
        return {}


def make_fock(m: int, n: int) -> FreeFieldSpec:
    """M_(m|2n): m fermions e_1..e_m and n boson pairs e_{m+1}..e_{m+2n}.

    Pairings: <e_{m-k+1}, e_h> = delta_hk, <e_{m+2n-j+1}, e_{m+i}> = -delta_ij,
    <e_{m+n-j+1}, e_{m+n+i}> = delta_ij.  Weights: e_h has eps_h and
    e_{m-h+1} has -eps_h (the middle fermion of odd m has weight 0);
    e_{m+i} has delta_i and e_{m+2n-i+1} has -delta_i.
    """
    if m < 0 or n < 0 or m + n < 1:
        raise ValueError("need m, n >= 0 and m + n >= 1")
    if m + 2 * n > MAX_GENERATORS:
        raise CapExceeded(f"m + 2n = {m + 2 * n} exceeds cap {MAX_GENERATORS}")
    size = m + 2 * n
    gram = [[F(0)] * size for _ in range(size)]
    for h in range(m):
        gram[m - 1 - h][h] = F(1)
    for i in range(n):
        gram[m + 2 * n - 1 - i][m + i] = F(-1)
        gram[m + i][m + 2 * n - 1 - i] = F(1)
    p, dim = m // 2, m // 2 + n
    weights = []
    for h in range(m):
        w = [F(0)] * dim
        if h < p:
            w[h] = F(1)
        elif h >= m - p:
            w[m - 1 - h] = F(-1)
        weights.append(tuple(w))
    for j in range(2 * n):
        w = [F(0)] * dim
        if j < n:
            w[p + j] = F(1)
        else:
            w[p + 2 * n - 1 - j] = F(-1)
        weights.append(tuple(w))
    names = tuple(f"e{i + 1}" for i in range(size))
    return FreeFieldSpec(names, tuple([1] * m + [0] * (2 * n)), tuple(map(tuple, gram)),
                         tuple(weights), f"M({m}|{2 * n})")


# --- Fock vectors and modes ------------------------------------------------------

class FockVector(dict):
    """Exact linear combination of monomials; treat as immutable."""

    def clean(self) -> "FockVector":
        return FockVector({k: v for k, v in self.items() if v})

    def __add__(self, o):
        out = FockVector(self)
        for k, v in o.items():
            out[k] = out.get(k, 0) + v
        return out.clean()

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, c) -> "FockVector":
        return FockVector({k: v * c for k, v in self.items()}).clean()

    def is_zero(self) -> bool:
        return not any(self.values())


VACUUM = FockVector({(): F(1)})


def energy2(mono) -> int:
    """Doubled energy of a monomial."""
    return sum(2 * q + 1 for _, q in mono)


def energy(mono) -> Fraction:
    return F(energy2(mono), 2)


def monomial_weight(spec: FreeFieldSpec, mono) -> tuple:
    dim = len(spec.weights[0]) if spec.weights else 0
    w = [F(0)] * dim
    for g, _ in mono:
        for t, x in enumerate(spec.weights[g]):
            w[t] += x
    return tuple(w)


def _max_energy2(vec) -> int:
    return max((energy2(m) for m in vec), default=0)


def _mono_mode(spec: FreeFieldSpec, gen: int, q: int, mono: tuple) -> tuple:
    """e_gen(q) on one monomial as ((monomial, coefficient), ...)."""
    key = ("e", gen, q, mono)
    hit = spec.cache.get(key)
    if hit is not None:
        return hit
    odd = spec.parity[gen]
    out: dict = {}
    if q < 0:
        slot = (gen, -q - 1)
        pos = bisect_left(mono, slot)
        if not (odd and pos < len(mono) and mono[pos] == slot):
            sign = -1 if odd and sum(spec.parity[g] for g, _ in mono[:pos]) % 2 else 1
            out[mono[:pos] + (slot,) + mono[pos:]] = sign
    else:
        sign = 1
        for pos, (g, r) in enumerate(mono):
            if r == q:
                val = spec.gram[g][gen]
                if val:
                    k = mono[:pos] + mono[pos + 1:]
                    out[k] = out.get(k, 0) + sign * val
            if odd and spec.parity[g]:
                sign = -sign
    res = tuple((k, v) for k, v in out.items() if v)
    spec.cache[key] = res
    return res


def mode_apply(spec: FreeFieldSpec, gen: int, q: int, vec) -> FockVector:
    """e_gen(q) applied to vec."""
    out: dict = {}
    for mono, c in vec.items():
        for k, v in _mono_mode(spec, gen, q, mono):
            out[k] = out.get(k, 0) + v * c
    return FockVector({k: v for k, v in out.items() if v})


def state(spec: FreeFieldSpec, modes: Sequence[tuple]) -> FockVector:
    """Apply (generator, mode) pairs right to left to the vacuum."""
    v = VACUUM
    for gen, q in reversed(list(modes)):
        v = mode_apply(spec, gen, q, v)
    return v


def _add_into(acc: dict, vec, c):
    for k, v in vec.items():
        acc[k] = acc.get(k, 0) + c * v


def _pair_mode(spec: FreeFieldSpec, a: int, b: int, n: int, mono: tuple) -> tuple:
    """(:ab:)_(n) on one monomial:
    sum_{j<0} a_(j) b_(n-1-j) + p(a,b) sum_{j>=0} b_(n-1-j) a_(j)."""
    key = ("ab", a, b, n, mono)
    hit = spec.cache.get(key)
    if hit is not None:
        return hit
    smax = (energy2(mono) - 1) // 2
    sgn = -1 if spec.parity[a] and spec.parity[b] else 1
    acc: dict = {}
    for j in range(n - 1 - smax, 0):
        for m1, c1 in _mono_mode(spec, b, n - 1 - j, mono):
            for m2, c2 in _mono_mode(spec, a, j, m1):
                acc[m2] = acc.get(m2, 0) + c1 * c2
    for j in range(0, smax + 1):
        for m1, c1 in _mono_mode(spec, a, j, mono):
            for m2, c2 in _mono_mode(spec, b, n - 1 - j, m1):
                acc[m2] = acc.get(m2, 0) + sgn * c1 * c2
    res = tuple((k, v) for k, v in acc.items() if v)
    spec.cache[key] = res
    return res


def quadratic_mode_apply(spec: FreeFieldSpec, quad: dict, n: int, vec) -> FockVector:
    """(sum Q_ab :ab:)_(n) applied to vec."""
    acc: dict = {}
    for mono, cv in vec.items():
        for (a, b), c in quad.items():
            for k, v in _pair_mode(spec, a, b, n, mono):
                acc[k] = acc.get(k, 0) + c * cv * v
    return FockVector({k: v for k, v in acc.items() if v})


# --- super linear algebra on C^{m|2n} ---------------------------------------------

def zeros(n: int) -> list:
    return [[F(0)] * n for _ in range(n)]


def elementary(n: int, r: int, a: int, c=F(1)) -> list:
    X = zeros(n)
    X[r][a] = c
    return X


def mat_add(A, B, c=1):
    return [[x + c * y for x, y in zip(r, s)] for r, s in zip(A, B)]


def mat_mul(A, B):
    n = len(B[0])
    cols = [[B[k][j] for k in range(len(B))] for j in range(n)]
    return [[sum((x * y for x, y in zip(row, col) if x and y), F(0)) for col in cols] for row in A]


def matrix_parity(X, cparity) -> int | None:
    """Parity of a homogeneous supermatrix, None if inhomogeneous or zero."""
    ps = {(cparity[i] + cparity[j]) % 2 for i, row in enumerate(X) for j, x in enumerate(row) if x}
    return ps.pop() if len(ps) == 1 else None


def supercommutator(X, Y, cparity):
    px, py = matrix_parity(X, cparity) or 0, matrix_parity(Y, cparity) or 0
    return mat_add(mat_mul(X, Y), mat_mul(Y, X), -1 if not (px and py) else 1)


def supertrace(X, cparity) -> Fraction:
    return sum((X[i][i] if not cparity[i] else -X[i][i] for i in range(len(X))), F(0))


def in_osp(X, gram, cparity) -> bool:
    """<Xu, v> + (-1)^{p(X)p(u)} <u, Xv> = 0 on basis vectors."""
    p = matrix_parity(X, cparity)
    if p is None:
        return not any(x for row in X for x in row)
    n = len(X)
    for u in range(n):
        for v in range(n):
            lhs = sum((X[a][u] * gram[a][v] for a in range(n) if X[a][u]), F(0))
            rhs = sum((gram[u][b] * X[b][v] for b in range(n) if X[b][v]), F(0))
            if lhs + (-1 if p and cparity[u] else 1) * rhs:
                return False
    return True


@dataclass
class AlgebraElement:
    matrix: list
    parity: int
    weight: tuple
    name: str = ""


def _partner(gram) -> list:
    n = len(gram)
    out = []
    for a in range(n):
        nz = [b for b in range(n) if gram[a][b]]
        if len(nz) != 1:
            raise ValueError("pairing is not a signed permutation")
        out.append(nz[0])
    return out


def osp_basis(gram, cparity, weights) -> list[AlgebraElement]:
    """Basis of osp from antisymmetrized elementary matrices E_ra + c E_{pi(a) pi(r)}."""
    n = len(gram)
    pi = _partner(gram)
    seen, out = set(), []
    for r in range(n):
        for a in range(n):
            if (r, a) in seen:
                continue
            s, t = pi[a], pi[r]
            seen.update({(r, a), (s, t)})
            X = elementary(n, r, a)
            if (s, t) != (r, a):
                # solve for c from the membership condition on (u, v) = (a, pi(r))
                Y = elementary(n, s, t)
                c = _partner_coefficient(X, Y, gram, cparity)
                if c is None:
                    continue
                X = mat_add(X, Y, c)
            if not in_osp(X, gram, cparity):
                continue
            w = tuple(x - y for x, y in zip(weights[r], weights[a]))
            out.append(AlgebraElement(X, (cparity[r] + cparity[a]) % 2, w, f"E{r + 1},{a + 1}"))
    return out


def _partner_coefficient(X, Y, gram, cparity):
    n = len(X)
    p = matrix_parity(X, cparity)

    def cond(M, u, v):
        lhs = sum((M[a][u] * gram[a][v] for a in range(n) if M[a][u]), F(0))
        rhs = sum((gram[u][b] * M[b][v] for b in range(n) if M[b][v]), F(0))
        return lhs + (-1 if p and cparity[u] else 1) * rhs

    for u in range(n):
        for v in range(n):
            cx, cy = cond(X, u, v), cond(Y, u, v)
            if cy:
                return -cx / cy
    return None


def osp_dimension(m: int, n: int) -> int:
    """dim osp(m|2n)."""
    return m * (m - 1) // 2 + n * (2 * n + 1) + 2 * m * n


def dual_basis(basis: Sequence[AlgebraElement], cparity) -> list:
    """x^j with (1/2) str(x_i x^j) = delta_ij."""
    from .linalg import inverse, transpose
    B = [[supertrace(mat_mul(x.matrix, y.matrix), cparity) / 2 for y in basis] for x in basis]
    C = inverse(transpose(B))
    out = []
    for j in range(len(basis)):
        M = zeros(len(basis[0].matrix))
        for k, x in enumerate(basis):
            if C[j][k]:
                M = mat_add(M, x.matrix, C[j][k])
        out.append(M)
    return out


def casimir_matrix(basis, cparity) -> list:
    """sum_i x^i x_i on C^{m|2n}."""
    dual = dual_basis(basis, cparity)
    n = len(basis[0].matrix)
    out = zeros(n)
    for x, xd in zip(basis, dual):
        out = mat_add(out, mat_mul(xd, x.matrix))
    return out


# --- currents and quadratics ------------------------------------------------------

def canonical_quadratic(spec: FreeFieldSpec, quad: dict) -> dict:
    """Order pairs with :ab: = (-1)^{p(a)p(b)} :ba:; fermionic squares vanish."""
    out: dict = defaultdict(int)
    for (a, b), c in quad.items():
        if not c:
            continue
        if a > b:
            a, b = b, a
            if spec.parity[a] and spec.parity[b]:
                c = -c
        if a == b and spec.parity[a]:
            continue
        out[(a, b)] += c
    return {k: v for k, v in out.items() if v}


@dataclass
class Current:
    matrix: list
    parity: int
    quadratic: dict

    def mode(self, spec: FreeFieldSpec, q: int, vec) -> FockVector:
        return quadratic_mode_apply(spec, self.quadratic, q, vec)


def phi(spec: FreeFieldSpec, X) -> dict:
    """Phi(X) = 1/2 sum_i :X(e_i) e^i: as a canonical quadratic."""
    n = spec.size
    dual = spec.dual
    quad: dict = defaultdict(int)
    for i in range(n):
        for a in range(n):
            xa = X[a][i]
            if not xa:
                continue
            for b in range(n):
                if dual[i][b]:
                    quad[(a, b)] += xa * dual[i][b] / 2
    return canonical_quadratic(spec, quad)


def current(spec: FreeFieldSpec, X, check: bool = True) -> Current:
    if check and not in_osp(X, spec.gram, spec.cparity):
        raise NotInAlgebra("matrix does not preserve the pairing")
    return Current(X, matrix_parity(X, spec.cparity) or 0, phi(spec, X))


def current_mode_apply(spec: FreeFieldSpec, cur: Current, q: int, vec) -> FockVector:
    return cur.mode(spec, q, vec)


def quadratic_parity(spec, quad) -> int:
    ps = {(spec.parity[a] + spec.parity[b]) % 2 for a, b in quad}
    return ps.pop() if len(ps) == 1 else 0


def _bracket_gen_quadratic(spec, x: int, quad: dict) -> dict:
    """[x_lambda Q] for a generator x: constant in lambda, linear in generators."""
    G, par = spec.gram, spec.parity
    out: dict = defaultdict(int)
    for (c, d), k in quad.items():
        if G[c][x]:
            out[d] += k * G[c][x]
        if G[d][x]:
            out[c] += k * G[d][x] * (-1 if par[x] and par[c] else 1)
    return {g: v for g, v in out.items() if v}


def lambda_bracket_quadratics(spec: FreeFieldSpec, A: dict, B: dict) -> tuple[dict, Fraction]:
    """Wick computation of [A_lambda B] = quadratic + lambda * scalar."""
    par, G = spec.parity, spec.gram
    pA = quadratic_parity(spec, A)
    quad: dict = defaultdict(int)
    scalar = F(0)
    for (c, d), k in B.items():
        # [A_lambda c] by skew-symmetry from [c_lambda A]
        sgn = -1 if (pA and par[c]) else 1
        Lc = {g: -sgn * v for g, v in _bracket_gen_quadratic(spec, c, A).items()}
        sgn = -1 if (pA and par[d]) else 1
        Ld = {g: -sgn * v for g, v in _bracket_gen_quadratic(spec, d, A).items()}
        for u, v in Lc.items():
            quad[(u, d)] += k * v
            scalar += k * v * G[d][u]          # integral term
        s = -1 if (pA and par[c]) else 1
        for u, v in Ld.items():
            quad[(c, u)] += k * s * v
    return canonical_quadratic(spec, quad), scalar


# --- the osp(m|2n) data on a Fock spec ------------------------------------------------

@dataclass
class FockAlgebra:
    spec: FreeFieldSpec
    basis: list
    currents: list

    @cached_property
    def dual(self):
        return dual_basis(self.basis, self.spec.cparity)


def fock_osp(spec: FreeFieldSpec, even_only: bool = False) -> FockAlgebra:
    basis = osp_basis(spec.gram, spec.cparity, spec.weights)
    if even_only:
        basis = [x for x in basis if x.parity == 0]
    return FockAlgebra(spec, basis, [current(spec, x.matrix, check=False) for x in basis])


SUBALGEBRAS = ("full", "even", "so", "sp")


def fock_subalgebra(spec: FreeFieldSpec, part: str) -> FockAlgebra:
    """The full osp, its even part, or the so (fermion) or sp (boson) factor."""
    if part not in SUBALGEBRAS:
        raise ValueError(f"unknown subalgebra {part!r}")
    alg = fock_osp(spec, even_only=part != "full")
    if part in ("so", "sp"):
        want = 1 if part == "so" else 0
        keep = [i for i, x in enumerate(alg.basis)
                if all(spec.parity[r] == want for r, row in enumerate(x.matrix) for c, v in enumerate(row) if v)]
        alg = FockAlgebra(spec, [alg.basis[i] for i in keep], [alg.currents[i] for i in keep])
    return alg


@dataclass
class HomReport:
    pairs: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def check_homomorphism(spec: FreeFieldSpec, alg: FockAlgebra | None = None) -> HomReport:
    """[Phi(X)_lambda Phi(Y)] = Phi([X,Y]) + lambda/2 str(XY) on every basis pair."""
    alg = alg or fock_osp(spec)
    cp = spec.cparity
    fails = []
    for i, x in enumerate(alg.basis):
        for j, y in enumerate(alg.basis):
            quad, s = lambda_bracket_quadratics(spec, alg.currents[i].quadratic, alg.currents[j].quadratic)
            want = phi(spec, supercommutator(x.matrix, y.matrix, cp))
            ws = supertrace(mat_mul(x.matrix, y.matrix), cp) / 2
            if quad != want or s != ws:
                fails.append((x.name, y.name))
    return HomReport(len(alg.basis) ** 2, fails)


def casimir_eigenvalue(spec: FreeFieldSpec, alg: FockAlgebra | None = None) -> Fraction:
    """Scalar of sum x^i x_i on C^{m|2n}; raises if not scalar."""
    alg = alg or fock_osp(spec)
    C = casimir_matrix(alg.basis, spec.cparity)
    c = C[0][0]
    if any(C[i][j] != (c if i == j else 0) for i in range(len(C)) for j in range(len(C))):
        raise ArithmeticError("Casimir is not scalar")
    return c


def casimir_by_modes(spec: FreeFieldSpec, alg: FockAlgebra | None = None) -> list:
    """sum_i J_{x^i}(0) J_{x_i}(0) on each e_j(-1)|0>; returns the ratio per generator."""
    alg = alg or fock_osp(spec)
    duals = [current(spec, M, check=False) for M in alg.dual]
    out = []
    for g in range(spec.size):
        v = mode_apply(spec, g, -1, VACUUM)
        acc = FockVector()
        for cur, cd in zip(alg.currents, duals):
            acc = acc + cd.mode(spec, 0, cur.mode(spec, 0, v))
        key = ((g, 0),)
        ratio = acc.get(key, F(0))
        if acc != v.scale(ratio):
            raise ArithmeticError("Casimir zero-mode action is not scalar")
        out.append(ratio)
    return out


def casimir_state(spec: FreeFieldSpec, alg: FockAlgebra | None = None) -> FockVector:
    """sum_i :Phi(x^i) Phi(x_i): as a Fock state."""
    alg = alg or fock_osp(spec)
    duals = [current(spec, M, check=False) for M in alg.dual]
    acc = FockVector()
    for cur, cd in zip(alg.currents, duals):
        acc = acc + cd.mode(spec, -1, cur.mode(spec, -1, VACUUM))
    return acc


def sugawara_state(spec: FreeFieldSpec, alg: FockAlgebra | None = None) -> FockVector:
    """Phi(omega_sug) at level 1; requires m != 2n + 1 (k + h = m - 2n - 1)."""
    m, n2 = spec.fermions, spec.size - spec.fermions
    if m == n2 + 1:
        raise ValueError("critical level: m = 2n + 1")
    return casimir_state(spec, alg).scale(F(1, 2 * (m - n2 - 1)))


def free_virasoro_state(spec: FreeFieldSpec) -> FockVector:
    """omega = 1/2 sum_i :(d e_i) e^i: as a Fock state."""
    acc = FockVector()
    for i in range(spec.size):
        for b, c in enumerate(spec.dual[i]):
            if c:
                acc = acc + state(spec, [(i, -2), (b, -1)]).scale(c / 2)
    return acc


@dataclass
class SugawaraReport:
    casimir: Fraction
    casimir_modes_ok: bool            # v(q) S = delta_{q1} C v for the unnormalized S
    critical: bool                    # m = 2n + 1: no Sugawara vector
    positive_modes_ok: bool | None    # v(q) Phi(omega_sug) = delta_{q1} v/2
    equals_free_virasoro: bool | None

    @property
    def ok(self) -> bool:
        if self.critical:
            return self.casimir_modes_ok
        return self.casimir_modes_ok and self.positive_modes_ok and self.equals_free_virasoro


def _positive_modes_match(spec, vec, scalar) -> bool:
    for g in range(spec.size):
        want = mode_apply(spec, g, -1, VACUUM).scale(scalar)
        if mode_apply(spec, g, 1, vec) != want:
            return False
        if any(mode_apply(spec, g, q, vec) for q in (2, 3, 4)):
            return False
    return True


def check_sugawara(spec: FreeFieldSpec, alg: FockAlgebra | None = None) -> SugawaraReport:
    alg = alg or fock_osp(spec)
    C = casimir_eigenvalue(spec, alg)
    S = casimir_state(spec, alg)
    cas_ok = _positive_modes_match(spec, S, C)
    if C == 0:
        return SugawaraReport(C, cas_ok, True, None, None)
    om = S.scale(1 / (2 * C))
    return SugawaraReport(C, cas_ok, False, _positive_modes_match(spec, om, F(1, 2)),
                          om == free_virasoro_state(spec))


# --- bases and graded dimensions -----------------------------------------------------

def _slots(spec: FreeFieldSpec, max_e2: int) -> list:
    return sorted((g, q) for g in range(spec.size) for q in range((max_e2 + 1) // 2) if 2 * q + 1 <= max_e2)


def monomials(spec: FreeFieldSpec, e2: int) -> list:
    """All monomials of doubled energy exactly e2, sorted."""
    if e2 > MAX_ENERGY2:
        raise CapExceeded(f"doubled energy {e2} exceeds cap {MAX_ENERGY2}")
    slots = _slots(spec, e2)
    out = []

    def rec(start, remaining, cur):
        if remaining == 0:
            out.append(tuple(cur))
            return
        for idx in range(start, len(slots)):
            g, q = slots[idx]
            e = 2 * q + 1
            if e > remaining:
                continue
            nxt = idx + 1 if spec.parity[g] else idx
            cur.append((g, q))
            rec(nxt, remaining - e, cur)
            cur.pop()

    rec(0, e2, [])
    return sorted(out)


def graded_dimension(spec: FreeFieldSpec, max_energy, weight=None) -> dict:
    """{(weight, energy): (dim of +1, dim of -1 eigenspace of -Id)} up to max_energy."""
    max_e2 = int(2 * F(max_energy))
    if max_e2 > MAX_ENERGY2:
        raise CapExceeded(f"doubled energy {max_e2} exceeds cap {MAX_ENERGY2}")
    table: dict = defaultdict(lambda: [0, 0])
    for e2 in range(max_e2 + 1):
        for mono in monomials(spec, e2):
            w = monomial_weight(spec, mono)
            if weight is not None and w != tuple(weight):
                continue
            table[(w, F(e2, 2))][len(mono) % 2] += 1
    return {k: tuple(v) for k, v in sorted(table.items(), key=lambda kv: (kv[0][1], kv[0][0]))}


# --- singular vectors --------------------------------------------------------------

def positive_functional(weight, values) -> Fraction:
    return sum((x * v for x, v in zip(weight, values)), F(0))


def standard_functional(p: int, n: int) -> tuple:
    """eps_1 > ... > eps_p > 0 and delta_1 > ... > delta_n above them, generic."""
    return tuple(F(p - i) for i in range(p)) + tuple(F(p + n - j) + F(1, 2) for j in range(n))


@dataclass
class SingularPiece:
    weight: tuple
    energy: Fraction
    basis: list


def annihilators(alg: FockAlgebra, functional, max_e2: int) -> list:
    """(current, mode) pairs: all positive modes and raising zero modes."""
    ops = []
    for x, cur in zip(alg.basis, alg.currents):
        for q in range(1, max_e2 // 2 + 1):
            ops.append((cur, q))
        if any(x.weight) and positive_functional(x.weight, functional) > 0:
            ops.append((cur, 0))
    return ops


def is_singular(alg: FockAlgebra, functional, vec) -> bool:
    e2 = _max_energy2(vec)
    return all(not cur.mode(alg.spec, q, vec) for cur, q in annihilators(alg, functional, e2))


def enumerate_singular(alg: FockAlgebra, functional, max_energy, seed: int | None = None) -> list:
    """Kernel of the annihilators on each graded piece (weight, energy)."""
    spec = alg.spec
    max_e2 = int(2 * F(max_energy))
    rng = random.Random(seed) if seed is not None else None
    out = []
    for e2 in range(max_e2 + 1):
        ops = annihilators(alg, functional, e2)
        groups: dict = defaultdict(list)
        for mono in monomials(spec, e2):
            groups[monomial_weight(spec, mono)].append(mono)
        for w in sorted(groups):
            basis = groups[w]
            if rng is not None:
                basis = basis[:]
                rng.shuffle(basis)
                scales = [F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((1, -1)) for _ in basis]
            else:
                scales = [F(1)] * len(basis)
            rows: dict = defaultdict(dict)
            for col, (mono, s) in enumerate(zip(basis, scales)):
                vec = FockVector({mono: s})
                for k, (cur, q) in enumerate(ops):
                    for tgt, c in cur.mode(spec, q, vec).items():
                        rows[(k, tgt)][col] = rows[(k, tgt)].get(col, 0) + c
            kernel = sparse_nullspace(list(rows.values()), len(basis))
            if kernel:
                vecs = [FockVector({basis[c]: v * scales[c] for c, v in kv.items()}).clean() for kv in kernel]
                out.append(SingularPiece(w, F(e2, 2), vecs))
    return out


def singular_weights(pieces) -> list:
    """Multiset of (weight, energy) over singular pieces, with multiplicity."""
    return sorted((p.weight, p.energy, len(p.basis)) for p in pieces)


# --- the W vectors in M_(4n|4m), m = n + 4 ---------------------------------------------

@dataclass
class WSetup:
    n: int
    m: int
    spec: FreeFieldSpec          # generators v_{i,j} = e_i x f_j
    fgram: list                  # pairing on C^{2m|2n}
    fparity: tuple
    fweights: tuple
    even: list                   # so(2m) x sp(2n) basis on C^{2m|2n}
    even_currents: list


def _c_form(m: int, n: int):
    """<f_j, f_k> on C^{2m|2n}: f^j = f_{2m-j+1}, f^{2m+j} = f_{2m+2n-j+1}, f^{2m+n+j} = -f_{2m+n-j+1}."""
    size = 2 * m + 2 * n
    g = zeros(size)
    for j in range(2 * m):
        g[j][2 * m - 1 - j] = F(1)
    for j in range(n):
        g[2 * m + j][2 * m + 2 * n - 1 - j] = F(1)
        g[2 * m + n + j][2 * m + n - 1 - j] = F(-1)
    parity = tuple([0] * (2 * m) + [1] * (2 * n))
    weights = []
    for j in range(size):
        w = [F(0)] * (m + n)
        if j < m:
            w[j] = F(1)
        elif j < 2 * m:
            w[2 * m - 1 - j] = F(-1)
        elif j < 2 * m + n:
            w[m + j - 2 * m] = F(1)
        else:
            w[m + 2 * m + 2 * n - 1 - j] = F(-1)
        weights.append(tuple(w))
    return g, parity, tuple(weights)


def w_setup(n: int) -> WSetup:
    if not 1 <= n <= 2:
        raise ValueError("W vectors are built for n = 1, 2")
    m = n + 4
    fg, fp, fw = _c_form(m, n)
    size = len(fg)
    eg = [[F(0), F(1)], [F(-1), F(0)]]        # <e_1, e_2> = 1 on C^{0|2}
    idx = [(i, j) for i in range(2) for j in range(size)]
    gram = [[(-1 if fp[j] else 1) * eg[i][r] * fg[j][s] for (r, s) in idx] for (i, j) in idx]
    parity = tuple(fp[j] for _, j in idx)
    names = tuple(f"v{i + 1},{j + 1}" for i, j in idx)
    spec = FreeFieldSpec(names, parity, tuple(map(tuple, gram)), tuple(fw[j] for _, j in idx),
                         f"M({4 * n}|{4 * m})")
    even = [x for x in osp_basis(fg, fp, fw) if x.parity == 0]
    currents = [current(spec, lift(spec, x.matrix)) for x in even]
    return WSetup(n, m, spec, fg, fp, fw, even, currents)


def lift(spec: FreeFieldSpec, X) -> list:
    """I x X on C^{0|2} x C^{2m|2n} in the v basis."""
    size = len(X)
    big = zeros(2 * size)
    for i in range(2):
        for a in range(size):
            for b in range(size):
                if X[a][b]:
                    big[i * size + a][i * size + b] = X[a][b]
    return big


def odd_root_vector(ws: WSetup, i: int) -> list:
    """x_{eps_1 + delta_i}: the basis element containing E_{1, 2m+2n-i+1}."""
    target = (0, 2 * ws.m + 2 * ws.n - i)
    for x in osp_basis(ws.fgram, ws.fparity, ws.fweights):
        if x.matrix[target[0]][target[1]] == 1:
            return x.matrix
    raise LookupError("root vector not found")


def build_W(n: int, i: int, ws: WSetup | None = None) -> FockVector:
    """W_i = :v_i ... v_1: with v_r = Phi(x_{eps_1 + delta_r}); W_0 = |0>."""
    ws = ws or w_setup(n)
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    vec = VACUUM
    for r in range(1, i + 1):
        cur = current(ws.spec, lift(ws.spec, odd_root_vector(ws, r)))
        vec = cur.mode(ws.spec, -1, vec)
    return vec


@dataclass
class WReport:
    n: int
    i: int
    nonzero: bool
    energy: Fraction | None
    weights: list
    expected_weight: tuple
    g0_singular: bool
    sugawara_weight: Fraction
    conformal_mismatch: bool

    @property
    def ok(self) -> bool:
        return (self.nonzero and self.energy == self.i and self.weights == [self.expected_weight]
                and self.g0_singular and (self.conformal_mismatch or self.i == 0))


def check_W_singular(n: int, i: int, ws: WSetup | None = None) -> WReport:
    from .superalg import super_casimir_osp
    ws = ws or w_setup(n)
    vec = build_W(n, i, ws)
    energies = {energy(mono) for mono in vec}
    weights = sorted({monomial_weight(ws.spec, mono) for mono in vec})
    expected = tuple([F(i)] + [F(0)] * (ws.m - 1) + [F(1)] * i + [F(0)] * (n - i))
    alg = FockAlgebra(ws.spec, [_lifted_element(ws, x) for x in ws.even], ws.even_currents)
    functional = standard_functional(ws.m, n)
    sing = is_singular(alg, functional, vec) if vec else False
    h = F(super_casimir_osp(n, i, i), 8)
    return WReport(n, i, bool(vec), energies.pop() if len(energies) == 1 else None, weights,
                   expected, sing, h, h != i)


def _lifted_element(ws: WSetup, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(lift(ws.spec, x.matrix), x.parity, x.weight, x.name)


# --- the phi / a basis of M_(4n|4m) -----------------------------------------------------

def phi_a_change_of_basis(ws: WSetup) -> tuple[list, list]:
    """Rows of phi_1..phi_4n, a+_1..a+_2m, a-_1..a-_2m in the v basis, and their names."""
    n, m = ws.n, ws.m
    size = 2 * m + 2 * n

    def v(i, j):          # 1-based v_{i,j} -> index
        return (i - 1) * size + (j - 1)

    h = QI2(0, 0, F(1, 2))            # 1/sqrt2
    ih = I * h
    rows, names = [], []
    for k in range(1, 4 * n + 1):
        row = [QI2()] * (2 * size)
        if k <= n:
            row[v(1, 2 * m + k)] = ih
            row[v(2, 2 * m + 2 * n - k + 1)] = ih
        elif k <= 2 * n:
            row[v(1, 2 * m + k - n)] = h
            row[v(2, 2 * m + 3 * n - k + 1)] = -h
        elif k <= 3 * n:
            row[v(1, 2 * m + k - n)] = h
            row[v(2, 2 * m + 3 * n - k + 1)] = h
        else:
            row[v(1, 2 * m + k - 2 * n)] = ih
            row[v(2, 2 * m + 4 * n - k + 1)] = -ih
        rows.append(row)
        names.append(f"phi{k}")
    for k in range(1, 2 * m + 1):
        row = [QI2()] * (2 * size)
        row[v(2, k)] = QI2(1)
        rows.append(row)
        names.append(f"a+{k}")
    for k in range(1, 2 * m + 1):
        row = [QI2()] * (2 * size)
        row[v(1, 2 * m - k + 1)] = QI2(1)
        rows.append(row)
        names.append(f"a-{k}")
    return rows, names


def transformed_gram(ws: WSetup, rows) -> list:
    """<x, y> for the new generators."""
    G = ws.spec.gram
    out = []
    for rx in rows:
        line = []
        for ry in rows:
            s = QI2()
            for a, ca in enumerate(rx):
                if ca:
                    for b, cb in enumerate(ry):
                        if cb and G[a][b]:
                            s = s + ca * cb * G[a][b]
            line.append(s)
        out.append(line)
    return out


def phi_a_spec(ws: WSetup) -> FreeFieldSpec:
    """phi/a generators with [phi_i lambda phi_j] = delta_ij and [a+_i lambda a-_j] = delta_ij."""
    n, m = ws.n, ws.m
    rows, names = phi_a_change_of_basis(ws)
    size = len(names)
    gram = [[F(0)] * size for _ in range(size)]
    for k in range(4 * n):
        gram[k][k] = F(1)
    for k in range(2 * m):
        ap, am = 4 * n + k, 4 * n + 2 * m + k
        gram[am][ap] = F(1)       # <a-_k, a+_k> = [a+_k lambda a-_k]
        gram[ap][am] = F(-1)
    weights = []
    for row in rows:
        src = next(a for a, c in enumerate(row) if c)
        weights.append(ws.spec.weights[src])
    return FreeFieldSpec(tuple(names), tuple([1] * (4 * n) + [0] * (4 * m)), tuple(map(tuple, gram)),
                         tuple(weights), f"M({4 * n}|{4 * m}) phi/a basis")


def _inverse_qi2(rows) -> list:
    n = len(rows)
    M = [list(r) + [QI2(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col])
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col].inverse()
        M[col] = [x * p for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


def quadratic_to_phi_a_basis(ws: WSetup, pspec: FreeFieldSpec, quad: dict) -> dict:
    """Rewrite a v-basis quadratic in the phi/a generators."""
    rows, _ = phi_a_change_of_basis(ws)
    inv = _inverse_qi2(rows)        # v_a = sum_x inv[a][x] new_x
    out: dict = defaultdict(QI2)
    for (a, b), c in quad.items():
        for x, cx in enumerate(inv[a]):
            if not cx:
                continue
            for y, cy in enumerate(inv[b]):
                if cy:
                    out[(x, y)] = out[(x, y)] + cx * cy * c
    return canonical_quadratic(pspec, out)


def closed_form_v(ws: WSetup, pspec: FreeFieldSpec, i: int) -> dict:
    """v_i = 1/sqrt2 (:a-_{2m}(phi_{3n-i+1} + i phi_{4n-i+1}): - :a+_1(phi_{n+i} - i phi_i):)."""
    n, m = ws.n, ws.m
    ph = lambda k: pspec.index(f"phi{k}")
    am, ap = pspec.index(f"a-{2 * m}"), pspec.index("a+1")
    h = QI2(0, 0, F(1, 2))
    quad = {(am, ph(3 * n - i + 1)): h, (am, ph(4 * n - i + 1)): h * I,
            (ap, ph(n + i)): -h, (ap, ph(i)): h * I}
    return canonical_quadratic(pspec, quad)


def build_W_phi_a_basis(ws: WSetup, pspec: FreeFieldSpec, i: int) -> FockVector:
    vec = FockVector({(): QI2(1)})
    for r in range(1, i + 1):
        vec = quadratic_mode_apply(pspec, closed_form_v(ws, pspec, r), -1, vec)
    return vec


def leading_part(pspec: FreeFieldSpec, vec, m: int) -> FockVector:
    """Terms of W_i without any a+ factor."""
    plus = {pspec.index(f"a+{k}") for k in range(1, 2 * m + 1)}
    return FockVector({mono: c for mono, c in vec.items() if not any(g in plus for g, _ in mono)})


def leading_product(ws: WSetup, pspec: FreeFieldSpec, i: int) -> FockVector:
    """:(a-_{2m})^i (phi_{3n-i+1} + i phi_{4n-i+1}) ... (phi_{3n} + i phi_{4n}):"""
    n, m = ws.n, ws.m
    vec = FockVector({(): QI2(1)})
    am = pspec.index(f"a-{2 * m}")
    for r in range(1, i + 1):
        combo = {(am, pspec.index(f"phi{3 * n - r + 1}")): QI2(1),
                 (am, pspec.index(f"phi{4 * n - r + 1}")): I}
        # :a- (phi + i phi'): applied with mode -1 creates a-(-1) and the fermion pair factor
        vec = quadratic_mode_apply(pspec, combo, -1, vec)
    return vec


# --- cross-check of the two routes --------------------------------------------------

def basis_vectors(spec: FreeFieldSpec, max_e2: int) -> list:
    return [FockVector({mono: F(1)}) for e2 in range(max_e2 + 1) for mono in monomials(spec, e2)]


def _raw_apply(step, vec: dict) -> dict:
    out: dict = {}
    for mono, c in vec.items():
        for k, v in step(mono):
            out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def _quad_step(spec, quad, n):
    def step(mono):
        acc: dict = {}
        for (a, b), c in quad.items():
            for k, v in _pair_mode(spec, a, b, n, mono):
                acc[k] = acc.get(k, 0) + c * v
        return acc.items()
    return step


def check_wick_vs_modes(spec: FreeFieldSpec, quads: Sequence[dict], pairs=None, max_e2: int = 4,
                        modes=(-1, 0, 1)) -> list:
    """[J_A(q), J_B(r)] v = J_C(q+r) v + q s delta_{q+r,0} v, where [A_lambda B] = C + lambda s.

    quads: the quadratics; pairs: index pairs (default: all).  Returns the
    failing (pair, q, r, monomial) tuples.
    """
    monos = [mono for e2 in range(max_e2 + 1) for mono in monomials(spec, e2)]
    if pairs is None:
        pairs = [(i, j) for i in range(len(quads)) for j in range(len(quads))]
    memo: dict = {}

    def act(idx, q, vec):
        out: dict = {}
        for mono, c in vec.items():
            key = (idx, q, mono)
            res = memo.get(key)
            if res is None:
                res = memo[key] = dict(_quad_step(spec, quads[idx], q)(mono))
            for k, v in res.items():
                out[k] = out.get(k, 0) + c * v
        return out

    fails = []
    for ia, ib in pairs:
        A, B = quads[ia], quads[ib]
        C, s = lambda_bracket_quadratics(spec, A, B)
        sign = -1 if quadratic_parity(spec, A) and quadratic_parity(spec, B) else 1
        for q in modes:
            for r in modes:
                Cqr = _quad_step(spec, C, q + r)
                for mono in monos:
                    v = {mono: 1}
                    lhs = act(ia, q, act(ib, r, v))
                    for k, x in act(ib, r, act(ia, q, v)).items():
                        lhs[k] = lhs.get(k, 0) - sign * x
                    rhs = _raw_apply(Cqr, v)
                    if q + r == 0 and s:
                        rhs[mono] = rhs.get(mono, 0) + q * s
                    if {k: x for k, x in lhs.items() if x} != {k: x for k, x in rhs.items() if x}:
                        fails.append(((ia, ib), q, r, mono))
    return fails


def check_mode_algebra(spec: FreeFieldSpec, max_e2: int = 6, modes=(-2, -1, 0, 1, 2)) -> list:
    """[e_i(q), e_j(r)] = <e_j, e_i> delta_{q+r+1,0} on every basis monomial up to max_e2."""
    fails = []
    gens = range(spec.size)
    for e2 in range(max_e2 + 1):
        for mono in monomials(spec, e2):
            for i in gens:
                for j in gens:
                    sign = -1 if spec.parity[i] and spec.parity[j] else 1
                    for q in modes:
                        for r in modes:
                            acc: dict = {}
                            for m1, c1 in _mono_mode(spec, j, r, mono):
                                for m2, c2 in _mono_mode(spec, i, q, m1):
                                    acc[m2] = acc.get(m2, 0) + c1 * c2
                            for m1, c1 in _mono_mode(spec, i, q, mono):
                                for m2, c2 in _mono_mode(spec, j, r, m1):
                                    acc[m2] = acc.get(m2, 0) - sign * c1 * c2
                            acc = {k: v for k, v in acc.items() if v}
                            want = spec.gram[j][i] if q + r + 1 == 0 else 0
                            if acc != ({mono: want} if want else {}):
                                fails.append((i, j, q, r, mono))
    return fails


# --- serialization ----------------------------------------------------------------

def dump_state(spec: FreeFieldSpec, vec) -> str:
    monos = []
    for mono in sorted(vec):
        c = QI2.coerce(vec[mono])
        monos.append({"modes": [[spec.names[g], -q - 1] for g, q in mono], "coeff": c.to_json()})
    return json.dumps({"spec": spec.label, "monomials": monos}, sort_keys=True)


def load_state(spec: FreeFieldSpec, text: str) -> FockVector:
    data = json.loads(text)
    out = FockVector()
    for item in data["monomials"]:
        mono = tuple(sorted((spec.index(name), -mode - 1) for name, mode in item["modes"]))
        c = QI2(*(F(x["num"], x["den"]) for x in item["coeff"]))
        out[mono] = c
    return out
