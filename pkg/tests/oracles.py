"""Independent reference computations used by the tests.

Nothing here imports superconf: root data is entered by hand and characters
are built from scratch, so agreement with the engine is a real cross-check.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def simple_root_gram(family: str, rank: int) -> list:
    """Gram matrix of simple roots, long roots of squared length 2."""
    g = [[Fraction(0)] * rank for _ in range(rank)]
    if rank == 1:
        return [[Fraction(2)]]
    if family == "G":
        return [[Fraction(2, 3), Fraction(-1)], [Fraction(-1), Fraction(2)]]
    for i in range(rank):
        g[i][i] = Fraction(2)
        if i + 1 < rank:
            g[i][i + 1] = g[i + 1][i] = Fraction(-1)
    if family == "B":
        g[-1][-1] = Fraction(1)
        g[-1][-2] = g[-2][-1] = Fraction(-1)
    elif family == "C":
        g = [[x / 2 for x in row] for row in g]
        g[-1][-1] = Fraction(2)
        g[-1][-2] = g[-2][-1] = Fraction(-1)
    elif family == "D":
        g[-1][-2] = g[-2][-1] = Fraction(0)
        g[-1][-3] = g[-3][-1] = Fraction(-1)
    return g


def _inverse(m):
    n = len(m)
    a = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


class Algebra:
    def __init__(self, family: str, rank: int):
        self.rank = rank
        g = simple_root_gram(family, rank)
        self.cartan = [[2 * g[i][j] / g[j][j] for j in range(rank)] for i in range(rank)]
        inv = _inverse(self.cartan)
        self.form = [[inv[i][j] * g[j][j] / 2 for j in range(rank)] for i in range(rank)]
        self.inv = inv
        sums = [sum(row) for row in inv]
        den = 1
        for x in sums:
            den = den * x.denominator // gcd(den, x.denominator)
        self._height_coeffs = [int(x * den) for x in sums]
        self.positive = self._positive_roots()        # in simple-root coordinates
        self.positive_dynkin = [self.to_dynkin(b) for b in self.positive]
        self.rho = tuple([1] * rank)

    def to_dynkin(self, coords):
        return tuple(int(sum(coords[k] * self.cartan[k][i] for k in range(self.rank))) for i in range(self.rank))

    def _positive_roots(self):
        simple = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        found, frontier = set(simple), list(simple)
        while frontier:
            nxt = []
            for b in frontier:
                for i in range(self.rank):
                    if b == simple[i]:
                        continue
                    pair = sum(b[k] * self.cartan[k][i] for k in range(self.rank))
                    c = tuple(x - (pair if k == i else 0) for k, x in enumerate(b))
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
            frontier = nxt
        return sorted(found)

    def ip(self, a, b):
        return sum(a[i] * self.form[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def height(self, w):
        """A functional positive on every simple root (scaled to integers)."""
        return sum(x * c for x, c in zip(w, self._height_coeffs))

    def character(self, lam):
        return dict(_character(self, tuple(lam)))

    def dimension(self, lam):
        lr = [a + 1 for a in lam]
        num, den = Fraction(1), Fraction(1)
        for b in self.positive_dynkin:
            num *= self.ip(lr, b)
            den *= self.ip(self.rho, b)
        return int(num / den)


@lru_cache(maxsize=None)
def _character(alg: Algebra, lam: tuple) -> tuple:
    """Freudenthal's formula on every weight, in order of depth below lam.

    The string sums S(mu, b) = sum_k m(mu + k b)(mu + k b, b) satisfy
    S(mu, b) = m(mu + b)(mu + b, b) + S(mu + b, b) and are memoized.
    """
    scale = 1
    for row in alg.form:
        for x in row:
            scale = scale * x.denominator // gcd(scale, x.denominator)
    form = [[int(x * scale) for x in row] for row in alg.form]
    r = alg.rank

    def ip(a, b):
        return sum(a[i] * form[i][j] * b[j] for i in range(r) for j in range(r) if a[i] and b[j])

    lr = [a + 1 for a in lam]
    top = ip(lr, lr)
    mult = {lam: 1}
    strings: dict = {}
    roots = alg.positive_dynkin
    layer = [lam]
    simple = [tuple(int(x) for x in row) for row in alg.cartan]
    while layer:
        candidates = sorted({tuple(x - y for x, y in zip(w, s)) for w in layer for s in simple})
        layer = []
        for mu in candidates:
            if mu in mult:
                continue
            total = 0
            for bi, b in enumerate(roots):
                nu = tuple(x + y for x, y in zip(mu, b))
                m = mult.get(nu, 0)
                if not m:
                    continue
                sv = m * ip(nu, b) + strings.get((nu, bi), 0)
                strings[(mu, bi)] = sv
                total += sv
            mr = [a + 1 for a in mu]
            d = top - ip(mr, mr)
            if d == 0 or not total:
                continue
            val, rem = divmod(2 * total, d)
            assert rem == 0
            if val:
                mult[mu] = val
                layer.append(mu)
    return tuple(mult.items())


def decompose_by_characters(alg: Algebra, lam, mu) -> dict:
    """Multiply characters and peel off irreducibles from the top."""
    a, b = alg.character(lam), alg.character(mu)
    prod: dict = {}
    for x, m in a.items():
        for y, n in b.items():
            w = tuple(p + q for p, q in zip(x, y))
            prod[w] = prod.get(w, 0) + m * n
    out = {}
    # subtracting a constituent only changes weights below it
    for top in sorted(prod, key=alg.height, reverse=True):
        c = prod.get(top, 0)
        if not c:
            continue
        out[top] = c
        for w, m in alg.character(top).items():
            prod[w] = prod.get(w, 0) - c * m
    if any(prod.values()):
        raise ArithmeticError("character did not decompose")
    return out


def dominant_weights(alg: Algebra, bound: int) -> list:
    zero = (0,) * alg.rank
    seen, queue = {zero}, [zero]
    while queue:
        w = queue.pop()
        for i in range(alg.rank):
            v = tuple(x + int(j == i) for j, x in enumerate(w))
            if v not in seen and alg.dimension(v) <= bound:
                seen.add(v)
                queue.append(v)
    return sorted(seen)


def fock_series(fermions: int, bosons: int, max_e2: int) -> dict:
    """Graded dimensions of the Fock space of the given numbers of free fermions
    and bosons, each with modes of energy r - 1/2, r >= 1.

    Returns {doubled energy: (even length count, odd length count)} from the
    product of (1 + t x^(2r-1)) per fermion and 1/(1 - t x^(2r-1)) per boson.
    """
    # series in x (doubled energy) with coefficients [even, odd] in t
    series = {0: [1, 0]}
    for e in range(1, max_e2 + 1, 2):
        for _ in range(fermions):
            new = {k: v[:] for k, v in series.items()}
            for k, (ev, od) in series.items():
                if k + e <= max_e2:
                    cur = new.setdefault(k + e, [0, 0])
                    cur[0] += od
                    cur[1] += ev
            series = new
        for _ in range(bosons):
            new = {k: v[:] for k, v in series.items()}
            for power in range(1, max_e2 // e + 1):
                for k, (ev, od) in series.items():
                    if k + power * e <= max_e2:
                        cur = new.setdefault(k + power * e, [0, 0])
                        if power % 2:
                            cur[0] += od
                            cur[1] += ev
                        else:
                            cur[0] += ev
                            cur[1] += od
            series = new
    return {k: tuple(v) for k, v in sorted(series.items())}
