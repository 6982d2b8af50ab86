"""Simple Lie algebras of types A-D and G2: roots, weights, characters.

Weights are tuples of integers in the fundamental-weight basis (Dynkin
labels).  Roots are stored in the simple-root basis.  The invariant form is
normalized so that long roots have squared length 2.

Cartan matrix convention: cartan[i][j] = 2(a_i, a_j)/(a_j, a_j), so that
a_i = sum_j cartan[i][j] w_j.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .linalg import inverse, matmul

Weight = tuple

MAX_RANK = 12
FAMILY_RANKS = {"A": (1, MAX_RANK), "B": (2, MAX_RANK), "C": (1, MAX_RANK),
                "D": (3, MAX_RANK), "G": (2, 2)}


class UnsupportedAlgebra(ValueError):
    pass


class CapExceeded(ValueError):
    pass


def _simple_root_gram(family: str, rank: int) -> list[list[Fraction]]:
    """Matrix (a_i, a_j) of simple roots, long roots of norm 2."""
    F = Fraction
    if family == "G":
        return [[F(2, 3), F(-1)], [F(-1), F(2)]]
    # ambient epsilon coordinates
    if family == "A":
        vecs = [[F(int(j == i)) - F(int(j == i + 1)) for j in range(rank + 1)] for i in range(rank)]
        eps = F(1)
    else:
        vecs = [[F(int(j == i)) - F(int(j == i + 1)) for j in range(rank)] for i in range(rank - 1)]
        last = [F(0)] * rank
        if family == "B":
            last[rank - 1] = F(1)
            eps = F(1)
        elif family == "C":
            last[rank - 1] = F(2)
            eps = F(1, 2)
        else:  # D
            last[rank - 2] = F(1)
            last[rank - 1] = F(1)
            eps = F(1)
        vecs.append(last)
    return [[eps * sum((x * y for x, y in zip(u, v)), F(0)) for v in vecs] for u in vecs]


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    simple_gram: tuple                     # (a_i, a_j)
    cartan: tuple                          # cartan[i][j] = <a_i, a_j^vee>
    gram: tuple                            # (w_i, w_j)
    positive_roots: tuple                  # simple-root coordinates
    highest_root: tuple
    name: str = field(default="")

    @property
    def root_norms(self) -> tuple:
        return tuple(self.simple_gram[i][i] for i in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def dimension(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    def root_to_weight(self, beta: Sequence[int]) -> Weight:
        """Simple-root coordinates -> Dynkin labels."""
        return tuple(sum(beta[j] * self.cartan[j][i] for j in range(self.rank)) for i in range(self.rank))

    def fundamental(self, i: int) -> Weight:
        """Dynkin label of the i-th fundamental weight, 1-based."""
        return tuple(int(j == i - 1) for j in range(self.rank))

    def __str__(self):
        return self.name


def _positive_roots(cartan) -> list[tuple]:
    r = len(cartan)
    simple = [tuple(int(j == i) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                pair = sum(beta[j] * cartan[j][i] for j in range(r))
                # p = length of the string below beta in direction a_i
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if tuple(cur) in roots:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda b: (sum(b), b))


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    family = family.upper()
    if family == "G2":
        family = "G"
    if family not in FAMILY_RANKS:
        raise UnsupportedAlgebra(f"unknown family {family!r}")
    lo, hi = FAMILY_RANKS[family]
    if not lo <= rank <= hi:
        raise UnsupportedAlgebra(f"{family}{rank} outside supported ranks {lo}..{hi}")
    sg = _simple_root_gram(family, rank)
    cartan = [[int(2 * sg[i][j] / sg[j][j]) for j in range(rank)] for i in range(rank)]
    # cartan . G = diag(d), d_i = (a_i, a_i)/2
    diag = [[sg[i][i] / 2 if i == j else Fraction(0) for j in range(rank)] for i in range(rank)]
    gram = matmul(inverse([[Fraction(x) for x in row] for row in cartan]), diag)
    pos = _positive_roots(cartan)
    name = "G2" if family == "G" else f"{family}{rank}"
    rs = RootSystem(family, rank, tuple(map(tuple, sg)), tuple(map(tuple, cartan)),
                    tuple(map(tuple, gram)), tuple(pos), (), name)
    # highest root: maximal height
    top = max(pos, key=lambda b: (sum(b), b))
    object.__setattr__(rs, "highest_root", top)
    return rs


def pairing(rs: RootSystem, lam: Sequence, mu: Sequence, scaling=1) -> Fraction:
    """(lam, mu) in the normalized form, times scaling."""
    g = rs.gram
    s = Fraction(0)
    for i, a in enumerate(lam):
        if a:
            for j, b in enumerate(mu):
                if b:
                    s += a * b * g[i][j]
    return s * scaling


def casimir(rs: RootSystem, lam: Sequence) -> Fraction:
    """(lam, lam + 2 rho)."""
    shifted = tuple(a + 2 for a in lam)
    return pairing(rs, lam, shifted)


def dual_coxeter(rs: RootSystem) -> Fraction:
    theta = rs.root_to_weight(rs.highest_root)
    return casimir(rs, theta) / 2


def _root_pair(rs: RootSystem, mu: Sequence, beta: Sequence) -> Fraction:
    """(mu, beta) for mu in Dynkin labels and beta in simple-root coordinates."""
    return sum((Fraction(mu[j]) * beta[j] * rs.simple_gram[j][j] / 2 for j in range(rs.rank)), Fraction(0))


def weyl_dimension(rs: RootSystem, lam: Sequence) -> int:
    if any(x < 0 for x in lam):
        raise ValueError("weight is not dominant")
    num = Fraction(1)
    for beta in rs.positive_roots:
        shifted = tuple(x + 1 for x in lam)
        num *= _root_pair(rs, shifted, beta) / _root_pair(rs, rs.rho, beta)
    assert num.denominator == 1
    return int(num)


def reflect(rs: RootSystem, mu: Sequence, i: int) -> Weight:
    c = mu[i]
    return tuple(m - c * rs.cartan[i][j] for j, m in enumerate(mu))


def dominant_representative(rs: RootSystem, mu: Sequence) -> tuple[Weight, int]:
    """Dominant weight in the Weyl orbit of mu and the parity of the word used."""
    mu = tuple(mu)
    sign = 1
    while True:
        for i, m in enumerate(mu):
            if m < 0:
                mu = reflect(rs, mu, i)
                sign = -sign
                break
        else:
            return mu, sign


def weyl_orbit(rs: RootSystem, mu: Sequence) -> list[Weight]:
    start = tuple(mu)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(rs.rank):
            if w[i]:
                v = reflect(rs, w, i)
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return sorted(seen, reverse=True)


@lru_cache(maxsize=4096)
def dominant_multiplicities(rs: RootSystem, lam: Weight) -> dict:
    """Freudenthal's formula on the dominant weights of V(lam)."""
    lam = tuple(lam)
    if any(x < 0 for x in lam):
        raise ValueError("weight is not dominant")
    roots_w = [rs.root_to_weight(b) for b in rs.positive_roots]
    # dominant weights below lam, with depth
    depth = {lam: 0}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for b, bw in zip(rs.positive_roots, roots_w):
            nu = tuple(x - y for x, y in zip(mu, bw))
            if all(x >= 0 for x in nu) and nu not in depth:
                depth[nu] = depth[mu] + sum(b)
                queue.append(nu)
    order = sorted(depth, key=lambda w: depth[w])
    rho = rs.rho
    lr = tuple(a + b for a, b in zip(lam, rho))
    top = pairing(rs, lr, lr)
    mult = {lam: 1}
    for mu in order[1:]:
        total = Fraction(0)
        for b, bw in zip(rs.positive_roots, roots_w):
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, bw))
                dom, _ = dominant_representative(rs, nu)
                m = mult.get(dom, 0)
                if not m:
                    break
                total += m * pairing(rs, nu, bw)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, rho))
        val = 2 * total / (top - pairing(rs, mr, mr))
        assert val.denominator == 1
        if val:
            mult[mu] = int(val)
    return mult


def weight_multiplicities(rs: RootSystem, lam: Sequence) -> dict:
    """Full character of V(lam): weight -> multiplicity."""
    out = {}
    for mu, m in dominant_multiplicities(rs, tuple(lam)).items():
        for w in weyl_orbit(rs, mu):
            out[w] = m
    return out


def tensor_decompose(rs: RootSystem, lam: Sequence, mu: Sequence, cap: int = 200000) -> dict:
    """V(lam) x V(mu) as {highest weight: multiplicity} via Racah-Speiser."""
    lam, mu = tuple(lam), tuple(mu)
    dl, dm = weyl_dimension(rs, lam), weyl_dimension(rs, mu)
    # the work is proportional to the weight diagram of the smaller module
    if min(dl, dm) > cap:
        raise CapExceeded(f"smaller module dimension {min(dl, dm)} exceeds cap {cap}")
    if dl < dm:
        lam, mu = mu, lam
    out: dict = {}
    shift = tuple(a + 1 for a in lam)
    for nu, m in weight_multiplicities(rs, mu).items():
        w = tuple(a + b for a, b in zip(shift, nu))
        dom, sign = dominant_representative(rs, w)
        if any(x == 0 for x in dom):
            continue
        hw = tuple(x - 1 for x in dom)
        out[hw] = out.get(hw, 0) + sign * m
    out = {k: v for k, v in out.items() if v}
    if any(v < 0 for v in out.values()):
        raise ArithmeticError("negative multiplicity in tensor decomposition")
    return dict(sorted(out.items(), reverse=True))


def weights_below_dimension(rs: RootSystem, bound: int) -> list[Weight]:
    """Dominant weights whose irreducible module has dimension <= bound."""
    zero = (0,) * rs.rank
    seen = {zero}
    queue = deque([zero])
    out = []
    while queue:
        w = queue.popleft()
        out.append(w)
        for i in range(rs.rank):
            v = tuple(x + int(j == i) for j, x in enumerate(w))
            if v not in seen and weyl_dimension(rs, v) <= bound:
                seen.add(v)
                queue.append(v)
    return sorted(out, key=lambda w: (weyl_dimension(rs, w), w))


def comarks(rs: RootSystem) -> tuple:
    """Coefficients of the highest coroot in the simple coroots."""
    return tuple(int(c * rs.simple_gram[i][i] / 2) for i, c in enumerate(rs.highest_root))


def integrable_weights(rs: RootSystem, level: int) -> list[Weight]:
    """Dominant weights with sum_i comark_i * lam_i <= level."""
    marks = comarks(rs)
    out = []

    def rec(i, left, acc):
        if i == rs.rank:
            out.append(tuple(acc))
            return
        v = 0
        while v * marks[i] <= left:
            rec(i + 1, left - v * marks[i], acc + [v])
            v += 1

    rec(0, level, [])
    return sorted(out)


# --- epsilon coordinates for the classical families B, C, D -----------------

def epsilon_norm(rs: RootSystem) -> Fraction:
    if rs.family in ("B", "D"):
        return Fraction(1)
    if rs.family == "C":
        return Fraction(1, 2)
    raise UnsupportedAlgebra("epsilon coordinates only for B, C, D")


def to_epsilon(rs: RootSystem, lam: Sequence) -> tuple:
    """Dynkin labels -> coordinates in the orthogonal basis eps_1..eps_r."""
    if rs.family not in ("B", "C", "D"):
        raise UnsupportedAlgebra("epsilon coordinates only for B, C, D")
    r = rs.rank
    F = Fraction
    out = [F(0)] * r
    for i, c in enumerate(lam):
        if not c:
            continue
        idx = i + 1
        if rs.family == "B" and idx == r:
            vec = [F(1, 2)] * r
        elif rs.family == "D" and idx == r - 1:
            vec = [F(1, 2)] * (r - 1) + [F(-1, 2)]
        elif rs.family == "D" and idx == r:
            vec = [F(1, 2)] * r
        else:
            vec = [F(int(j < idx)) for j in range(r)]
        out = [o + c * v for o, v in zip(out, vec)]
    return tuple(out)


def from_epsilon(rs: RootSystem, coords: Sequence) -> Weight:
    """Inverse of to_epsilon: lam_i = 2(lam, a_i)/(a_i, a_i)."""
    r = rs.rank
    c = [Fraction(x) for x in coords]
    out = [c[i] - c[i + 1] for i in range(r - 1)]
    if rs.family == "B":
        out.append(2 * c[r - 1])
    elif rs.family == "C":
        out.append(c[r - 1])
    elif rs.family == "D":
        out.append(c[r - 2] + c[r - 1])
    else:
        raise UnsupportedAlgebra("epsilon coordinates only for B, C, D")
    if any(x.denominator != 1 for x in out):
        raise ValueError("not an integral weight")
    return tuple(int(x) for x in out)


def level_fusion(rs: RootSystem, level: int, lam: Sequence, mu: Sequence) -> dict:
    """Integrable fusion at a positive integer level by the Kac-Walton algorithm."""
    big = level + dual_coxeter(rs)
    theta = rs.root_to_weight(rs.highest_root)
    out: dict = {}
    for nu, m in tensor_decompose(rs, lam, mu).items():
        w = tuple(x + 1 for x in nu)
        sign = 1
        while True:
            neg = next((i for i, x in enumerate(w) if x < 0), None)
            if neg is not None:
                w = reflect(rs, w, neg)
                sign = -sign
                continue
            t = pairing(rs, w, theta)
            if t > big:
                shift = t - big
                w = tuple(x - shift * y for x, y in zip(w, theta))
                sign = -sign
                continue
            break
        if any(x == 0 for x in w) or pairing(rs, w, theta) == big:
            continue
        hw = tuple(x - 1 for x in w)
        out[hw] = out.get(hw, 0) + sign * m
    return {k: v for k, v in sorted(out.items(), reverse=True) if v}
