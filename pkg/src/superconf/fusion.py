"""Fusion-rule constraint propagation for modules of the even part.

Dot products V_1 . V_2 of highest weight modules are bounded by the tensor
product of the top spaces (or, where classification data provides one, by
a fusion rule).  Candidates are then filtered by integrality of the
conformal weight and by the classification of admissible modules.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable

from .conformal import delta
from .liealg import build_root_system, level_fusion, tensor_decompose
from .superalg import ModuleLabel, SuperAlgebraSpec

F = Fraction


@dataclass(frozen=True)
class FactorRule:
    """Classification data for one non-abelian factor."""
    allowed: frozenset | None = None          # admissible highest weights; None means unrestricted
    fusion: Callable | None = None            # (w1, w2) -> iterable of weights
    conformal_weights: dict | None = None     # cited weight -> conformal weight
    source: str = ""

    def admits(self, w) -> bool:
        return self.allowed is None or tuple(w) in self.allowed


@dataclass(frozen=True)
class Classification:
    rules: tuple                              # one FactorRule (or None) per non-abelian factor
    source: str = ""

    def admits(self, label: ModuleLabel) -> bool:
        return all(r is None or r.admits(w) for r, w in zip(self.rules, label.weights))


def unrestricted(spec: SuperAlgebraSpec) -> Classification:
    return Classification(tuple(None for _ in spec.nonabelian), "no restriction")


# --- classification data --------------------------------------------------------

def sl2_fusion(level: int) -> Callable:
    """Integrable sl(2) fusion at a positive integer level (Clebsch-Gordan truncated)."""
    def rule(w1, w2):
        a, b = w1[0], w2[0]
        return [(c,) for c in range(abs(a - b), min(a + b, 2 * level - a - b) + 1, 2)]
    return rule


def sl2_integrable(level: int) -> FactorRule:
    allowed = frozenset((a,) for a in range(level + 1))
    weights = {(a,): F(a * (a + 2), 4 * (level + 2)) for a in range(level + 1)}
    return FactorRule(allowed, sl2_fusion(level), weights, f"integrable sl(2) modules at level {level}")


# admissible sl(2) weights: level -> {highest weight: conformal weight}
SL2_ADMISSIBLE = {
    F(1): {0: F(0), 1: F(1, 4)},
    F(3): {0: F(0), 1: F(3, 20), 2: F(2, 5), 3: F(3, 4)},
    F(-3, 4): {0: F(0), 1: F(3, 5), 2: F(8, 5), 3: F(3)},
    F(-2, 3): {0: F(0), 1: F(9, 16), 2: F(3, 2)},
}


def sl2_admissible(level) -> FactorRule:
    data = SL2_ADMISSIBLE[F(level)]
    return FactorRule(frozenset((a,) for a in data), None, {(a,): h for a, h in data.items()},
                      f"dominant admissible sl(2) weights at level {F(level)}")


def cn_level_one(n: int) -> FactorRule:
    """Level-1 C_n: the fundamental weights w_0..w_n, fusing like sl(2) at level n."""
    def weight(i):
        return tuple(int(j == i - 1) for j in range(n))

    def index(w):
        return next((j + 1 for j, x in enumerate(w) if x), 0)

    def rule(w1, w2):
        return [weight(i) for (i,) in sl2_fusion(n)((index(w1),), (index(w2),))]

    allowed = frozenset(weight(i) for i in range(n + 1))
    return FactorRule(allowed, rule, None, "level-1 C_n modules, rank-level duality with sl(2) at level n")


def integrable(family: str, rank: int, level: int) -> FactorRule:
    """Integrable modules at a positive integer level with Kac-Walton fusion."""
    from .liealg import integrable_weights
    rs = build_root_system(family, rank)
    allowed = frozenset(integrable_weights(rs, level))
    return FactorRule(allowed, lambda a, b: list(level_fusion(rs, level, a, b)), None,
                      f"integrable {rs} modules at level {level}")


def d_minus_two(rank: int) -> FactorRule:
    """Level -2 D_rank: only multiples of the first fundamental weight."""
    class _Multiples(frozenset):
        def __contains__(self, w):
            return all(x == 0 for x in w[1:]) and w[0] >= 0
    return FactorRule(_Multiples(), None, None, f"modules of D_{rank} at level -2 have highest weight r w_1")


def spo23_classification(admissible_sp2: bool = True) -> Classification:
    """spo(2|3) at k = -3/4: sp(2) at -3/4 and so(3) = sl(2) at level 3.

    With admissible_sp2 False only the so(3) fusion rules are imposed.
    """
    sp2 = sl2_admissible(F(-3, 4)) if admissible_sp2 else None
    return Classification((sp2, sl2_integrable(3)), "sp(2) weights and integrable so(3) fusion")


def f4_classification() -> Classification:
    """F(4) at k = 1: so(7) at level 1; the sl(2) factor is left unrestricted."""
    return Classification((None, integrable("B", 3, 1)), "level-1 so(7) modules and fusion")


def g3_classification() -> Classification:
    """G(3) at k = 1: G_2 at level 1; the sl(2) factor is left unrestricted."""
    return Classification((None, integrable("G", 2, 1)), "level-1 G2 modules and fusion")


def osp_pair_classification(n: int) -> Classification:
    """osp(2n+8|2n) at k = -2: D_{n+4} at -2 and C_n at level 1."""
    return Classification((d_minus_two(n + 4), cn_level_one(n)), "D at level -2, C_n at level 1")


# --- the engine -------------------------------------------------------------------

def _factor_products(spec, classification, w1, w2, i, cap):
    f = spec.nonabelian[i]
    rule = classification.rules[i] if classification is not None else None
    if rule is not None and rule.fusion is not None:
        return [tuple(w) for w in rule.fusion(w1, w2)]
    if f.kind != "simple":
        raise ValueError(f"no tensor products for factor {f.name}")
    return list(tensor_decompose(f.root_system, w1, w2, cap=cap))


def dot_candidates(spec: SuperAlgebraSpec, l1: ModuleLabel, l2: ModuleLabel,
                   classification: Classification | None = None, cap: int = 200000) -> set:
    """Product set of per-factor constituents; charges add."""
    per = [_factor_products(spec, classification, a, b, i, cap)
           for i, (a, b) in enumerate(zip(l1.weights, l2.weights))]
    charge = l1.charge + l2.charge
    return {ModuleLabel(charge, tuple(ws)) for ws in product(*per)}


def multiplicity(spec: SuperAlgebraSpec, l1: ModuleLabel, l2: ModuleLabel, target: ModuleLabel) -> int:
    """Multiplicity of target in the tensor product of the top spaces."""
    out = 1
    for f, a, b, c in zip(spec.nonabelian, l1.weights, l2.weights, target.weights):
        out *= tensor_decompose(f.root_system, a, b).get(tuple(c), 0)
    return out if l1.charge + l2.charge == target.charge else 0


@dataclass
class Rejection:
    label: ModuleLabel
    delta: Fraction
    reason: str


@dataclass
class FilterResult:
    candidates: set
    kept: set
    rejected: list


def filter_candidates(spec: SuperAlgebraSpec, k, classification: Classification | None,
                      candidates: Iterable[ModuleLabel]) -> FilterResult:
    cands = set(candidates)
    kept, rejected = set(), []
    for lab in sorted(cands):
        h = delta(spec, k, lab)
        if h.denominator != 1:
            rejected.append(Rejection(lab, h, "non-integral conformal weight"))
        elif h < 0:
            rejected.append(Rejection(lab, h, "negative conformal weight"))
        elif classification is not None and not classification.admits(lab):
            rejected.append(Rejection(lab, h, "not admitted by classification"))
        else:
            kept.add(lab)
    return FilterResult(cands, kept, rejected)


def filtered_dot(spec, k, classification, l1, l2) -> FilterResult:
    return filter_candidates(spec, k, classification, dot_candidates(spec, l1, l2, classification))


def vacuum(spec: SuperAlgebraSpec) -> ModuleLabel:
    return ModuleLabel(F(0), tuple(tuple(0 for _ in w) for w in spec.pieces[0].weights))


@dataclass
class ClosureResult:
    family: list
    adjacency: dict
    complete: bool


def closure(spec: SuperAlgebraSpec, k, classification: Classification | None,
            generators: Iterable[ModuleLabel], cap: int = 200) -> ClosureResult:
    """Smallest family containing the vacuum and the generators that is closed
    under filtered dot products."""
    family = [vacuum(spec)]
    for g in generators:
        if g not in family:
            family.append(g)
    adjacency = {}
    queue = deque((a, b) for i, a in enumerate(family) for b in family[i:])
    while queue:
        a, b = queue.popleft()
        key = tuple(sorted((a, b)))
        if key in adjacency:
            continue
        res = filtered_dot(spec, k, classification, a, b)
        adjacency[key] = res
        for lab in sorted(res.kept):
            if lab not in family:
                if len(family) >= cap:
                    return ClosureResult(sorted(family), adjacency, False)
                family.append(lab)
                queue.extend((lab, other) for other in list(family))
    return ClosureResult(sorted(family), adjacency, True)


@dataclass
class ChainStep:
    label: ModuleLabel
    delta: Fraction
    kept: list
    rejected: list
    dead_end: bool            # no filtered successor at all
    forced_singular: bool     # no kept successor of lower or equal conformal weight


@dataclass
class ChainReport:
    steps: list
    visited: list
    closed: bool              # every reachable label was expanded
    contains_vacuum: bool

    @property
    def trap(self) -> bool:
        """A closed family not containing the vacuum: it would generate a proper ideal."""
        return self.closed and not self.contains_vacuum


def chain_report(spec: SuperAlgebraSpec, k, classification: Classification | None,
                 assumed: ModuleLabel, generator: ModuleLabel, depth: int = 50) -> ChainReport:
    vac = vacuum(spec)
    steps, seen = [], {assumed}
    layer = [assumed]
    closed = True
    for level in range(depth + 1):
        if not layer:
            break
        nxt = []
        for lab in layer:
            h = delta(spec, k, lab)
            res = filtered_dot(spec, k, classification, lab, generator)
            kept = sorted(res.kept)
            forced = lab != vac and not any(delta(spec, k, x) <= h for x in kept)
            steps.append(ChainStep(lab, h, kept, res.rejected, not kept, forced))
            for x in kept:
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        layer = nxt
    if layer:
        closed = False
    return ChainReport(steps, sorted(seen), closed, vac in seen)
