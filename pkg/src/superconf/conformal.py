"""Conformal levels of the even part inside a Lie superalgebra.

For each piece of the odd branching the eigenvalue of the Sugawara
operator of g0 on its top space is a sum of per-factor terms

    abelian:  charge^2 * (eps, eps) / (2 k),  (eps, eps) = 1 / (w|w)
    simple:   (mu, mu + 2 rho) / (2 (c k + h))

and the embedding is conformal exactly when every such sum equals one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .scalar import (EquationError, Poly, clear_denominators, solve_univariate, equation_poles,
                     as_rational)
from .superalg import ModuleLabel, SuperAlgebraSpec

F = Fraction


class PoleError(ZeroDivisionError):
    pass


def _terms(spec: SuperAlgebraSpec, label) -> list[tuple]:
    """Terms (numerator, denominator Poly in k) with value numerator/denominator."""
    charge = label.charge
    weights = label.weights
    out = []
    ab = spec.abelian
    if ab is not None and charge:
        out.append((charge * charge / ab.scaling, Poly.linear(2 * ab.level_coeff, 0)))
    for f, w in zip(spec.nonabelian, weights):
        c = f.casimir(w)
        if c:
            out.append((c, Poly.linear(2 * f.level_coeff, 2 * f.h_vee)))
    return out


def factor_terms(spec: SuperAlgebraSpec, label, k) -> list:
    """Per-factor contributions to the conformal weight at level k."""
    out = []
    ab = spec.abelian
    if ab is not None:
        u = ab.level_coeff * k
        if label.charge:
            if u == 0:
                raise PoleError("abelian level is zero")
            out.append(label.charge * label.charge / (ab.scaling * 2 * u))
        else:
            out.append(F(0))
    for f, w in zip(spec.nonabelian, label.weights):
        den = 2 * (f.level_coeff * k + f.h_vee)
        c = f.casimir(w)
        if den == 0:
            if c == 0:
                out.append(F(0))
                continue
            raise PoleError(f"critical level for {f.name}")
        out.append(c / den)
    return out


def delta(spec: SuperAlgebraSpec, k, label) -> Fraction:
    """Conformal weight of the top space of the g0-module with highest weight label."""
    k = as_rational(k) if not hasattr(k, "subs") else k
    total = F(0)
    for t in factor_terms(spec, label, k):
        total = total + t
    return total


@dataclass
class PieceEquation:
    label: ModuleLabel
    terms: list
    numerator: Poly
    poles: list
    roots: list
    irrational: int

    def text(self) -> str:
        parts = [f"{c}/({d.to_str('k')})" for c, d in self.terms]
        return " + ".join(parts) + " = 1" if parts else "0 = 1"


@dataclass
class LevelReport:
    spec_name: str
    solutions: list
    excluded: list                 # (level, reason)
    equations: list = field(default_factory=list)

    @property
    def irrational(self) -> int:
        return sum(e.irrational for e in self.equations)


def piece_equation(spec: SuperAlgebraSpec, label) -> PieceEquation:
    terms = _terms(spec, label)
    if not terms:
        raise EquationError(f"piece {label} has zero conformal weight at every level")
    num = clear_denominators(terms)
    rep = solve_univariate(num)
    poles = equation_poles(terms)
    roots = [r for r in rep.roots if r not in poles]
    return PieceEquation(label, terms, num, poles, roots, rep.irrational)


def exclusion_reason(spec: SuperAlgebraSpec, k) -> str | None:
    if k + spec.h_vee == 0:
        return "critical level of g"
    for f in spec.factors:
        if f.kind == "abelian":
            if f.level_coeff * k == 0:
                return "zero abelian level"
        elif f.level_coeff * k + f.h_vee == 0:
            return f"critical level of {f.name}"
    return None


def conformal_levels(spec: SuperAlgebraSpec) -> LevelReport:
    if spec.is_symbolic():
        raise ValueError("instantiate the parameter before solving")
    eqs = [piece_equation(spec, p.label) for p in spec.pieces]
    common = None
    for e in eqs:
        common = set(e.roots) if common is None else common & set(e.roots)
    sols, excl = [], []
    for k in sorted(common or ()):
        why = exclusion_reason(spec, k)
        if why:
            excl.append((k, why))
        else:
            sols.append(k)
    return LevelReport(spec.name, sols, excl, eqs)


@dataclass
class ConformalCheck:
    ok: bool
    residuals: list
    pole: bool = False


def check_conformal(spec: SuperAlgebraSpec, k) -> ConformalCheck:
    """Substitute a level and report delta - 1 on each piece."""
    res = []
    try:
        for p in spec.pieces:
            res.append(delta(spec, k, p.label) - 1)
    except PoleError:
        return ConformalCheck(False, res, True)
    ok = all(r == 0 for r in res) and exclusion_reason(spec, k) is None
    return ConformalCheck(ok, res)


@dataclass
class SieveResult:
    integral: dict
    negative: dict
    non_integral: dict


def integrality_sieve(spec: SuperAlgebraSpec, k, labels) -> SieveResult:
    integral, negative, nonint = {}, {}, {}
    for lab in labels:
        h = delta(spec, k, lab)
        if h.denominator != 1:
            nonint[lab] = h
        elif h < 0:
            negative[lab] = h
        else:
            integral[lab] = h
    return SieveResult(integral, negative, nonint)
