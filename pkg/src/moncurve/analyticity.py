"""Deciding analyticity at the origin of F = g/h along monomial curves.

F is analytic iff F(t^m1, ..., t^mn) only involves powers t^e with e in the
semigroup <m1, ..., mn>, for every positive m. The procedure here either
certifies analyticity, or regularizes (g, h) by chart moves, finds a chart
monomial that does not descend, and turns it into a monomial curve along
which F visibly fails that condition.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .blowup import ElementaryMove, MonomialCurve, MoveSequence, liftability, transport_curve
from .principalize import BudgetExceeded, regularize_tuple
from .semigroup import SearchBudgetExceeded, semigroup, sg_contains, unique_tuples
from .series import (
    Exponent,
    MonomialMap,
    MultiSeries,
    UniSeries,
    cancel_common_factor,
    exact_divide,
    monomial_order_key,
    pullback_series,
    series_inverse,
    substitute_curve,
    uni_quotient,
)

log = logging.getLogger(__name__)


class CurveInPoleLocus(ValueError):
    pass


class InsufficientTruncation(ValueError):
    pass


@dataclass(frozen=True)
class MeromorphicGerm:
    g: MultiSeries
    h: MultiSeries

    def __post_init__(self):
        if self.g.n != self.h.n:
            raise ValueError("numerator and denominator have different variable counts")
        if self.h.is_zero():
            raise ZeroDivisionError("denominator is zero")

    @property
    def n(self) -> int:
        return self.g.n

    @property
    def is_polynomial(self) -> bool:
        return self.g.is_exact and self.h.is_exact

    def pullback(self, E: MonomialMap) -> "MeromorphicGerm":
        return MeromorphicGerm(pullback_series(self.g, E), pullback_series(self.h, E))


def required_truncation(m: Sequence[int]) -> int:
    """First t-exponent from which every multiple of gcd(m) lies in <m>."""
    S = semigroup(tuple(m))
    return S.d * (S.frobenius + 1)


@dataclass(frozen=True)
class CurveCheckReport:
    curve: MonomialCurve
    passed: bool
    offending_exponent: Optional[int] = None
    offending_coefficient: Optional[Fraction] = None
    truncation_used: int = 0
    pole: bool = False

    def to_dict(self) -> dict:
        c = self.offending_coefficient
        return {
            "curve": list(self.curve),
            "passed": self.passed,
            "pole": self.pole,
            "offending_exponent": self.offending_exponent,
            "offending_coefficient": None if c is None else _frac(c),
            "truncation_used": self.truncation_used,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CurveCheckReport":
        c = d.get("offending_coefficient")
        return cls(tuple(d["curve"]), d["passed"], d.get("offending_exponent"),
                   None if c is None else Fraction(c), d.get("truncation_used", 0), d.get("pole", False))


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def curve_series(F: MeromorphicGerm, m: Sequence[int], upto: int) -> UniSeries:
    """F(t^m) as a Laurent series through t^upto; raises on the pole locus."""
    num = substitute_curve(F.g, m)
    den = substitute_curve(F.h, m)
    if den.is_zero():
        raise CurveInPoleLocus(f"denominator vanishes identically along {tuple(m)}")
    q = uni_quotient(num, den, upto)
    if q.trunc is not None and q.trunc < upto:
        raise InsufficientTruncation(
            f"F along {tuple(m)} is only known through t^{q.trunc}, need t^{upto}")
    return q


def curve_check(F: MeromorphicGerm, m: Sequence[int]) -> CurveCheckReport:
    m = tuple(m)
    S = semigroup(m)
    R = S.d * (S.frobenius + 1)
    num = substitute_curve(F.g, m)
    den = substitute_curve(F.h, m)
    if den.is_zero():
        raise CurveInPoleLocus(f"denominator vanishes identically along {m}")
    if num.is_zero():
        return CurveCheckReport(m, True, truncation_used=R)
    if num.ord < den.ord:
        e = int(num.ord - den.ord)
        c = num.coeff(int(num.ord)) / den.coeff(int(den.ord))
        return CurveCheckReport(m, False, e, c, R, pole=True)
    q = curve_series(F, m, R - 1)
    for e, c in q.items():
        if e >= R:
            break
        if not sg_contains(S, e):
            return CurveCheckReport(m, False, e, c, R)
    return CurveCheckReport(m, True, truncation_used=R)


def verify_witness(F: MeromorphicGerm, report: CurveCheckReport) -> bool:
    """Independent recomputation of a claimed failure along report.curve."""
    if report.passed or report.offending_exponent is None:
        return False
    m = tuple(report.curve)
    try:
        num = substitute_curve(F.g, m)
        den = substitute_curve(F.h, m)
        if den.is_zero():
            return False
        if report.pole:
            if num.is_zero() or num.ord >= den.ord:
                return False
            lead = num.coeff(int(num.ord)) / den.coeff(int(den.ord))
            return (report.offending_exponent == num.ord - den.ord
                    and report.offending_coefficient in (None, lead))
        e = report.offending_exponent
        if sg_contains(semigroup(m), e):
            return False
        c = curve_series(F, m, e).coeff(e)
    except (InsufficientTruncation, ValueError):
        return False
    return c != 0 and report.offending_coefficient in (None, c)


# ---------------------------------------------------------------------------
# descending chart expansions


class LiftFailure(NamedTuple):
    level: int  # index of the move the monomial fails to descend through
    exponent: Exponent  # in the coordinates of chart level + 1
    A: int


def liftability_scan(expansion: MultiSeries, path: MoveSequence) -> Optional[LiftFailure]:
    """Descend every monomial of a deepest-chart expansion, deepest move first.

    All monomials are pushed through one move before the next, so a failure
    at move k means everything lifted cleanly through the moves after k. The
    reported monomial is the lowest one (total degree, then lexicographic).
    """
    exps = list(expansion.support())
    for k in range(len(path) - 1, -1, -1):
        mv = path[k]
        lifted = []
        bad = []
        for a in exps:
            res = liftability(mv, a)
            if res.liftable:
                lifted.append(res.lifted)
            else:
                bad.append((a, res.A))
        if bad:
            a, A = min(bad, key=lambda t: monomial_order_key(t[0]))
            return LiftFailure(k, a, A)
        exps = lifted
    return None


def lift_series(expansion: MultiSeries, path: MoveSequence) -> MultiSeries:
    """The level-0 series whose pullback is ``expansion``; every term must lift."""
    terms = {}
    for a, c in expansion.items():
        for mv in reversed(path.moves):
            res = liftability(mv, a)
            if not res.liftable:
                raise ValueError(f"monomial {a} does not descend through {mv}")
            a = res.lifted
        terms[a] = c
    D = None
    if expansion.trunc is not None:
        D = expansion.trunc // max(sum(row) for row in path.composite.matrix)
    return MultiSeries(expansion.n, terms, D)


class Step3Witness(NamedTuple):
    curve: MonomialCurve  # one level below the chart
    chart_curve: MonomialCurve
    exponent: int


def step3_witness(a: Sequence[int], mv: ElementaryMove, budget: int = 100_000, skip: int = 0) -> Step3Witness:
    """Monomial curve on which a non-descending chart monomial z^a shows up.

    With m' chosen so that sum a_i m'_i has a single representation, the
    exponent e = a.m' is not in the semigroup of m = transport(mv, m').
    ``skip`` selects a later admissible m' in the fixed search order.
    """
    a = tuple(a)
    res = liftability(mv, a)
    if res.liftable:
        raise ValueError(f"{a} descends through {mv} (A={res.A}); no witness from it")
    gen = unique_tuples(a, budget)
    for _ in range(skip):
        next(gen)
    m_prime = next(gen)
    m = transport_curve(mv, m_prime)
    e = sum(x * y for x, y in zip(a, m_prime))
    assert not sg_contains(semigroup(m), e), "unique representation failed to exclude e"
    return Step3Witness(m, m_prime, e)


def witness_transport(report: CurveCheckReport, mv: ElementaryMove,
                      germ: Optional[MeromorphicGerm] = None) -> CurveCheckReport:
    """Move a failing report one level down through ``mv``.

    F o rho = F' o rho', and <transport(m')> lies inside <m'>, so the same
    exponent still fails. With ``germ`` (F at the lower level) the
    coefficient is recomputed there.
    """
    if report.passed:
        raise ValueError("only failing reports can be transported")
    m = transport_curve(mv, report.curve)
    e = report.offending_exponent
    R = required_truncation(m)
    out = CurveCheckReport(m, False, e, report.offending_coefficient, R, report.pole)
    if not report.pole:
        assert not sg_contains(semigroup(m), e), "semigroup containment violated"
    if germ is not None:
        assert verify_witness(germ, out), f"transported witness {m} does not re-verify"
    return out


# ---------------------------------------------------------------------------
# verdicts


@dataclass(frozen=True)
class DerivationStep:
    level: int
    kind: str  # "lift_failure", "transport" or "pole"
    curve: MonomialCurve
    exponent: Optional[int] = None
    chart_exponent: Optional[Exponent] = None
    chart_curve: Optional[MonomialCurve] = None
    A: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "kind": self.kind,
            "chart_exponent": None if self.chart_exponent is None else list(self.chart_exponent),
            "A": self.A,
            "chart_curve": None if self.chart_curve is None else list(self.chart_curve),
            "curve": list(self.curve),
            "exponent": self.exponent,
        }


@dataclass(frozen=True)
class Analytic:
    certificate: MultiSeries
    kind: str  # unit_denominator | exact_division | reduced_fraction | chart_lift
    path: MoveSequence
    truncation: Optional[int]

    def check(self, F: MeromorphicGerm) -> bool:
        return self.certificate * F.h == F.g


@dataclass(frozen=True)
class NotAnalytic:
    witness: CurveCheckReport
    derivation: Tuple[DerivationStep, ...]
    path: MoveSequence
    M: Exponent


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    truncation: int
    budget: int


Verdict = Union[Analytic, NotAnalytic, Inconclusive]


@dataclass
class DecideConfig:
    trunc: int = 32  # max total degree of chart expansions / quotient certificates
    budget: int = 10_000  # chart-tree expansions for principalization
    tuple_budget: int = 100_000  # prime tuples tried per unique-representation search
    witness_attempts: int = 3  # alternative m' per failing monomial before deepening
    start_trunc: int = 4
    schedule: List[int] = field(default_factory=list)

    def truncations(self) -> List[int]:
        if self.schedule:
            return [d for d in self.schedule if d <= self.trunc] or [self.trunc]
        out, d = [], min(self.start_trunc, self.trunc)
        while d < self.trunc:
            out.append(d)
            d *= 2
        out.append(self.trunc)
        return out


def _witness_from_failure(F: MeromorphicGerm, path: MoveSequence, fail: LiftFailure,
                          cfg: DecideConfig) -> Optional[NotAnalytic]:
    mv = path[fail.level]
    for attempt in range(cfg.witness_attempts):
        w = step3_witness(fail.exponent, mv, cfg.tuple_budget, skip=attempt)
        level = fail.level
        germ = F.pullback(path.prefix(level).composite)
        try:
            report = curve_check(germ, w.curve)
        except (CurveInPoleLocus, InsufficientTruncation) as exc:
            log.debug("witness candidate %s rejected: %s", w.curve, exc)
            continue
        if report.passed:
            log.debug("witness candidate %s passed at level %d", w.curve, level)
            continue
        steps = [DerivationStep(level, "lift_failure", w.curve, w.exponent, fail.exponent, w.chart_curve, fail.A)]
        for k in range(level - 1, -1, -1):
            report = witness_transport(report, path[k], F.pullback(path.prefix(k).composite))
            steps.append(DerivationStep(k, "transport", report.curve, report.offending_exponent))
        final = curve_check(F, report.curve)
        assert not final.passed and verify_witness(F, final), "level-0 witness does not re-verify"
        return NotAnalytic(final, tuple(steps), path, ())
    return None


def _pole_witness(F: MeromorphicGerm, path: MoveSequence, h_red: MultiSeries,
                  cfg: DecideConfig) -> Optional[NotAnalytic]:
    # reduced numerator is a unit, reduced denominator vanishes at the origin
    b = min(h_red.support(), key=monomial_order_key)
    gen = unique_tuples(b, cfg.tuple_budget)
    for _ in range(cfg.witness_attempts):
        m_prime = next(gen)
        m = path.transport(m_prime)
        try:
            report = curve_check(F, m)
        except (CurveInPoleLocus, InsufficientTruncation):
            continue
        if report.pole and verify_witness(F, report):
            step = DerivationStep(len(path), "pole", m, report.offending_exponent, b, m_prime)
            return NotAnalytic(report, (step,), path, ())
    return None


def decide(F: MeromorphicGerm, trunc: Optional[int] = None, budget: Optional[int] = None,
           config: Optional[DecideConfig] = None) -> Verdict:
    cfg = config or DecideConfig()
    if trunc is not None:
        cfg.trunc = trunc
    if budget is not None:
        cfg.budget = budget
    D = cfg.trunc
    empty = MoveSequence(F.n)

    if F.h.constant_term():
        q = (F.g * series_inverse(F.h, D)).truncate(D)
        return Analytic(q, "unit_denominator", empty, D)

    if F.is_polynomial:
        q = exact_divide(F.g, F.h)
        if q is not None:
            return Analytic(q, "exact_division", empty, None)
        g_red, h_red = cancel_common_factor(F.g, F.h)
        if h_red.constant_term():
            q = (g_red * series_inverse(h_red, D)).truncate(D)
            return Analytic(q, "reduced_fraction", empty, D)
        # g/h in lowest terms with h(0) = 0: not analytic, look for the curve

    try:
        reg = regularize_tuple([F.g, F.h], cfg.budget)
    except BudgetExceeded:
        return Inconclusive("budget", D, cfg.budget)
    path = reg.path
    g_red, h_red = reg.reduced

    try:
        if not h_red.constant_term():
            verdict = _pole_witness(F, path, h_red, cfg)
            if verdict is not None:
                return NotAnalytic(verdict.witness, verdict.derivation, path, reg.M)
            return Inconclusive("truncation", D, cfg.budget)

        for Dc in cfg.truncations():
            expansion = (g_red * series_inverse(h_red, Dc)).truncate(Dc)
            fail = liftability_scan(expansion, path)
            if fail is None:
                if F.is_polynomial:
                    continue
                q = lift_series(expansion, path)
                if (q * F.h).truncate(q.trunc) == F.g.truncate(q.trunc):
                    return Analytic(q, "chart_lift", path, q.trunc)
                continue
            verdict = _witness_from_failure(F, path, fail, cfg)
            if verdict is not None:
                return NotAnalytic(verdict.witness, verdict.derivation, path, reg.M)
    except SearchBudgetExceeded:
        return Inconclusive("budget", D, cfg.budget)
    return Inconclusive("truncation", D, cfg.budget)
