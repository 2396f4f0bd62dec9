"""Principalization of monomial ideals by elementary chart moves, and the
regularization of a tuple of series through their support ideal."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .blowup import ElementaryMove, MoveSequence
from .series import (
    Exponent,
    MonomialMap,
    MultiSeries,
    NotDivisible,
    divide_by_monomial,
    divides,
    support_exponents,
)


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: Tuple[Exponent, ...]

    def __post_init__(self):
        if not self.gens:
            raise ValueError("the zero ideal has no monomial generators")
        if any(len(g) != self.n for g in self.gens):
            raise ValueError("generator length does not match n")

    def pullback(self, E: MonomialMap) -> "MonomialIdeal":
        return minimalize([E.pull_exponent(g) for g in self.gens])

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)


def minimalize(gens: Sequence[Sequence[int]]) -> MonomialIdeal:
    gens = sorted({tuple(g) for g in gens})
    if not gens:
        raise ValueError("empty generator list")
    keep = [g for g in gens if not any(h != g and divides(h, g) for h in gens)]
    return MonomialIdeal(len(gens[0]), tuple(keep))


def is_principal(I: MonomialIdeal) -> Optional[Exponent]:
    return I.gens[0] if len(I.gens) == 1 else None


def select_center(I: MonomialIdeal, rank: Optional[Callable[[Exponent], object]] = None) -> Tuple[int, int]:
    """Codimension-2 centre (x_i = x_j = 0) for the first pair of generators.

    Minimal generators are pairwise incomparable. For the first pair (a, b)
    (canonical order, or by ``rank``) i is the slot where a exceeds b the
    most and j the slot where b exceeds a the most, ties to the lower slot.
    Returned with i < j.

    The pair stays first until it becomes comparable, and on w = a - b each
    chart replaces one of w_i, w_j by w_i + w_j. With the two largest
    entries chosen, (max|w|, its multiplicity, multiset of the side without
    the maximum) drops in both charts, so every branch of the chart tree is
    finite.
    """
    if len(I.gens) < 2:
        raise ValueError("ideal is already principal")
    gens = sorted(I.gens, key=rank) if rank else I.gens
    a, b = gens[0], gens[1]
    w = [x - y for x, y in zip(a, b)]
    i = max((k for k in range(I.n) if w[k] > 0), key=lambda k: (w[k], -k))
    j = max((k for k in range(I.n) if w[k] < 0), key=lambda k: (-w[k], -k))
    return (i, j) if i < j else (j, i)


def expand_chart(I: MonomialIdeal, center: Tuple[int, int]) -> List[Tuple[ElementaryMove, MonomialIdeal]]:
    """The two charts of blowing up (x_i, x_j): x_i = z_i z_j first, then x_j = z_j z_i."""
    i, j = center
    if i == j:
        raise ValueError("centre needs two distinct variables")
    out = []
    for scaled, centre in ((i, j), (j, i)):
        mv = ElementaryMove.pair(I.n, scaled, centre)
        out.append((mv, I.pullback(mv.matrix)))
    return out


@dataclass(frozen=True)
class PrincipalizationResult:
    ideal: MonomialIdeal
    path: MoveSequence
    M: Exponent
    source: Exponent
    chart_gens: Tuple[Exponent, ...]
    expansions: int = 0

    def check(self) -> None:
        E = self.path.composite
        assert self.source in self.ideal.gens
        assert E.pull_exponent(self.source) == self.M
        assert all(divides(self.M, g) for g in self.chart_gens)
        assert abs(E.det()) == 1


def _result(I: MonomialIdeal, J: MonomialIdeal, path: MoveSequence, expansions: int) -> Optional[PrincipalizationResult]:
    M = is_principal(J)
    if M is None:
        return None
    E = path.composite
    pulled = {E.pull_exponent(g): g for g in I.gens}
    res = PrincipalizationResult(I, path, M, pulled[M], tuple(sorted(pulled)), expansions)
    res.check()
    return res


def _origin_rank(I: MonomialIdeal, path: MoveSequence) -> Callable[[Exponent], int]:
    E = path.composite
    pos = {E.pull_exponent(g): k for k, g in enumerate(I.gens)}
    return pos.__getitem__


def _children(I: MonomialIdeal, J: MonomialIdeal, path: MoveSequence):
    centre = select_center(J, _origin_rank(I, path))
    return [(path.extend(mv), child) for mv, child in expand_chart(J, centre)]


def principalize_search(I: MonomialIdeal, budget: int = 10_000) -> PrincipalizationResult:
    """Depth-first chart search; the first principal chart wins.

    Generator pairs are ranked by the position of the original generator,
    so a pair keeps priority across moves until it is resolved.
    """
    stack = [(MoveSequence(I.n), I)]
    expansions = 0
    while stack:
        path, J = stack.pop()
        res = _result(I, J, path, expansions)
        if res is not None:
            return res
        if expansions >= budget:
            raise BudgetExceeded(f"no principal chart within {budget} expansions")
        expansions += 1
        stack.extend(reversed(_children(I, J, path)))
    raise AssertionError("chart tree exhausted without a principal chart")


def principalize_all_leaves(I: MonomialIdeal, budget: int = 10_000) -> Iterator[PrincipalizationResult]:
    """Every leaf of the full chart tree, in DFS order; each leaf is principal."""
    stack = [(MoveSequence(I.n), I)]
    expansions = 0
    while stack:
        path, J = stack.pop()
        res = _result(I, J, path, expansions)
        if res is not None:
            yield res
            continue
        if expansions >= budget:
            raise BudgetExceeded(f"chart tree larger than {budget} expansions")
        expansions += 1
        stack.extend(reversed(_children(I, J, path)))


def support_ideal(hs: Sequence[MultiSeries]) -> MonomialIdeal:
    exps = support_exponents(hs)
    if not exps:
        raise ValueError("all series are zero")
    return minimalize(exps)


@dataclass(frozen=True)
class Regularization:
    path: MoveSequence
    M: Exponent
    reduced: Tuple[MultiSeries, ...]
    unit_index: int
    ideal: MonomialIdeal


def regularize_tuple(hs: Sequence[MultiSeries], budget: int = 10_000) -> Regularization:
    """Pull back along a principalizing path of the support ideal and divide out M.

    Afterwards every reduced series is a power series and the one at
    ``unit_index`` (0-based, first such) has nonzero constant term.
    """
    hs = list(hs)
    I = support_ideal(hs)
    res = principalize_search(I, budget)
    reduced = []
    for h in hs:
        pulled = res.path.pullback(h)
        try:
            reduced.append(divide_by_monomial(pulled, res.M))
        except NotDivisible as exc:
            raise AssertionError(f"principal monomial does not divide a pullback: {exc}") from exc
    j = next((k for k, h in enumerate(reduced) if h.constant_term()), None)
    assert j is not None, "no reduced series is a unit"
    return Regularization(res.path, res.M, tuple(reduced), j, I)
