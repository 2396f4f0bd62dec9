"""Elementary monomial coordinate changes and their calculus.

A move keeps variable labels: with ``perm = (p_0, ..., p_{n-1})`` and chart
index ``r`` the centre variable is ``c = p_{r-1}`` and

    x_{p_k} = z_{p_k} * z_c   for k < r - 1
    x_{p_k} = z_{p_k}         otherwise.

So the permutation only decides which variables get scaled and which one
they are scaled by; z_i always sits "above" x_i.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Sequence, Tuple

from .series import Exponent, MonomialMap, MultiSeries, pullback_series

MonomialCurve = Tuple[int, ...]


@dataclass(frozen=True)
class ElementaryMove:
    perm: Tuple[int, ...]
    r: int

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        object.__setattr__(self, "perm", perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"{perm} is not a permutation of 0..{len(perm) - 1}")
        if not 1 < self.r <= len(perm):
            raise ValueError(f"chart index r={self.r} must satisfy 1 < r <= n={len(perm)}")

    @classmethod
    def standard(cls, n: int, r: int) -> "ElementaryMove":
        return cls(tuple(range(n)), r)

    @classmethod
    def pair(cls, n: int, scaled: int, centre: int) -> "ElementaryMove":
        """The r=2 chart x_scaled = z_scaled * z_centre of blowing up (x_scaled, x_centre)."""
        rest = [k for k in range(n) if k not in (scaled, centre)]
        return cls((scaled, centre, *rest), 2)

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def centre(self) -> int:
        return self.perm[self.r - 1]

    @property
    def scaled(self) -> Tuple[int, ...]:
        return self.perm[: self.r - 1]

    @cached_property
    def matrix(self) -> MonomialMap:
        E = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        for i in self.scaled:
            E[i][self.centre] = 1
        return MonomialMap(tuple(map(tuple, E)))

    def to_dict(self) -> dict:
        return {"perm": list(self.perm), "r": self.r}

    @classmethod
    def from_dict(cls, d: dict) -> "ElementaryMove":
        return cls(tuple(d["perm"]), int(d["r"]))


def move_pullback_exponent(mv: ElementaryMove, a: Sequence[int]) -> Exponent:
    out = list(a)
    out[mv.centre] = sum(a[i] for i in mv.scaled) + a[mv.centre]
    return tuple(out)


class Lift(NamedTuple):
    liftable: bool
    A: int
    lifted: Optional[Exponent]


def liftability(mv: ElementaryMove, a: Sequence[int]) -> Lift:
    """Whether the chart monomial z^a is the pullback of a monomial x^b.

    A = a_c - sum of the scaled exponents; b exists (and is unique) iff A >= 0.
    """
    A = a[mv.centre] - sum(a[i] for i in mv.scaled)
    if A < 0:
        return Lift(False, A, None)
    b = list(a)
    b[mv.centre] = A
    return Lift(True, A, tuple(b))


def transport_curve(mv: ElementaryMove, m: Sequence[int]) -> MonomialCurve:
    """Image of the chart curve z = t^m in the source coordinates."""
    if any(x <= 0 for x in m):
        raise ValueError("monomial curve exponents must be positive")
    out = list(m)
    for i in mv.scaled:
        out[i] = m[i] + m[mv.centre]
    return tuple(out)


@dataclass(frozen=True)
class MoveSequence:
    """sigma_1 o sigma_2 o ... ; ``moves[0]`` is applied to the original coordinates."""

    n: int
    moves: Tuple[ElementaryMove, ...] = ()
    composite: MonomialMap = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        moves = tuple(self.moves)
        if any(mv.n != self.n for mv in moves):
            raise ValueError("move size does not match n")
        object.__setattr__(self, "moves", moves)
        object.__setattr__(self, "composite", compose(self.n, moves))

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __getitem__(self, k):
        return self.moves[k]

    def extend(self, mv: ElementaryMove) -> "MoveSequence":
        out = object.__new__(MoveSequence)
        object.__setattr__(out, "n", self.n)
        object.__setattr__(out, "moves", self.moves + (mv,))
        object.__setattr__(out, "composite", self.composite.then(mv.matrix))
        return out

    def prefix(self, k: int) -> "MoveSequence":
        return MoveSequence(self.n, self.moves[:k])

    def pullback(self, f: MultiSeries) -> MultiSeries:
        return pullback_series(f, self.composite)

    def transport(self, m: Sequence[int], start: Optional[int] = None) -> MonomialCurve:
        """Transport a curve from chart level ``start`` (default: deepest) to level 0."""
        start = len(self.moves) if start is None else start
        m = tuple(m)
        for mv in reversed(self.moves[:start]):
            m = transport_curve(mv, m)
        return m

    def to_list(self) -> list:
        return [mv.to_dict() for mv in self.moves]


def compose(n: int, moves: Sequence[ElementaryMove] = ()) -> MonomialMap:
    E = MonomialMap.identity(n)
    for mv in moves:
        E = E.then(mv.matrix)
    return E
