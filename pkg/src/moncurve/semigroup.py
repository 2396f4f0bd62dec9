"""Numerical semigroups <m_1, ..., m_n>: membership, Frobenius numbers and
unique-representation generator tuples."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy import prime, primerange


class SearchBudgetExceeded(RuntimeError):
    pass


def _apery(gens: Sequence[int]) -> Tuple[int, ...]:
    """Least semigroup element in each residue class mod min(gens).

    Dijkstra over residue classes, edge weights are the generators.
    """
    pivot = min(gens)
    dist = [math.inf] * pivot
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for g in gens:
            nd = d + g
            nr = nd % pivot
            if nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return tuple(int(x) for x in dist)


@dataclass(frozen=True)
class NumericalSemigroup:
    raw_generators: Tuple[int, ...]
    d: int = field(init=False)
    reduced_generators: Tuple[int, ...] = field(init=False)
    apery: Tuple[int, ...] = field(init=False, repr=False)
    frobenius: int = field(init=False)

    def __post_init__(self):
        raw = tuple(int(m) for m in self.raw_generators)
        if not raw or any(m <= 0 for m in raw):
            raise ValueError("generators must be positive integers")
        d = reduce(math.gcd, raw)
        reduced = tuple(m // d for m in raw)
        apery = _apery(reduced)
        object.__setattr__(self, "raw_generators", raw)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "reduced_generators", reduced)
        object.__setattr__(self, "apery", apery)
        object.__setattr__(self, "frobenius", max(apery) - min(reduced))

    def __contains__(self, e: int) -> bool:
        return sg_contains(self, e)

    @property
    def pivot(self) -> int:
        return min(self.reduced_generators)

    def minimal_generators(self) -> Tuple[int, ...]:
        """Reduced generators that are not sums of the others, ascending."""
        gens = sorted(set(self.reduced_generators))
        out: List[int] = []
        for g in gens:
            if out and enumerate_representations(out, g, limit=1):
                continue
            out.append(g)
        return tuple(out)


def semigroup(*gens: int) -> NumericalSemigroup:
    if len(gens) == 1 and not isinstance(gens[0], int):
        gens = tuple(gens[0])
    return NumericalSemigroup(tuple(gens))


def sg_contains(S: NumericalSemigroup, e: int) -> bool:
    if e < 0 or e % S.d:
        return False
    e //= S.d
    return e >= S.apery[e % S.pivot]


def sg_frobenius(S: NumericalSemigroup) -> int:
    """Frobenius number of the reduced semigroup; -1 when it is all of N."""
    return S.frobenius


def sg_frobenius_bound(S: NumericalSemigroup) -> int:
    """floor((2/n) * m_1 * m_n) over the minimal generators m_1 < ... < m_n.

    Redundant generators are dropped first: e.g. <4, 8, 13> has Frobenius 35
    but the formula on all three listed generators gives 34.
    """
    gens = S.minimal_generators()
    if gens[0] < 2:
        raise ValueError("bound needs smallest generator >= 2")
    if len(gens) == 1:
        raise ValueError("bound needs gcd-1 generators")
    return (2 * gens[0] * gens[-1]) // len(gens)


def enumerate_representations(m: Sequence[int], N: int, limit: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All c in N^n with sum c_i m_i == N, lexicographic order.

    ``limit`` stops after that many solutions have been found.
    """
    m = tuple(m)
    if any(x <= 0 for x in m):
        raise ValueError("generators must be positive")
    if N < 0:
        return []
    n = len(m)
    g_suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        g_suffix[i] = math.gcd(m[i], g_suffix[i + 1])

    @lru_cache(maxsize=None)
    def reachable(i: int, rest: int) -> bool:
        if rest == 0:
            return True
        if i == n or rest % g_suffix[i]:
            return False
        return any(reachable(i + 1, rest - k * m[i]) for k in range(rest // m[i] + 1))

    out: List[Tuple[int, ...]] = []
    prefix: List[int] = []

    def walk(i: int, rest: int) -> bool:
        if i == n:
            if rest == 0:
                out.append(tuple(prefix))
                return limit is not None and len(out) >= limit
            return False
        for k in range(rest // m[i] + 1):
            r = rest - k * m[i]
            if not reachable(i + 1, r):
                continue
            prefix.append(k)
            stop = walk(i + 1, r)
            prefix.pop()
            if stop:
                return True
        return False

    walk(0, N)
    return out


def has_unique_representation(m: Sequence[int], a: Sequence[int]) -> bool:
    N = sum(x * y for x, y in zip(a, m))
    return enumerate_representations(m, N, limit=2) == [tuple(a)]


def prime_tuples(n: int) -> Iterator[Tuple[int, ...]]:
    """Strictly ascending n-tuples of primes, ordered by sum then lexicographically."""
    primes: List[int] = []
    hi = 2
    total = sum(prime(i) for i in range(1, n + 1))
    while True:
        while hi <= total:
            nxt = max(hi * 2, 16)
            primes.extend(primerange(hi, nxt))
            hi = nxt

        def rec(k: int, start: int, rest: int):
            if k == 0:
                if rest == 0:
                    yield ()
                return
            for idx in range(start, len(primes)):
                p = primes[idx]
                # remaining k-1 primes are each > p
                if p * k + (k - 1) * k // 2 > rest:
                    break
                for tail in rec(k - 1, idx + 1, rest - p):
                    yield (p,) + tail

        yield from rec(n, 0, total)
        total += 1


def unique_tuples(a: Sequence[int], budget: int = 100_000) -> Iterator[Tuple[int, ...]]:
    """Prime tuples m' on which sum a_i m'_i has exactly one representation."""
    a = tuple(a)
    if not any(a):
        raise ValueError("exponent vector must be nonzero")
    for tried, m in enumerate(prime_tuples(len(a))):
        if tried >= budget:
            raise SearchBudgetExceeded(f"no unique-representation tuple for {a} in {budget} candidates")
        if has_unique_representation(m, a):
            yield m


def choose_unique_tuple(a: Sequence[int], budget: int = 100_000) -> Tuple[int, ...]:
    return next(unique_tuples(a, budget))
