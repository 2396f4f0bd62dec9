"""Exact monomial and truncated power-series arithmetic over the rationals.

Exponent vectors are plain tuples of nonnegative ints. A :class:`MultiSeries`
is either an exact polynomial (``trunc is None``) or a power series known up
to a total degree ``trunc``; every operation propagates the largest degree up
to which its result is still reliable.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

Exponent = Tuple[int, ...]
Rational = Fraction

INF = math.inf


class SeriesError(ValueError):
    pass


class NotAUnit(SeriesError):
    pass


class NotDivisible(SeriesError):
    pass


def _min_trunc(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def degree(a: Sequence[int]) -> int:
    return sum(a)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the monomial with exponent ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


def monomial_order_key(a: Exponent):
    """Graded-lex key: lowest total degree first, ties lexicographic."""
    return (sum(a), a)


class MultiSeries:
    """Truncated multivariate power series with exact rational coefficients."""

    __slots__ = ("n", "trunc", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, object] = (), trunc: Optional[int] = None):
        if n < 1:
            raise SeriesError("variable count must be >= 1")
        if trunc is not None and trunc < 0:
            raise SeriesError("truncation degree must be nonnegative")
        clean: Dict[Exponent, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for a, c in items:
            a = tuple(int(x) for x in a)
            if len(a) != n or any(x < 0 for x in a):
                raise SeriesError(f"bad exponent {a} for n={n}")
            if trunc is not None and sum(a) > trunc:
                continue
            c = Fraction(c)
            if c:
                clean[a] = clean.get(a, Fraction(0)) + c
                if not clean[a]:
                    del clean[a]
        self.n = n
        self.trunc = trunc
        self._terms = dict(sorted(clean.items()))

    # construction helpers
    @classmethod
    def zero(cls, n: int, trunc: Optional[int] = None) -> "MultiSeries":
        return cls(n, {}, trunc)

    @classmethod
    def constant(cls, n: int, c, trunc: Optional[int] = None) -> "MultiSeries":
        return cls(n, {(0,) * n: c}, trunc)

    @classmethod
    def monomial(cls, a: Sequence[int], c=1, trunc: Optional[int] = None) -> "MultiSeries":
        a = tuple(a)
        return cls(len(a), {a: c}, trunc)

    @classmethod
    def variable(cls, n: int, i: int, trunc: Optional[int] = None) -> "MultiSeries":
        a = [0] * n
        a[i] = 1
        return cls(n, {tuple(a): 1}, trunc)

    # accessors
    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    def items(self):
        return self._terms.items()

    def support(self) -> Tuple[Exponent, ...]:
        return tuple(self._terms)

    def coeff(self, a: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(a), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.n)

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((sum(a) for a in self._terms), default=-1)

    def order(self) -> float:
        return min((sum(a) for a in self._terms), default=INF)

    def truncate(self, D: Optional[int]) -> "MultiSeries":
        return MultiSeries(self.n, self._terms, _min_trunc(self.trunc, D))

    def homogeneous_parts(self) -> Dict[int, Dict[Exponent, Fraction]]:
        parts: Dict[int, Dict[Exponent, Fraction]] = defaultdict(dict)
        for a, c in self._terms.items():
            parts[sum(a)][a] = c
        return parts

    # ring operations
    def _check(self, other: "MultiSeries"):
        if not isinstance(other, MultiSeries):
            raise TypeError(f"expected MultiSeries, got {type(other).__name__}")
        if other.n != self.n:
            raise SeriesError(f"variable count mismatch: {self.n} vs {other.n}")

    def _coerce(self, other) -> "MultiSeries":
        if isinstance(other, (int, Fraction)):
            return MultiSeries.constant(self.n, other)
        self._check(other)
        return other

    def __add__(self, other) -> "MultiSeries":
        other = self._coerce(other)
        D = _min_trunc(self.trunc, other.trunc)
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return MultiSeries(self.n, out, D)

    __radd__ = __add__

    def __neg__(self) -> "MultiSeries":
        return MultiSeries(self.n, {a: -c for a, c in self._terms.items()}, self.trunc)

    def __sub__(self, other) -> "MultiSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiSeries":
        other = self._coerce(other)
        D = _min_trunc(self.trunc, other.trunc)
        out: Dict[Exponent, Fraction] = defaultdict(Fraction)
        for a, c in self._terms.items():
            da = sum(a)
            for b, e in other._terms.items():
                if D is not None and da + sum(b) > D:
                    continue
                out[tuple(x + y for x, y in zip(a, b))] += c * e
        return MultiSeries(self.n, out, D)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiSeries":
        if not isinstance(k, int) or k < 0:
            raise SeriesError("only nonnegative integer powers")
        result = MultiSeries.constant(self.n, 1, self.trunc)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiSeries) or other.n != self.n:
            return NotImplemented if not isinstance(other, MultiSeries) else False
        D = _min_trunc(self.trunc, other.trunc)
        return self.truncate(D)._terms == other.truncate(D)._terms

    __hash__ = None  # equality compares on the common truncation

    def __repr__(self) -> str:
        tail = "" if self.trunc is None else f" + O(deg {self.trunc + 1})"
        return f"MultiSeries(n={self.n}, {format_series(self)}{tail})"


def series_add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a + b


def series_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a * b


def series_inverse(u: MultiSeries, D: Optional[int] = None) -> MultiSeries:
    """Multiplicative inverse of a unit, truncated at total degree ``D``.

    For an exact polynomial ``u`` the degree must be supplied; for a truncated
    series it defaults to (and is capped by) ``u.trunc``.
    """
    D = _min_trunc(u.trunc, D)
    if D is None:
        raise SeriesError("inverse of a polynomial needs an explicit truncation degree")
    u0 = u.constant_term()
    if not u0:
        raise NotAUnit("constant term is zero")
    parts = u.homogeneous_parts()
    inv0 = 1 / u0
    v_parts: Dict[int, Dict[Exponent, Fraction]] = {0: {(0,) * u.n: inv0}}
    # degree-by-degree recurrence: v_d = -(1/u0) * sum_{k>=1} u_k v_{d-k}
    for d in range(1, D + 1):
        acc: Dict[Exponent, Fraction] = defaultdict(Fraction)
        for k in range(1, d + 1):
            uk = parts.get(k)
            vk = v_parts.get(d - k)
            if not uk or not vk:
                continue
            for a, c in uk.items():
                for b, e in vk.items():
                    acc[tuple(x + y for x, y in zip(a, b))] += c * e
        v_parts[d] = {a: -inv0 * c for a, c in acc.items() if c}
    terms = {a: c for part in v_parts.values() for a, c in part.items()}
    return MultiSeries(u.n, terms, D)


def divide_by_monomial(f: MultiSeries, M: Sequence[int]) -> MultiSeries:
    M = tuple(M)
    if len(M) != f.n:
        raise SeriesError("monomial has wrong length")
    out = {}
    for a, c in f.items():
        if not divides(M, a):
            raise NotDivisible(f"{M} does not divide {a}")
        out[tuple(x - y for x, y in zip(a, M))] = c
    D = None if f.trunc is None else f.trunc - sum(M)
    if D is not None and D < 0:
        raise NotDivisible(f"monomial degree {sum(M)} exceeds truncation {f.trunc}")
    return MultiSeries(f.n, out, D)


def exact_divide(g: MultiSeries, h: MultiSeries) -> Optional[MultiSeries]:
    """Polynomial quotient g/h if h divides g exactly, else None.

    Division by a single polynomial in lex order: remainder is zero iff h | g.
    """
    if not (g.is_exact and h.is_exact):
        raise SeriesError("exact division needs polynomial inputs")
    if h.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    g._check(h)
    lt_h = max(h.support())
    lc_h = h.coeff(lt_h)
    r = dict(g.items())
    q: Dict[Exponent, Fraction] = {}
    h_terms = list(h.items())
    while r:
        lt_r = max(r)
        if not divides(lt_h, lt_r):
            return None
        shift = tuple(x - y for x, y in zip(lt_r, lt_h))
        c = r[lt_r] / lc_h
        q[shift] = q.get(shift, 0) + c
        for b, e in h_terms:
            key = tuple(x + y for x, y in zip(b, shift))
            v = r.get(key, 0) - c * e
            if v:
                r[key] = v
            else:
                r.pop(key, None)
    return MultiSeries(g.n, q)


# ---------------------------------------------------------------------------
# univariate (Laurent) series in t


class UniSeries:
    """Series in one variable ``t``; exponents may be negative for quotients.

    ``trunc`` is the highest reliable exponent, ``None`` meaning exact.
    """

    __slots__ = ("trunc", "_terms")

    def __init__(self, terms: Mapping[int, object] = (), trunc: Optional[int] = None):
        clean: Dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = int(e)
            if trunc is not None and e > trunc:
                continue
            c = Fraction(c)
            if c:
                v = clean.get(e, Fraction(0)) + c
                if v:
                    clean[e] = v
                else:
                    clean.pop(e, None)
        self.trunc = trunc
        self._terms = dict(sorted(clean.items()))

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, e: int) -> Fraction:
        return self._terms.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def ord(self) -> float:
        return next(iter(self._terms), INF)

    def truncate(self, T: Optional[int]) -> "UniSeries":
        return UniSeries(self._terms, _min_trunc(self.trunc, T))

    def __add__(self, other: "UniSeries") -> "UniSeries":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return UniSeries(out, _min_trunc(self.trunc, other.trunc))

    def __neg__(self) -> "UniSeries":
        return UniSeries({e: -c for e, c in self._terms.items()}, self.trunc)

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        return self + (-other)

    def __mul__(self, other: "UniSeries") -> "UniSeries":
        # reliable up to min(T_a + ord_b, T_b + ord_a)
        T = None
        if self.trunc is not None or other.trunc is not None:
            cands = []
            if self.trunc is not None:
                cands.append(self.trunc + (other.ord if not other.is_zero() else 0))
            if other.trunc is not None:
                cands.append(other.trunc + (self.ord if not self.is_zero() else 0))
            T = int(min(cands))
        out: Dict[int, Fraction] = defaultdict(Fraction)
        for e, c in self._terms.items():
            for f, d in other._terms.items():
                if T is None or e + f <= T:
                    out[e + f] += c * d
        return UniSeries(out, T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniSeries):
            return NotImplemented
        T = _min_trunc(self.trunc, other.trunc)
        return self.truncate(T)._terms == other.truncate(T)._terms

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*t^{e}" for e, c in self._terms.items()) or "0"
        tail = "" if self.trunc is None else f" + O(t^{self.trunc + 1})"
        return f"UniSeries({body}{tail})"


def uni_quotient(num: UniSeries, den: UniSeries, upto: int) -> UniSeries:
    """Laurent expansion of num/den through exponent ``upto`` (when reliable).

    The returned ``trunc`` is the reliable bound, which may fall short of
    ``upto`` when the inputs are themselves truncated.
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator series")
    s = int(den.ord)
    d0 = den.coeff(s)
    # den = t^s * u(t), u(0) = d0
    u = {e - s: c for e, c in den.items()}
    u_trunc = None if den.trunc is None else den.trunc - s
    if num.is_zero():
        T = upto if num.trunc is None else min(upto, num.trunc - s)
        return UniSeries({}, T)
    o = int(num.ord) - s
    T = upto
    if num.trunc is not None:
        T = min(T, num.trunc - s)
    if u_trunc is not None:
        T = min(T, o + u_trunc)
    # inverse of u up to degree T - o
    span = T - o
    inv: Dict[int, Fraction] = {}
    if span >= 0:
        inv[0] = 1 / d0
        for k in range(1, span + 1):
            acc = Fraction(0)
            for j, c in u.items():
                if 1 <= j <= k and (k - j) in inv:
                    acc += c * inv[k - j]
            if acc:
                inv[k] = -acc / d0
    out: Dict[int, Fraction] = defaultdict(Fraction)
    for e, c in num.items():
        e -= s
        if e > T:
            break
        for k, v in inv.items():
            if e + k > T:
                break
            out[e + k] += c * v
    return UniSeries(out, T)


def substitute_curve(f: MultiSeries, m: Sequence[int], T: Optional[int] = None) -> UniSeries:
    """f(t^m1, ..., t^mn) as a series in t.

    An exact polynomial gives an exact result (optionally cut at ``T``). For a
    truncated input the result is reliable up to (D+1)*min(m) - 1.
    """
    m = tuple(m)
    if len(m) != f.n:
        raise SeriesError("curve length does not match variable count")
    if any(x <= 0 for x in m):
        raise SeriesError("monomial curve exponents must be positive")
    reliable = None if f.trunc is None else (f.trunc + 1) * min(m) - 1
    T = _min_trunc(reliable, T)
    out: Dict[int, Fraction] = defaultdict(Fraction)
    for a, c in f.items():
        out[sum(x * y for x, y in zip(a, m))] += c
    return UniSeries(out, T)


# ---------------------------------------------------------------------------
# monomial maps


@dataclass(frozen=True)
class MonomialMap:
    """x_i -> prod_j z_j**E[i][j]; rows are old variables, columns new ones.

    An exponent vector pulls back to E^T a, and the map of a sequence
    sigma_1 o sigma_2 o ... has matrix E_1 E_2 ...
    """

    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.matrix)
        if n == 0 or any(len(row) != n for row in self.matrix):
            raise SeriesError("monomial map matrix must be square and nonempty")
        if any(x < 0 for row in self.matrix for x in row):
            raise SeriesError("monomial map entries must be nonnegative")

    @classmethod
    def identity(cls, n: int) -> "MonomialMap":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def pull_exponent(self, a: Sequence[int]) -> Exponent:
        E = self.matrix
        return tuple(sum(E[i][j] * a[i] for i in range(self.n)) for j in range(self.n))

    def push_curve(self, m: Sequence[int]) -> Tuple[int, ...]:
        """Curve z = t^m in the source maps to x = t^(E m)."""
        E = self.matrix
        return tuple(sum(E[i][j] * m[j] for j in range(self.n)) for i in range(self.n))

    def then(self, other: "MonomialMap") -> "MonomialMap":
        """Matrix of self o other (apply ``other`` first in coordinates)."""
        A, B, n = self.matrix, other.matrix, self.n
        return MonomialMap(tuple(
            tuple(sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)) for i in range(n)
        ))

    def det(self) -> int:
        return int_det(self.matrix)

    def min_row_sum(self) -> int:
        return min(sum(row) for row in self.matrix)


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    M = [list(r) for r in rows]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def pullback_series(f: MultiSeries, E: MonomialMap) -> MultiSeries:
    """Substitute x_i = z^(row i of E) into f.

    Unseen input terms have degree > D and every row sum is >= 1, so the
    result is reliable up to (D+1)*min_row_sum - 1.
    """
    if E.n != f.n:
        raise SeriesError("map size does not match variable count")
    if f.trunc is None:
        D = None
    else:
        rmin = E.min_row_sum()
        if rmin == 0:
            raise SeriesError("pullback of a truncated series along a map with a zero row")
        D = (f.trunc + 1) * rmin - 1
    return MultiSeries(f.n, ((E.pull_exponent(a), c) for a, c in f.items()), D)


# ---------------------------------------------------------------------------
# display


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(a: Sequence[int], names: Optional[Sequence[str]] = None) -> str:
    names = names or [f"x{i + 1}" for i in range(len(a))]
    parts = []
    for name, k in zip(names, a):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_series(f: MultiSeries, names: Optional[Sequence[str]] = None) -> str:
    """Readable polynomial string, graded-lex descending; parses back exactly."""
    if f.is_zero():
        return "0"
    out = []
    for a in sorted(f.support(), key=monomial_order_key, reverse=True):
        c = f.coeff(a)
        mono = format_monomial(a, names)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def support_exponents(series: Iterable[MultiSeries]) -> Tuple[Exponent, ...]:
    seen = set()
    for f in series:
        seen.update(f.support())
    return tuple(sorted(seen))


def cancel_common_factor(g: MultiSeries, h: MultiSeries) -> Tuple[MultiSeries, MultiSeries]:
    """Divide polynomials g, h by their gcd over Q (sympy does the gcd)."""
    import sympy

    if not (g.is_exact and h.is_exact):
        raise SeriesError("gcd needs polynomial inputs")
    g._check(h)
    if g.is_zero() or h.is_zero():
        return g, h
    gens = sympy.symbols(f"x1:{g.n + 1}")

    def to_poly(f: MultiSeries):
        return sympy.Poly.from_dict({a: sympy.Rational(c.numerator, c.denominator) for a, c in f.items()},
                                    *gens, domain=sympy.QQ)

    def from_poly(p) -> MultiSeries:
        return MultiSeries(g.n, {a: Fraction(int(c.p), int(c.q)) for a, c in p.terms()})

    P, Q = to_poly(g), to_poly(h)
    G = P.gcd(Q)
    return from_poly(P.exquo(G)), from_poly(Q.exquo(G))
