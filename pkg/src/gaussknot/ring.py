"""Exact coefficient rings: Laurent polynomials in t, truncated series in h.

Coefficients are Python rationals: ``int`` whenever the value is integral,
``fractions.Fraction`` otherwise.  Almost everything in this package lives
over the integers, so keeping ints unboxed avoids the (large) constant cost
of ``Fraction`` arithmetic.

The two rings are tied together by the substitution ``t = 1/(1+h)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from numbers import Rational
from typing import Callable, Iterable, Iterator, Mapping, Sequence

__all__ = [
    "DimensionError",
    "DivisibilityError",
    "NonInvertibleError",
    "LaurentPoly",
    "TruncSeries",
    "RingMatrix",
    "LAURENT",
    "SeriesRing",
    "DEFAULT_ORDER",
    "to_rational",
    "parse_rational",
    "rational_str",
    "gen_binom",
    "laurent_det",
    "laurent_adjugate",
    "laurent_exact_div",
    "permutation_det",
    "t_to_hbar",
    "series_inverse",
]

DEFAULT_ORDER = 8


class DimensionError(ValueError):
    """Matrix shapes do not fit the requested operation."""


class DivisibilityError(ArithmeticError):
    """A division that had to be exact left a remainder."""


class NonInvertibleError(ZeroDivisionError):
    """A series with zero constant term was inverted."""


# --- rationals --------------------------------------------------------------


def to_rational(x) -> int | Fraction:
    """Canonical rational: an int when integral, otherwise a reduced Fraction."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, Rational):
        return to_rational(Fraction(x.numerator, x.denominator))
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact rational: {x!r}")


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if not r:
            return q
    return to_rational(Fraction(a) / b)


def parse_rational(text: str) -> int | Fraction:
    return to_rational(Fraction(text.strip()))


def rational_str(x) -> str:
    """``"p/q"`` or ``"p"``; never a decimal."""
    return str(to_rational(x))


@lru_cache(maxsize=None)
def gen_binom(x, m: int):
    """Generalized binomial coefficient x(x-1)...(x-m+1)/m! for rational x."""
    if m < 0:
        return 0
    if type(x) is int:
        if x >= 0:
            return math.comb(x, m)
        # binom(-k, m) = (-1)^m binom(k+m-1, m)
        return (-1) ** m * math.comb(-x + m - 1, m)
    num = Fraction(1)
    for i in range(m):
        num *= x - i
    return to_rational(num / math.factorial(m))


# --- Laurent polynomials ----------------------------------------------------


class LaurentPoly:
    """Laurent polynomial in ``t`` with rational coefficients.

    Stored as an exponent -> coefficient map with no zero entries, so two
    polynomials are equal exactly when their maps are equal.  Instances are
    immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = to_rational(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> LaurentPoly:
        # c must already be canonical
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, value) -> LaurentPoly:
        return cls({0: value})

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls._raw({1: 1})

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> LaurentPoly:
        return cls({int(k): parse_rational(v) for k, v in obj.items()})

    # -- inspection

    @property
    def coeffs(self) -> dict[int, int | Fraction]:
        return dict(self._c)

    def items(self) -> Iterator[tuple[int, int | Fraction]]:
        return iter(sorted(self._c.items()))

    def coeff(self, exponent: int):
        return self._c.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    @property
    def min_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        try:
            other = to_rational(other)
        except TypeError:
            return NotImplemented
        return self._c == ({0: other} if other else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- arithmetic

    @staticmethod
    def _coerce(x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        return LaurentPoly.const(to_rational(x))

    def __add__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = to_rational(s)
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        c: dict[int, object] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return LaurentPoly._raw({e: to_rational(v) for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if not self.is_monomial():
                raise DivisibilityError("only monomials are units of the Laurent ring")
            ((e, v),) = self._c.items()
            return LaurentPoly({e * k: Fraction(1) / Fraction(v) ** (-k)})
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly._raw({e + k: v for e, v in self._c.items()})

    def substitute_power(self, k: int) -> LaurentPoly:
        """t -> t^k (k may be negative)."""
        if k == 0:
            return LaurentPoly.const(sum(self._c.values()))
        return LaurentPoly._raw({e * k: v for e, v in self._c.items()})

    def invert_variable(self) -> LaurentPoly:
        """t -> t^-1."""
        return self.substitute_power(-1)

    def __call__(self, value):
        """Evaluate at a nonzero rational."""
        value = Fraction(value)
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * value**e
        return to_rational(total)

    # -- formatting

    def to_json(self) -> dict[str, str]:
        return {str(e): rational_str(v) for e, v in sorted(self._c.items())}

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for i, (e, v) in enumerate(sorted(self._c.items())):
            neg = v < 0
            a = -v if neg else v
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def laurent_exact_div(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Quotient ``num/den`` in Q[t, 1/t]; raise DivisibilityError if inexact."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return num
    a, b = num.min_degree, den.min_degree
    # reduce to ordinary polynomials with nonzero constant terms
    n = [num.coeff(a + i) for i in range(num.max_degree - a + 1)]
    d = [den.coeff(b + i) for i in range(den.max_degree - b + 1)]
    dn = len(d) - 1
    if len(n) - 1 < dn:
        raise DivisibilityError(f"{num} is not divisible by {den}")
    lead = d[-1]
    q = [0] * (len(n) - dn)
    for k in range(len(n) - 1, dn - 1, -1):
        c = n[k]
        if not c:
            continue
        f = _div(c, lead)
        q[k - dn] = f
        for j in range(dn + 1):
            n[k - dn + j] = to_rational(n[k - dn + j] - f * d[j])
    if any(n[:dn]):
        raise DivisibilityError(f"{num} is not divisible by {den}")
    return LaurentPoly({i + a - b: v for i, v in enumerate(q)})


# --- truncated power series -------------------------------------------------


class TruncSeries:
    """Power series in ``h`` modulo ``h^(order+1)``.

    All binary operations require both operands to share the same order.
    """

    __slots__ = ("order", "_c")

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError("order must be non-negative")
        c = [to_rational(x) for x in coeffs][: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        self.order = order
        self._c = tuple(c)

    @classmethod
    def _raw(cls, c: tuple, order: int) -> TruncSeries:
        s = object.__new__(cls)
        s.order = order
        s._c = c
        return s

    @classmethod
    def const(cls, value, order: int) -> TruncSeries:
        return cls([value], order)

    @classmethod
    def hbar(cls, order: int) -> TruncSeries:
        return cls([0, 1], order)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __getitem__(self, k: int):
        return self._c[k]

    def __len__(self) -> int:
        return len(self._c)

    def is_unit(self) -> bool:
        return self._c[0] != 0

    def __bool__(self) -> bool:
        return any(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncSeries):
            return self.order == other.order and self._c == other._c
        try:
            other = to_rational(other)
        except TypeError:
            return NotImplemented
        return self._c[0] == other and not any(self._c[1:])

    def __hash__(self) -> int:
        return hash((self.order, self._c))

    def _coerce(self, x) -> TruncSeries:
        if isinstance(x, TruncSeries):
            if x.order != self.order:
                raise ValueError(f"order mismatch: {self.order} vs {x.order}")
            return x
        return TruncSeries.const(to_rational(x), self.order)

    def __add__(self, other) -> TruncSeries:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return TruncSeries._raw(
            tuple(to_rational(a + b) for a, b in zip(self._c, other._c)), self.order
        )

    __radd__ = __add__

    def __neg__(self) -> TruncSeries:
        return TruncSeries._raw(tuple(-a for a in self._c), self.order)

    def __sub__(self, other) -> TruncSeries:
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return TruncSeries._raw(
            tuple(to_rational(a - b) for a, b in zip(self._c, other._c)), self.order
        )

    def __rsub__(self, other) -> TruncSeries:
        return self._coerce(other) - self

    def __mul__(self, other) -> TruncSeries:
        if not isinstance(other, TruncSeries):
            try:
                k = to_rational(other)
            except TypeError:
                return NotImplemented
            return TruncSeries._raw(tuple(to_rational(a * k) for a in self._c), self.order)
        other = self._coerce(other)
        a, b = self._c, other._c
        n = self.order + 1
        # skip leading zeros; most series here are O(h) or monomial-like
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncSeries._raw(tuple(to_rational(x) for x in out), self.order)

    __rmul__ = __mul__

    def inverse(self) -> TruncSeries:
        return series_inverse(self)

    def __truediv__(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return self * series_inverse(self._coerce(other))
        try:
            k = to_rational(other)
        except TypeError:
            return NotImplemented
        return TruncSeries._raw(tuple(_div(a, k) for a in self._c), self.order)

    def __rtruediv__(self, other) -> TruncSeries:
        return self._coerce(other) * series_inverse(self)

    def __pow__(self, k: int) -> TruncSeries:
        if k < 0:
            return series_inverse(self) ** (-k)
        result = TruncSeries.const(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def truncate(self, order: int) -> TruncSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncSeries._raw(self._c[: order + 1], order)

    def to_json(self) -> list[str]:
        return [rational_str(a) for a in self._c]

    @classmethod
    def from_json(cls, obj: Sequence[str]) -> TruncSeries:
        return cls([parse_rational(x) for x in obj], len(obj) - 1)

    def __str__(self) -> str:
        parts = []
        for k, a in enumerate(self._c):
            if not a:
                continue
            neg = a < 0
            m = -a if neg else a
            if k == 0:
                body = str(m)
            else:
                mono = "h" if k == 1 else f"h^{k}"
                body = mono if m == 1 else f"{m}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        parts.append(f"+ O(h^{self.order + 1})" if parts else f"O(h^{self.order + 1})")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TruncSeries({list(self._c)!r}, order={self.order})"


def series_inverse(s: TruncSeries) -> TruncSeries:
    """Reciprocal of a series with nonzero constant term."""
    a = s.coeffs
    a0 = a[0]
    if not a0:
        raise NonInvertibleError(f"series {s} has zero constant term")
    n = s.order + 1
    inv = [0] * n
    inv[0] = _div(1, a0)
    for k in range(1, n):
        acc = 0
        for j in range(1, k + 1):
            if a[j]:
                acc += a[j] * inv[k - j]
        inv[k] = _div(-acc, a0) if acc else 0
    return TruncSeries._raw(tuple(inv), s.order)


@lru_cache(maxsize=4096)
def _t_power_series(k: int, order: int) -> tuple:
    # t^k = (1+h)^(-k)
    return tuple(gen_binom(-k, j) for j in range(order + 1))


def t_to_hbar(p: LaurentPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Expand p(t) under ``t = 1/(1+h)`` modulo ``h^(order+1)``."""
    out = [0] * (order + 1)
    for e, v in p.items():
        row = _t_power_series(e, order)
        for j in range(order + 1):
            if row[j]:
                out[j] += v * row[j]
    return TruncSeries(out, order)


# --- matrices ---------------------------------------------------------------


class _Ring:
    """Zero/one/coercion for one coefficient ring."""

    zero: object
    one: object

    def __call__(self, x):
        raise NotImplementedError


class _LaurentRing(_Ring):
    zero = LaurentPoly()
    one = LaurentPoly.const(1)

    def __call__(self, x) -> LaurentPoly:
        return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)

    def __repr__(self) -> str:
        return "LAURENT"


LAURENT = _LaurentRing()


class SeriesRing(_Ring):
    def __init__(self, order: int = DEFAULT_ORDER):
        self.order = order
        self.zero = TruncSeries.const(0, order)
        self.one = TruncSeries.const(1, order)

    def __call__(self, x) -> TruncSeries:
        if isinstance(x, TruncSeries):
            if x.order != self.order:
                raise ValueError(f"order mismatch: {x.order} vs {self.order}")
            return x
        if isinstance(x, LaurentPoly):
            return t_to_hbar(x, self.order)
        return TruncSeries.const(x, self.order)

    def __eq__(self, other) -> bool:
        return isinstance(other, SeriesRing) and other.order == self.order

    def __hash__(self) -> int:
        return hash(("series", self.order))

    def __repr__(self) -> str:
        return f"SeriesRing({self.order})"


class RingMatrix:
    """Dense immutable matrix over ``LAURENT`` or a ``SeriesRing``."""

    __slots__ = ("rows", "cols", "ring", "_e")

    def __init__(self, entries: Sequence[Sequence], ring: _Ring = LAURENT, cols: int | None = None):
        entries = [list(r) for r in entries]
        self.rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise DimensionError("ragged matrix rows")
        self.cols = cols
        self.ring = ring
        self._e = tuple(tuple(ring(x) for x in r) for r in entries)

    @classmethod
    def _raw(cls, e: tuple, rows: int, cols: int, ring: _Ring) -> RingMatrix:
        m = object.__new__(cls)
        m._e = e
        m.rows = rows
        m.cols = cols
        m.ring = ring
        return m

    @classmethod
    def identity(cls, n: int, ring: _Ring = LAURENT) -> RingMatrix:
        z, o = ring.zero, ring.one
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n, n, ring)

    @classmethod
    def zeros(cls, rows: int, cols: int, ring: _Ring = LAURENT) -> RingMatrix:
        return cls._raw(tuple((ring.zero,) * cols for _ in range(rows)), rows, cols, ring)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self._e[i][j]

    def row(self, i: int) -> tuple:
        return self._e[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self._e)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._e]

    def __iter__(self):
        return iter(self._e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.shape == other.shape and self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def map(self, fn: Callable, ring: _Ring | None = None) -> RingMatrix:
        ring = ring or self.ring
        return RingMatrix._raw(
            tuple(tuple(fn(x) for x in r) for r in self._e), self.rows, self.cols, ring
        )

    def to_series(self, order: int = DEFAULT_ORDER) -> RingMatrix:
        """Entry-wise t -> 1/(1+h)."""
        return self.map(lambda p: t_to_hbar(p, order), SeriesRing(order))

    def transpose(self) -> RingMatrix:
        return RingMatrix._raw(tuple(zip(*self._e)) if self.rows else (), self.cols, self.rows, self.ring)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RingMatrix:
        return RingMatrix._raw(
            tuple(tuple(self._e[i][j] for j in cols) for i in rows), len(rows), len(cols), self.ring
        )

    def minor_matrix(self, i: int, j: int) -> RingMatrix:
        """Delete row i and column j."""
        return self.submatrix(
            [r for r in range(self.rows) if r != i], [c for c in range(self.cols) if c != j]
        )

    def _check_same(self, other: RingMatrix):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: RingMatrix) -> RingMatrix:
        self._check_same(other)
        return RingMatrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)),
            self.rows, self.cols, self.ring,
        )

    def __sub__(self, other: RingMatrix) -> RingMatrix:
        self._check_same(other)
        return RingMatrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._e, other._e)),
            self.rows, self.cols, self.ring,
        )

    def __neg__(self) -> RingMatrix:
        return self.map(lambda x: -x)

    def scale(self, k) -> RingMatrix:
        return self.map(lambda x: x * k)

    def __matmul__(self, other: RingMatrix) -> RingMatrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        zero = self.ring.zero
        ocols = other.col
        cols = [ocols(j) for j in range(other.cols)]
        out = []
        for r in self._e:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return RingMatrix._raw(tuple(out), self.rows, other.cols, self.ring)

    def __str__(self) -> str:
        return "[" + ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._e) + "]"

    def __repr__(self) -> str:
        return f"RingMatrix({self.tolist()!r})"

    def to_json(self) -> list[list]:
        return [[x.to_json() for x in r] for r in self._e]


def laurent_det(m: RingMatrix) -> LaurentPoly:
    """Exact determinant over Q[t, 1/t].

    Each row is multiplied by a power of t so that its entries become
    ordinary polynomials; the determinant of that matrix is found by
    fraction-free (Bareiss) elimination and the monomial is then divided out.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return LaurentPoly.const(1)
    shift = 0
    a = []
    for r in m:
        r = [LAURENT(x) for x in r]
        nz = [x.min_degree for x in r if x]
        if not nz:
            return LaurentPoly()
        low = min(nz)
        shift += low
        a.append([x.shift(-low) for x in r])
    sign = 1
    prev = LaurentPoly.const(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        p = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = p * a[i][j] - aik * a[k][j]
                a[i][j] = laurent_exact_div(num, prev) if num else num
            a[i][k] = LaurentPoly()
        prev = p
    det = a[n - 1][n - 1]
    return det.shift(shift) * sign


def laurent_adjugate(m: RingMatrix) -> RingMatrix:
    """Classical adjugate (transposed cofactor matrix)."""
    if not m.is_square:
        raise DimensionError(f"adjugate of non-square {m.shape} matrix")
    n = m.rows
    if n == 0:
        return RingMatrix.zeros(0, 0, m.ring)
    if n == 1:
        return RingMatrix.identity(1, m.ring)
    out = [
        [laurent_det(m.minor_matrix(j, i)) * (-1 if (i + j) % 2 else 1) for j in range(n)]
        for i in range(n)
    ]
    return RingMatrix(out, LAURENT)


def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def permutation_det(m: RingMatrix):
    """Leibniz expansion over all permutations; exponential, for small matrices."""
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    total = m.ring.one if m.rows == 0 else m.ring.zero
    for p in permutations(range(m.rows)):
        term = m.ring.one
        for i, j in enumerate(p):
            term = term * m[i, j]
            if not term:
                break
        if term:
            total = total + term if _perm_sign(p) > 0 else total - term
    return total
