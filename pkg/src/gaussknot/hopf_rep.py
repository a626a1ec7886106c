"""Operator representation on polynomials with truncated h-series coefficients.

The generators act on functions of z (or of z0, z1) as

    a   -> 1 + h            b   -> d/dz
    phi -> h z              psi -> lambda - z d/dz

Operators are kept as small expression trees and applied to polynomials on
demand, so relations can be checked monomial by monomial with exact
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping

from .ring import DEFAULT_ORDER, LaurentPoly, TruncSeries, gen_binom, t_to_hbar, to_rational

__all__ = [
    "PolyFn",
    "RepOperator",
    "mul_z",
    "diff_z",
    "scalar",
    "graded",
    "rep_generator",
    "RelationReport",
    "commutator_check",
    "central_element_check",
    "binom_operator",
    "r_matrix_double_sum",
    "r_matrix_graded",
    "r_matrix_substitution",
    "r_matrix_action_check",
]


class PolyFn:
    """Polynomial in 1 or 2 variables with TruncSeries coefficients."""

    __slots__ = ("variables", "order", "_c")

    def __init__(self, coeffs: Mapping[tuple[int, ...], object], variables: int = 1,
                 order: int = DEFAULT_ORDER):
        if variables not in (1, 2):
            raise ValueError("PolyFn supports 1 or 2 variables")
        self.variables = variables
        self.order = order
        c = {}
        for exps, v in coeffs.items():
            exps = tuple(exps)
            if len(exps) != variables or min(exps) < 0:
                raise ValueError(f"bad exponent tuple {exps}")
            if not isinstance(v, TruncSeries):
                v = TruncSeries.const(v, order)
            if v:
                c[exps] = v
        self._c = c

    @classmethod
    def monomial(cls, exps: tuple[int, ...], coeff=1, order: int = DEFAULT_ORDER) -> PolyFn:
        return cls({tuple(exps): coeff}, len(exps), order)

    @classmethod
    def zero(cls, variables: int = 1, order: int = DEFAULT_ORDER) -> PolyFn:
        return cls({}, variables, order)

    def _like(self, c: dict) -> PolyFn:
        return PolyFn(c, self.variables, self.order)

    def items(self):
        return sorted(self._c.items())

    def coeff(self, exps: tuple[int, ...]) -> TruncSeries:
        return self._c.get(tuple(exps), TruncSeries.const(0, self.order))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyFn):
            return NotImplemented
        return (self.variables, self.order, self._c) == (other.variables, other.order, other._c)

    def __add__(self, other: PolyFn) -> PolyFn:
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c[e] + v if e in c else v
        return self._like(c)

    def __neg__(self) -> PolyFn:
        return self._like({e: -v for e, v in self._c.items()})

    def __sub__(self, other: PolyFn) -> PolyFn:
        return self + (-other)

    def scale(self, s) -> PolyFn:
        return self._like({e: v * s for e, v in self._c.items()})

    def __mul__(self, other) -> PolyFn:
        if not isinstance(other, PolyFn):
            return self.scale(other)
        c: dict = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = v1 * v2
                c[e] = c[e] + p if e in c else p
        return self._like(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PolyFn:
        out = PolyFn.monomial((0,) * self.variables, 1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self._c:
            return "0"
        names = ["z"] if self.variables == 1 else ["z0", "z1"]
        terms = []
        for e, v in self.items():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            terms.append(f"({v})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    __repr__ = __str__


@dataclass(frozen=True)
class RepOperator:
    """Expression tree over multiply-by-z, d/dz, scalars and graded maps.

    ``kind`` is one of "mul", "diff", "scalar", "graded", "compose", "sum".
    Composition is written ``A * B`` (apply B first).
    """

    kind: str
    var: int = 0
    value: object = None
    args: tuple = field(default=())

    def __call__(self, f: PolyFn) -> PolyFn:
        k = self.kind
        if k == "mul":
            c = {}
            for e, v in f._c.items():
                e = list(e)
                e[self.var] += 1
                c[tuple(e)] = v
            return f._like(c)
        if k == "diff":
            c = {}
            for e, v in f._c.items():
                p = e[self.var]
                if p:
                    e = list(e)
                    e[self.var] -= 1
                    c[tuple(e)] = v * p
            return f._like(c)
        if k == "scalar":
            return f.scale(self.value)
        if k == "graded":
            fn = self.value
            return f._like({e: v * fn(e[self.var], f.order) for e, v in f._c.items()})
        if k == "compose":
            for op in reversed(self.args):
                f = op(f)
            return f
        if k == "sum":
            out = PolyFn.zero(f.variables, f.order)
            for op in self.args:
                out = out + op(f)
            return out
        raise ValueError(f"unknown operator kind {k!r}")

    def __mul__(self, other) -> RepOperator:
        if not isinstance(other, RepOperator):
            other = scalar(other)
        return RepOperator("compose", args=(self, other))

    def __rmul__(self, other) -> RepOperator:
        return RepOperator("compose", args=(scalar(other), self))

    def __add__(self, other) -> RepOperator:
        if not isinstance(other, RepOperator):
            other = scalar(other)
        return RepOperator("sum", args=(self, other))

    __radd__ = __add__

    def __neg__(self) -> RepOperator:
        return RepOperator("compose", args=(scalar(-1), self))

    def __sub__(self, other) -> RepOperator:
        if not isinstance(other, RepOperator):
            other = scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> RepOperator:
        return scalar(other) + (-self)


def mul_z(var: int = 0) -> RepOperator:
    return RepOperator("mul", var=var)


def diff_z(var: int = 0) -> RepOperator:
    return RepOperator("diff", var=var)


def scalar(value) -> RepOperator:
    if not isinstance(value, TruncSeries):
        value = to_rational(value)
    return RepOperator("scalar", value=value)


def graded(var: int, fn: Callable[[int, int], object]) -> RepOperator:
    """Diagonal operator: z_var^k -> fn(k, order) * z_var^k."""
    return RepOperator("graded", var=var, value=fn)


def rep_generator(name: str, lam=0, order: int = DEFAULT_ORDER, var: int = 0) -> RepOperator:
    h = TruncSeries.hbar(order)
    if name == "a":
        return scalar(1 + h)
    if name == "b":
        return diff_z(var)
    if name == "phi":
        return scalar(h) * mul_z(var)
    if name == "psi":
        return scalar(to_rational(lam)) - mul_z(var) * diff_z(var)
    raise ValueError(f"unknown generator {name!r}; expected a, b, phi or psi")


@dataclass
class RelationReport:
    lam: object
    order: int
    degree: int
    violations: list[str] = field(default_factory=list)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations


def commutator_check(lam=0, order: int = DEFAULT_ORDER, degree: int = 12) -> RelationReport:
    """[phi, psi] = phi, [phi, b] = 1 - a, [psi, b] = b on z^k, k <= degree."""
    a, b, phi, psi = (rep_generator(g, lam, order) for g in ("a", "b", "phi", "psi"))
    relations = {
        "phi psi - psi phi = phi": (phi * psi - psi * phi, phi),
        "phi b - b phi = 1 - a": (phi * b - b * phi, 1 - a),
        "psi b - b psi = b": (psi * b - b * psi, b),
    }
    rep = RelationReport(lam, order, degree)
    for k in range(degree + 1):
        z = PolyFn.monomial((k,), 1, order)
        for name, (lhs, rhs) in relations.items():
            rep.checked += 1
            if lhs(z) != rhs(z):
                rep.violations.append(f"{name} fails on z^{k}")
    return rep


def central_element_check(lam=0, order: int = DEFAULT_ORDER, degree: int = 12) -> bool:
    """(phi b + (a - 1) psi) z^k == lam h z^k for all k <= degree."""
    a, b, phi, psi = (rep_generator(g, lam, order) for g in ("a", "b", "phi", "psi"))
    c = phi * b + (a - 1) * psi
    lam_h = TruncSeries.hbar(order) * to_rational(lam)
    for k in range(degree + 1):
        z = PolyFn.monomial((k,), 1, order)
        if c(z) != z.scale(lam_h):
            return False
    return True


# --- evaluated R-matrix -----------------------------------------------------


def binom_operator(x: RepOperator, m: int) -> RepOperator:
    """binom(X, m) = X (X - 1) ... (X - m + 1) / m! as an operator polynomial."""
    out = scalar(1)
    for i in range(m):
        out = out * (x - i)
    return scalar(Fraction(1, factorial(m))) * out


def _swap(f: PolyFn) -> PolyFn:
    return f._like({(e[1], e[0]): v for e, v in f._c.items()})


def r_matrix_double_sum(f: PolyFn, lam=0) -> PolyFn:
    """sum_(m,n) h^(m+n)/n! binom(lam - z0 d0, m) (z0 d1)^n applied to P f.

    Terms with m + n > order vanish, so the sum is finite.
    """
    order = f.order
    h = TruncSeries.hbar(order)
    x = scalar(to_rational(lam)) - mul_z(0) * diff_z(0)
    shift = mul_z(0) * diff_z(1)
    g = _swap(f)
    out = PolyFn.zero(2, order)
    shifted = g
    for n in range(order + 1):
        if not shifted:
            break
        for m in range(order + 1 - n):
            coeff = h ** (m + n) * Fraction(1, factorial(n))
            out = out + binom_operator(x, m)(shifted).scale(coeff)
        shifted = shift(shifted)
    return out


def r_matrix_graded(f: PolyFn, lam=0) -> PolyFn:
    """(1+h)^(lam - z0 d0) applied to f(z1 + h z0, z0), the power acting on
    each z0-degree separately."""
    order = f.order
    h = TruncSeries.hbar(order)
    z0 = PolyFn.monomial((1, 0), 1, order)
    z1 = PolyFn.monomial((0, 1), 1, order)
    moved = _substitute(f, z1 + z0.scale(h), z0)
    lam = to_rational(lam)

    def power(k: int, order: int) -> TruncSeries:
        # (1+h)^(lam - k), generalized binomial series
        return TruncSeries([gen_binom(lam - k, j) for j in range(order + 1)], order)

    return graded(0, power)(moved)


def r_matrix_substitution(f: PolyFn) -> PolyFn:
    """f(U^T z) = f(z1 + (1 - t) z0, t z0) with t = 1/(1+h)."""
    order = f.order
    t = t_to_hbar(LaurentPoly.t(), order)
    z0 = PolyFn.monomial((1, 0), 1, order)
    z1 = PolyFn.monomial((0, 1), 1, order)
    return _substitute(f, z1 + z0.scale(1 - t), z0.scale(t))


def _substitute(f: PolyFn, x0: PolyFn, x1: PolyFn) -> PolyFn:
    out = PolyFn.zero(2, f.order)
    for (p, q), v in f._c.items():
        out = out + (x0 ** p * x1 ** q).scale(v)
    return out


def r_matrix_action_check(p: int, q: int, order: int = DEFAULT_ORDER) -> bool:
    """Double sum, graded exponential and f(U^T z) agree on z0^p z1^q (lambda = 0)."""
    f = PolyFn.monomial((p, q), 1, order)
    target = r_matrix_substitution(f)
    return r_matrix_double_sum(f) == target and r_matrix_graded(f) == target
