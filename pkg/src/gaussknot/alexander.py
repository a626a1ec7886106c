"""Alexander polynomial of a braid closure by two determinantal routes.

``alexander_thm2`` uses the corner minor of the unreduced Burau matrix,
``alexander_reduced`` the reduced Burau matrix with a division by
``(t^n - 1)/(t - 1)``.  They must agree on every knot.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, NotAKnotError, exponent_sum, is_knot_closure
from .burau import block_decompose, reduced_burau
from .ring import LAURENT, LaurentPoly, RingMatrix, laurent_det, laurent_exact_div

__all__ = [
    "ParityError",
    "AlexanderPoly",
    "alexander_thm2",
    "alexander_reduced",
    "lemma2_check",
    "substitute",
    "unreduced_minor_det",
]

T = LaurentPoly.t()


class ParityError(ArithmeticError):
    """A normalising exponent that must be an integer came out half-integral."""


@dataclass(frozen=True)
class AlexanderPoly:
    poly: LaurentPoly

    def at_one(self):
        return self.poly(1)

    def is_symmetric(self) -> bool:
        return self.poly.invert_variable() == self.poly

    def __str__(self) -> str:
        return str(self.poly)

    def to_json(self) -> dict[str, str]:
        return self.poly.to_json()


def _half(k: int, what: str) -> int:
    if k % 2:
        raise ParityError(f"{what} = {k} is odd")
    return k // 2


def _require_knot(beta: BraidWord):
    if not is_knot_closure(beta):
        raise NotAKnotError(beta)


def unreduced_minor_det(beta: BraidWord) -> LaurentPoly:
    """det(I_(n-1) - hat beta_n); 1 on a single strand."""
    n = beta.strands
    if n == 1:
        return LaurentPoly.const(1)
    hat = block_decompose(beta).hat
    return laurent_det(RingMatrix.identity(n - 1, LAURENT) - hat)


def alexander_thm2(beta: BraidWord) -> AlexanderPoly:
    """t^((1-n-g)/2) det(I - hat beta_n)."""
    _require_knot(beta)
    e = _half(1 - beta.strands - exponent_sum(beta), "1 - n - g(beta)")
    return AlexanderPoly(unreduced_minor_det(beta).shift(e))


def alexander_reduced(beta: BraidWord) -> AlexanderPoly:
    """(-1)^(n-1) t^((n-1-g)/2) (t-1)/(t^n-1) det(psi^r - I)."""
    _require_knot(beta)
    n = beta.strands
    if n == 1:
        return AlexanderPoly(LaurentPoly.const(1))
    e = _half(n - 1 - exponent_sum(beta), "n - 1 - g(beta)")
    red = reduced_burau(beta).matrix
    d = laurent_det(red - RingMatrix.identity(n - 1, LAURENT))
    q = laurent_exact_div((T - 1) * d, T ** n - 1)
    sign = -1 if (n - 1) % 2 else 1
    return AlexanderPoly(q.shift(e) * sign)


def lemma2_check(beta: BraidWord) -> bool:
    """(t^-n - 1) det(hat beta - I) == (t^-1 - 1) det(psi^r - I), for any braid."""
    n = beta.strands
    if n < 2:
        raise ValueError("needs at least 2 strands")
    ident = RingMatrix.identity(n - 1, LAURENT)
    lhs = (T ** -n - 1) * laurent_det(block_decompose(beta).hat - ident)
    rhs = (T ** -1 - 1) * laurent_det(reduced_burau(beta).matrix - ident)
    return lhs == rhs


def substitute(p: AlexanderPoly | LaurentPoly, k: int) -> LaurentPoly:
    """t -> t^k."""
    if isinstance(p, AlexanderPoly):
        p = p.poly
    return p.substitute_power(k)
