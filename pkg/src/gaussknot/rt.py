"""Gaussian-kernel evaluation of long-knot diagrams.

Every kernel met here has the shape ``prefactor * exp(w^* M v)`` where row
index i of ``M`` pairs with the outgoing (conjugated) variable of slot i and
column index j with the incoming variable of slot j.  Closing a slot
identifies its two variables and integrates them out with the closed-form
Gaussian integral

    int exp(v^* z + z^* u + z^* M z) dmu(z) = exp(v^* W^-1 u) / det W,  W = 1 - M,

applied one slot at a time.  Nothing is integrated numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .alexander import ParityError, alexander_thm2, unreduced_minor_det
from .braid import BraidWord, NotAKnotError, exponent_sum, is_knot_closure
from .burau import U_INVERSE, U_MATRIX, block_decompose, psi_unreduced
from .ring import (
    DEFAULT_ORDER,
    LAURENT,
    LaurentPoly,
    NonInvertibleError,
    RingMatrix,
    SeriesRing,
    TruncSeries,
    laurent_adjugate,
    laurent_det,
    series_inverse,
    t_to_hbar,
)

__all__ = [
    "SingularContractionError",
    "GaussianState",
    "InvariantSeries",
    "crossing_kernel",
    "gaussian_contract",
    "contract_all",
    "evaluate_long_knot",
    "schur_identity_check",
    "writhe_correction",
    "universal_invariant",
    "alexander_at_a",
    "theorem1_check",
    "long_knot_form_entry",
    "prefactor_oracle",
    "positive_cup_state",
    "negative_cup_state",
    "scalar_product_state",
]


class SingularContractionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class GaussianState:
    prefactor: TruncSeries
    form: RingMatrix
    open_slots: tuple[Hashable, ...]

    def __post_init__(self):
        object.__setattr__(self, "open_slots", tuple(self.open_slots))
        k = len(self.open_slots)
        if self.form.shape != (k, k):
            raise ValueError(f"form is {self.form.shape}, expected {k}x{k}")
        if len(set(self.open_slots)) != k:
            raise ValueError("duplicate slot identifiers")

    @property
    def order(self) -> int:
        return self.prefactor.order

    def entry(self, out_slot, in_slot) -> TruncSeries:
        idx = self.open_slots.index
        return self.form[idx(out_slot), idx(in_slot)]

    def reorder(self, slots: Sequence[Hashable]) -> GaussianState:
        perm = [self.open_slots.index(s) for s in slots]
        return GaussianState(self.prefactor, self.form.submatrix(perm, perm), tuple(slots))


@dataclass(frozen=True)
class InvariantSeries:
    order: int
    series: TruncSeries

    @property
    def coeffs(self) -> tuple:
        return self.series.coeffs

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": self.series.to_json()}


def crossing_kernel(sign: int, order: int = DEFAULT_ORDER) -> RingMatrix:
    """U (positive crossing) or U^-1 (negative) as series in h."""
    if sign not in (1, -1):
        raise ValueError(f"crossing sign must be +1 or -1, got {sign}")
    return (U_MATRIX if sign > 0 else U_INVERSE).to_series(order)


def gaussian_contract(state: GaussianState, slot: Hashable) -> GaussianState:
    """Integrate out one slot by a one-variable Schur complement."""
    k = state.open_slots.index(slot)
    m = state.form
    w = 1 - m[k, k]
    try:
        w_inv = series_inverse(w)
    except NonInvertibleError:
        raise SingularContractionError(
            f"slot {slot!r}: 1 - M[slot, slot] = {w} is not a unit"
        ) from None
    keep = [i for i in range(m.rows) if i != k]
    col = [m[i, k] * w_inv for i in keep]
    row = [m[k, j] for j in keep]
    new = [
        [m[i, j] + ci * rj if ci and rj else m[i, j] for j, rj in zip(keep, row)]
        for i, ci in zip(keep, col)
    ]
    return GaussianState(
        state.prefactor * w_inv,
        RingMatrix(new, m.ring, cols=len(keep)),
        tuple(s for s in state.open_slots if s != slot),
    )


def contract_all(state: GaussianState, slots: Sequence[Hashable]) -> GaussianState:
    for s in slots:
        state = gaussian_contract(state, s)
    return state


def _state(matrix: RingMatrix, slots, order: int) -> GaussianState:
    return GaussianState(TruncSeries.const(1, order), matrix, tuple(slots))


def scalar_product_state(order: int = DEFAULT_ORDER) -> GaussianState:
    """exp(vbar z + zbar u): slot "ext" carries (vbar, u), slot "z" is internal."""
    m = RingMatrix([[0, 1], [1, 0]], SeriesRing(order))
    return _state(m, ("ext", "z"), order)


def positive_cup_state(order: int = DEFAULT_ORDER) -> GaussianState:
    """<phi_(w,u)| r |phi_(v,u)>: slot "ext" is (wbar, v), slot "u" closes."""
    return _state(crossing_kernel(1, order), ("ext", "u"), order)


def negative_cup_state(order: int = DEFAULT_ORDER) -> GaussianState:
    """<phi_(w,u)| r^-1 |phi_(v,u)>."""
    return _state(crossing_kernel(-1, order), ("ext", "u"), order)


def _require_knot(beta: BraidWord):
    if not is_knot_closure(beta):
        raise NotAKnotError(beta)


def evaluate_long_knot(beta: BraidWord, order: int = DEFAULT_ORDER) -> GaussianState:
    """Burau kernel of the braid with strands 1..n-1 closed; strand n stays open."""
    _require_knot(beta)
    n = beta.strands
    kernel = psi_unreduced(beta).to_series(order)
    state = _state(kernel, range(1, n + 1), order)
    return contract_all(state, range(1, n))


def schur_identity_check(beta: BraidWord) -> bool:
    """c adj(I - hat) b == (1 - d) det(I - hat), exactly over Q[t, 1/t]."""
    n = beta.strands
    if n < 2:
        raise ValueError("needs at least 2 strands")
    blk = block_decompose(beta)
    w = RingMatrix.identity(n - 1, LAURENT) - blk.hat
    adj = laurent_adjugate(w)
    lhs = LaurentPoly()
    for i, ci in enumerate(blk.c_row):
        if not ci:
            continue
        for j, bj in enumerate(blk.b_col):
            if bj and adj[i, j]:
                lhs = lhs + ci * adj[i, j] * bj
    return lhs == (1 - blk.d) * laurent_det(w)


def _writhe_exponent(beta: BraidWord) -> int:
    g = exponent_sum(beta) + beta.strands - 1
    if g % 2:
        raise ParityError(f"writhe g(beta) + n - 1 = {g} is odd")
    return g // 2


def writhe_correction(beta: BraidWord, order: int = DEFAULT_ORDER) -> TruncSeries:
    """Series of t^((g(beta) + n - 1)/2)."""
    return t_to_hbar(LaurentPoly.monomial(_writhe_exponent(beta)), order)


def universal_invariant(beta: BraidWord, order: int = DEFAULT_ORDER) -> InvariantSeries:
    """Scalar value of the universal invariant of the closure, in h = a - 1."""
    state = evaluate_long_knot(beta, order)
    return InvariantSeries(order, writhe_correction(beta, order) * state.prefactor)


def alexander_at_a(p: LaurentPoly, order: int = DEFAULT_ORDER) -> TruncSeries:
    """p(a) with a = 1 + h.  Since t = 1/(1+h) this is p(1/t) expanded in h."""
    return t_to_hbar(p.invert_variable(), order)


def theorem1_check(beta: BraidWord, order: int = DEFAULT_ORDER) -> bool:
    """Universal invariant == 1 / Delta(a) modulo h^(order+1)."""
    z = universal_invariant(beta, order).series
    delta = alexander_thm2(beta).poly
    return z == series_inverse(alexander_at_a(delta, order))


def long_knot_form_entry(beta: BraidWord, order: int = DEFAULT_ORDER) -> TruncSeries:
    """d + c (I - hat)^-1 b of the open strand; equals 1 for every knot."""
    st = evaluate_long_knot(beta, order)
    return st.form[0, 0]


def prefactor_oracle(beta: BraidWord, order: int = DEFAULT_ORDER) -> TruncSeries:
    """1 / det(I - hat) computed over the Laurent ring first."""
    return series_inverse(t_to_hbar(unreduced_minor_det(beta), order))
