from __future__ import annotations

import json
from itertools import permutations
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussknot.braid import BraidWord, is_knot_closure, parse_braid
from gaussknot.ring import (
    RingMatrix,
    SeriesRing,
    TruncSeries,
    permutation_det,
    series_inverse,
    t_to_hbar,
)
from gaussknot.rt import (
    GaussianState,
    SingularContractionError,
    contract_all,
    crossing_kernel,
    evaluate_long_knot,
    gaussian_contract,
    long_knot_form_entry,
    negative_cup_state,
    positive_cup_state,
    prefactor_oracle,
    scalar_product_state,
    schur_identity_check,
    theorem1_check,
    universal_invariant,
    writhe_correction,
)

from .conftest import T, braid_words, small_rationals

N = 8


def S(*c, order=N):
    return TruncSeries(list(c), order)


def test_crossing_kernels_are_inverse():
    for order in range(0, 7):
        prod = crossing_kernel(1, order) @ crossing_kernel(-1, order)
        assert prod == RingMatrix.identity(2, SeriesRing(order))
    neg = crossing_kernel(-1, 4)
    # U^-1 = [[0, 1], [1/t, 1 - 1/t]] and 1/t = 1 + h
    assert neg == RingMatrix([[0, 1], [S(1, 1, order=4), S(0, -1, order=4)]], SeriesRing(4))
    with pytest.raises(ValueError):
        crossing_kernel(0)


def test_scalar_product_contraction():
    st_ = gaussian_contract(scalar_product_state(N), "z")
    assert st_.prefactor == 1
    assert st_.open_slots == ("ext",)
    assert st_.entry("ext", "ext") == 1


def test_positive_cup():
    st_ = gaussian_contract(positive_cup_state(N), "u")
    assert st_.prefactor == 1
    assert st_.form[0, 0] == 1


def test_negative_cup():
    st_ = gaussian_contract(negative_cup_state(N), "u")
    # W = 1 - (1 - 1/t) = 1/t, so the prefactor is t
    assert st_.prefactor == t_to_hbar(T, N)
    assert st_.prefactor.coeffs[:3] == (1, -1, 1)
    assert st_.form[0, 0] == 1


def test_evaluate_long_knot_examples():
    st_ = evaluate_long_knot(BraidWord(2, (1,)), N)
    assert st_.prefactor == S(1, 1)
    assert st_.open_slots == (2,)
    assert evaluate_long_knot(BraidWord(1, ()), N).prefactor == 1
    tref = BraidWord(2, (1, 1, 1))
    assert evaluate_long_knot(tref, N).prefactor == prefactor_oracle(tref, N)


def test_schur_examples():
    assert schur_identity_check(BraidWord(2, (1,)))
    assert schur_identity_check(BraidWord(2, (1, 1, 1)))
    assert schur_identity_check(parse_braid("1 -2 1 -2"))
    with pytest.raises(ValueError):
        schur_identity_check(BraidWord(1, ()))


@settings(max_examples=60, deadline=None)
@given(braid_words(max_strands=5, max_length=12))
def test_schur_any_braid(w):
    assert schur_identity_check(w)


def test_writhe_correction_examples():
    assert writhe_correction(BraidWord(2, (1,)), N) == t_to_hbar(T, N)
    assert writhe_correction(BraidWord(2, (1, 1, 1)), N) == t_to_hbar(T ** 2, N)
    assert writhe_correction(BraidWord(2, (-1,)), N) == 1


def test_trefoil_invariant_closed_form():
    # 1/Delta(1+h) = (1 - h^2)/(1 - h^3)
    want = S(1, 0, -1) * series_inverse(S(1, 0, 0, -1))
    assert universal_invariant(BraidWord(2, (1, 1, 1)), N).series == want
    assert universal_invariant(BraidWord(2, (1, 1, 1)), 4).coeffs == (1, 0, -1, 1, 0)
    assert universal_invariant(BraidWord(3, (1, 2, 1, 2)), N).series == want


def test_figure_eight_invariant_closed_form():
    # 1/Delta(1+h) = (1 + h)/(1 + h - h^2): signed Fibonacci numbers
    want = S(1, 1) * series_inverse(S(1, 1, -1))
    z = universal_invariant(parse_braid("1 -2 1 -2"), N)
    assert z.series == want
    assert z.coeffs[2] == 1
    assert z.coeffs == (1, 0, 1, -1, 2, -3, 5, -8, 13)


def test_unknot_invariant():
    for w in (BraidWord(1, ()), BraidWord(2, (1,)), BraidWord(2, (-1,)), BraidWord(3, (1, -2))):
        assert universal_invariant(w, N).series == 1


@pytest.mark.parametrize("name", ["unknot", "trefoil", "trefoil-b3", "figure-eight"])
def test_golden_invariants(name):
    golden = json.loads((Path(__file__).parent / "golden" / "known_knots.json").read_text())[name]
    beta = parse_braid(golden["braid"], golden["strands"])
    assert universal_invariant(beta, N).series == TruncSeries.from_json(golden["invariant_order8"])


def test_invariant_json():
    assert universal_invariant(BraidWord(2, (1, 1, 1)), 4).to_json() == {
        "order": 4,
        "coeffs": ["1", "0", "-1", "1", "0"],
    }


knot_words = braid_words(min_strands=1, max_strands=5, max_length=12).filter(is_knot_closure)


@settings(max_examples=60, deadline=None)
@given(knot_words)
def test_invariant_is_inverse_alexander(w):
    assert theorem1_check(w, N)
    assert long_knot_form_entry(w, N) == 1
    assert evaluate_long_knot(w, N).prefactor == prefactor_oracle(w, N)


@settings(max_examples=30, deadline=None)
@given(knot_words)
def test_markov_moves_preserve_invariant(w):
    z = universal_invariant(w, 6).series
    assert universal_invariant(w.stabilize(1), 6).series == z
    assert universal_invariant(w.stabilize(-1), 6).series == z
    assert universal_invariant(w.mirror(), 6).series == z


# --- generic Gaussian states ------------------------------------------------


@st.composite
def small_states(draw, order=4):
    k = draw(st.integers(2, 4))
    ring = SeriesRing(order)

    def entry():
        # vanishing constant term keeps every pivot a unit
        return TruncSeries([0] + draw(st.lists(small_rationals, min_size=order, max_size=order)), order)

    m = RingMatrix([[entry() for _ in range(k)] for _ in range(k)], ring)
    return GaussianState(TruncSeries.const(1, order), m, tuple(range(k)))


@settings(max_examples=100, deadline=None)
@given(small_states(), st.randoms(use_true_random=False))
def test_contraction_order_independent(state, rnd):
    slots = list(state.open_slots)
    keep = slots[-1]
    inner = slots[:-1]
    a = contract_all(state, inner)
    shuffled = inner[:]
    rnd.shuffle(shuffled)
    b = contract_all(state, shuffled)
    assert a.prefactor == b.prefactor
    assert a.form == b.form
    assert a.open_slots == b.open_slots == (keep,)


@settings(max_examples=30, deadline=None)
@given(small_states())
def test_full_contraction_is_inverse_determinant(state):
    k = len(state.open_slots)
    ident = RingMatrix.identity(k, state.form.ring)
    det = permutation_det(ident - state.form)
    for order in permutations(state.open_slots):
        assert contract_all(state, order).prefactor == series_inverse(det)


def test_singular_contraction():
    ring = SeriesRing(3)
    m = RingMatrix([[S(1, 2, order=3), 0], [0, 0]], ring)
    st_ = GaussianState(TruncSeries.const(1, 3), m, ("a", "b"))
    with pytest.raises(SingularContractionError):
        gaussian_contract(st_, "a")


def test_state_validation():
    ring = SeriesRing(2)
    with pytest.raises(ValueError):
        GaussianState(TruncSeries.const(1, 2), RingMatrix.identity(2, ring), ("a",))
    with pytest.raises(ValueError):
        GaussianState(TruncSeries.const(1, 2), RingMatrix.identity(2, ring), ("a", "a"))
