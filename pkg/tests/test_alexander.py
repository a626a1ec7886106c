from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussknot.alexander import (
    alexander_reduced,
    alexander_thm2,
    lemma2_check,
    substitute,
)
from gaussknot.braid import BraidWord, NotAKnotError, cable, is_knot_closure, parse_braid
from gaussknot.ring import LaurentPoly

from .conftest import T, braid_words

GOLDEN = json.loads((Path(__file__).parent / "golden" / "known_knots.json").read_text())

TREFOIL = T ** -1 - 1 + T
FIG8 = -(T ** -1) + 3 - T


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden_values_both_routes(name):
    g = GOLDEN[name]
    beta = parse_braid(g["braid"], g["strands"])
    want = LaurentPoly.from_json(g["alexander"])
    assert alexander_thm2(beta).poly == want
    assert alexander_reduced(beta).poly == want


def test_thm2_examples():
    assert alexander_thm2(BraidWord(2, (1,))).poly == 1
    assert alexander_thm2(BraidWord(2, (1, 1, 1))).poly == TREFOIL
    assert alexander_thm2(parse_braid("1 -2 1 -2")).poly == FIG8
    assert alexander_thm2(BraidWord(1, ())).poly == 1


def test_reduced_examples():
    assert alexander_reduced(BraidWord(2, (1,))).poly == 1
    assert alexander_reduced(BraidWord(2, (1, 1, 1))).poly == TREFOIL
    assert alexander_reduced(BraidWord(3, (1, 2, 1, 2))).poly == TREFOIL


def test_torus_knots_closed_form():
    # T(2, k): (t^k + 1)/(t + 1) normalised, i.e. sum_{j} (-1)^j t^(j - (k-1)/2)
    for k in (3, 5, 7, 9):
        want = LaurentPoly({j - (k - 1) // 2: (-1) ** j for j in range(k)})
        assert alexander_thm2(BraidWord(2, (1,) * k)).poly == want


def test_non_knot_rejected():
    with pytest.raises(NotAKnotError):
        alexander_thm2(BraidWord(2, ()))
    with pytest.raises(NotAKnotError):
        alexander_reduced(BraidWord(4, (1, 2)))


def test_lemma2_examples():
    assert lemma2_check(BraidWord(2, (1,)))
    assert lemma2_check(BraidWord(3, ()))


@settings(max_examples=80, deadline=None)
@given(braid_words(max_strands=5, max_length=12))
def test_lemma2_any_braid(w):
    assert lemma2_check(w)


knot_words = braid_words(min_strands=1, max_strands=5, max_length=12).filter(is_knot_closure)


@settings(max_examples=80, deadline=None)
@given(knot_words)
def test_routes_agree_and_normalised(w):
    d = alexander_thm2(w)
    assert d == alexander_reduced(w)
    assert d.at_one() == 1
    assert d.is_symmetric()


@settings(max_examples=50, deadline=None)
@given(knot_words, st.data())
def test_representative_invariance(w, data):
    d = alexander_thm2(w)
    assert alexander_thm2(w.stabilize(1)) == d
    assert alexander_thm2(w.stabilize(-1)) == d
    assert alexander_thm2(w.mirror()) == d
    if w.strands > 1:
        n = w.strands
        alpha = data.draw(braid_words(min_strands=n, max_strands=n, max_length=4))
        assert alexander_thm2(w.conjugate(alpha)) == d


def test_substitute():
    assert substitute(TREFOIL, 2) == T ** -2 - 1 + T ** 2
    assert substitute(FIG8, 1) == FIG8
    assert substitute(LaurentPoly.const(1), 5) == 1


@pytest.mark.parametrize("word, n", [("1 1 1", 2), ("1 -2 1 -2", 3)])
@pytest.mark.parametrize("m", [2, 3])
def test_cabling(word, n, m):
    beta = parse_braid(word, n)
    assert alexander_thm2(cable(beta, m)).poly == substitute(alexander_thm2(beta), m)


def test_cable_trefoil_two():
    assert alexander_thm2(cable(BraidWord(2, (1, 1, 1)), 2)).poly == T ** -2 - 1 + T ** 2
