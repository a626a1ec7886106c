from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import strategies as st

from gaussknot.braid import BraidWord
from gaussknot.ring import LaurentPoly, TruncSeries

T = LaurentPoly.t()

small_rationals = st.one_of(
    st.integers(-5, 5),
    st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)),
)


@st.composite
def laurent_polys(draw, min_exp=-3, max_exp=3, max_terms=4):
    exps = draw(st.lists(st.integers(min_exp, max_exp), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(small_rationals) for e in exps})


@st.composite
def integer_laurent_polys(draw, min_exp=-2, max_exp=2, max_terms=3):
    exps = draw(st.lists(st.integers(min_exp, max_exp), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(st.integers(-3, 3)) for e in exps})


@st.composite
def series(draw, order=6, unit=False):
    c = draw(st.lists(small_rationals, min_size=order + 1, max_size=order + 1))
    if unit and not c[0]:
        c[0] = 1
    return TruncSeries(c, order)


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_length=12):
    n = draw(st.integers(min_strands, max_strands))
    if n == 1:
        return BraidWord(1, ())
    gens = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return BraidWord(n, tuple(draw(st.lists(gens, max_size=max_length))))


@pytest.fixture
def t():
    return T
