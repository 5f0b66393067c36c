from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superweight.errors import IndexOutOfRange, NonIntegralWeight, NotDominant, ParseError, ShapeMismatch
from superweight.rootsys import Root
from superweight.weights import (Parity, ShiftedWeight, Weight, c_of, central_shift, central_shift_between,
                                 format_weight, pairing, parse_weight, rho, shift, unshift, weight_json)

W = parse_weight


def root(**kw):
    # root(d1=1, e1=-1) -> delta_1 - eps_1
    return Root({(k[0], int(k[1:])): v for k, v in kw.items()})


def test_rho_examples():
    assert rho(3, 2) == W("(3,2,1|-1,-2)")
    assert rho(0, 0) == W("(|)")
    assert rho(1, 3) == W("(1|-1,-2,-3)")


def test_shift_examples():
    s = shift(W("(0,0|0)"))
    assert (s.a, s.b, s.dominant) == ((2, 1), (1,), True)
    s = shift(W("(0^4|-3)"))
    assert (s.a, s.b, s.dominant) == ((4, 3, 2, 1), (4,), True)
    s = shift(W("(1,2|0)"))
    assert (s.a, s.b, s.dominant) == ((3, 3), (1,), False)


def test_shift_rejects_fractions():
    with pytest.raises(NonIntegralWeight):
        shift(W("(0|1/2)"))


def test_unshift_examples():
    assert unshift(ShiftedWeight((3, 2, 0), (0,))) == W("(0,0,-1|1)")
    assert unshift(ShiftedWeight((2, 1), (1,))) == W("(0,0|0)")
    assert unshift(ShiftedWeight((5, 1), (3,))) == W("(3,0|-2)")
    with pytest.raises(NotDominant):
        unshift(ShiftedWeight((1, 2), ()))


def test_central_shift_examples():
    assert central_shift(W("(0,0|0)"), 1) == W("(1,1|-1)")
    # -1 added on the left and +1 on the right
    assert central_shift(W("(-1,-1|1)"), -1) == W("(-2,-2|2)")
    assert central_shift(W("(|)"), 5) == W("(|)")


def test_central_shift_between_examples():
    assert central_shift_between(W("(0,0|0)"), W("(1,1|-1)")) == 1
    assert central_shift_between(W("(0,0|0)"), W("(1,1|1)")) is None
    assert central_shift_between(W("(0,-1|2)"), W("(2,1|0)")) == 2
    with pytest.raises(ShapeMismatch):
        central_shift_between(W("(0|0)"), W("(0,0|0)"))


def test_pairing_examples():
    assert pairing(W("(1|0)"), root(d1=1, e1=-1)) == 1
    assert pairing(W("(1|-1)"), root(d1=1, e1=-1)) == 0
    with pytest.raises(IndexOutOfRange):
        pairing(W("(1|0)"), root(d2=1, e1=-1))


def test_pairing_slot_identity_reading():
    # delta_2 is the first left coordinate: (0,0|-2) + rho(2,1) = (2,1|-3), so 2 + (-3)
    assert pairing(W("(0,0|-2)") + rho(2, 1), root(d2=1, e1=-1)) == -1


def test_c_of_examples():
    assert c_of(W("(0,0|0)")) == 0
    assert c_of(W("(0^3|-2)")) == -2
    assert c_of(W("(-1,-2|2)")) == -1


def test_literal_grammar():
    w = W("(0^3,-1|1/2)")
    assert w.left == (0, 0, 0, -1) and w.right == (Fraction(1, 2),)
    assert format_weight(w) == "(0,0,0,-1|1/2)"
    assert weight_json(W("(3|-1/2)")) == {"left": ["3/1"], "right": ["-1/2"]}
    for bad in ("0,0|0", "(0|0|0)", "(a|0)", "(1/0|)", "(0.5|0)"):
        with pytest.raises(ParseError):
            W(bad)


def test_no_floats():
    with pytest.raises(TypeError):
        Weight([0.5], [])


def test_parity_arithmetic():
    assert Parity.ODD + Parity.ODD == Parity.EVEN
    assert Parity.EVEN.flip() == Parity.ODD
    assert str(Parity.ODD) == "odd"


marks = st.integers(-10, 10)


@st.composite
def dominant_shifted(draw, max_n=6, max_m=6):
    n = draw(st.integers(0, max_n))
    m = draw(st.integers(0, max_m))
    a = sorted(draw(st.sets(marks, min_size=n, max_size=n)), reverse=True)
    b = sorted(draw(st.sets(marks, min_size=m, max_size=m)))
    return ShiftedWeight(a, b)


@st.composite
def integral_weights(draw, max_n=6, max_m=6):
    n = draw(st.integers(0, max_n))
    m = draw(st.integers(0, max_m))
    return Weight(draw(st.lists(marks, min_size=n, max_size=n)), draw(st.lists(marks, min_size=m, max_size=m)))


@given(dominant_shifted())
def test_shift_unshift_round_trip(s):
    assert shift(unshift(s)) == s


@given(integral_weights())
def test_unshift_shift_round_trip(w):
    s = shift(w)
    if s.dominant:
        assert unshift(s) == w


@given(integral_weights(), st.integers(-5, 5))
def test_shift_moves_marks_under_central_shift(w, c):
    # both mark rows move by +c, so collisions between a and b survive
    s, t = shift(w), shift(central_shift(w, c))
    assert t.a == tuple(x + c for x in s.a)
    assert t.b == tuple(y + c for y in s.b)


@given(integral_weights(), st.fractions(max_denominator=5).filter(lambda q: abs(q) < 20))
def test_c_of_under_central_shift(w, c):
    assert c_of(central_shift(w, c)) == c_of(w) + c * (w.n - w.m)
    back = central_shift_between(w, central_shift(w, c))
    if w.n or w.m:
        assert back == c


@given(integral_weights(max_n=5, max_m=5))
def test_pairing_matches_mark_collision(w):
    s = shift(w)
    n = w.n
    shifted = w + rho(w.n, w.m)
    for i in range(1, n + 1):
        for j in range(1, w.m + 1):
            # the i-th a-mark sits on slot delta_{n+1-i}
            assert pairing(shifted, root(**{f"d{n + 1 - i}": 1, f"e{j}": -1})) == s.a[i - 1] - s.b[j - 1]
