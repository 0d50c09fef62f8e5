import pytest
from hypothesis import given, strategies as st

from knotstab.errors import NotReciprocal, OddDegree, ParseError, SignConflict, ZeroPolynomial
from knotstab.polyring import (
    IntPoly,
    RatPoly,
    coeff_profile,
    conway_to_modified,
    inverse_modification,
    is_reciprocal,
    modification,
    normalize_alexander,
    poly_gcd,
    squarefree_part,
    trapezoid_index,
)
from oracles import from_sympy, to_sympy

P = IntPoly.from_text

int_coeffs = st.lists(st.integers(-50, 50), min_size=1, max_size=12)


@st.composite
def palindromes(draw, max_half=6, lo=-20, hi=20):
    n = draw(st.integers(0, max_half))
    half = draw(st.lists(st.integers(lo, hi), min_size=n + 1, max_size=n + 1))
    if half[0] == 0:
        half[0] = 1
    return IntPoly(half + half[-2::-1])


# arithmetic and text format


def test_text_is_descending():
    p = P("1,-7,13,-7,1")
    assert p.coeffs == (1, -7, 13, -7, 1)
    assert P("2,0,-1").coeffs == (-1, 0, 2)
    assert P("2,0,-1").pretty() == "2t^2 - 1"


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as e:
        P("1,x,3")
    assert e.value.position == 2
    with pytest.raises(ParseError):
        P("  ")


@given(int_coeffs)
def test_text_round_trip(cs):
    p = IntPoly(cs)
    if p.is_zero():
        return
    assert P(p.to_text()) == p
    assert P(p.to_text()).to_text() == p.to_text()


@given(int_coeffs, int_coeffs)
def test_multiplication_matches_sympy(a, b):
    pa, pb = IntPoly(a), IntPoly(b)
    assert pa * pb == from_sympy(to_sympy(pa) * to_sympy(pb))


@given(int_coeffs, st.lists(st.integers(-9, 9), min_size=2, max_size=5))
def test_divmod_identity(a, b):
    pa, pb = RatPoly(a), RatPoly(b)
    if pb.is_zero():
        return
    q, r = pa.divmod(pb)
    assert q * pb + r == pa
    assert r.is_zero() or r.degree < pb.degree


def test_gcd_and_squarefree():
    f = P("1,-1") ** 3 * P("1,-3,1")
    g = P("1,-1") * P("1,1")
    assert poly_gcd(f, g) == P("1,-1")
    assert squarefree_part(f) == P("1,-1") * P("1,-3,1")


# normalization


def test_normalize_examples():
    assert normalize_alexander(-(P("1,-3,1").shift(3))) == P("1,-3,1")
    assert normalize_alexander(IntPoly([5])) == IntPoly([5])
    assert normalize_alexander({-1: 1, 0: -3, 1: 1}) == P("1,-3,1")


def test_normalize_sign_hint():
    assert normalize_alexander(P("-1,3,-1"), sign_hint=-1) == P("1,-3,1")
    with pytest.raises(SignConflict):
        normalize_alexander(P("-1,3,-1"), sign_hint=1)
    with pytest.raises(ZeroPolynomial):
        normalize_alexander(IntPoly([]))


@given(int_coeffs, st.integers(0, 5), st.sampled_from([1, -1]))
def test_normalize_idempotent(cs, k, s):
    p = IntPoly(cs)
    if p.is_zero():
        return
    n = normalize_alexander(p.shift(k) * s)
    assert normalize_alexander(n) == n
    assert n.lc > 0 and n[0] != 0


# reciprocity and the modification


def test_is_reciprocal_examples():
    assert is_reciprocal(P("1,-7,13,-7,1"))
    assert not is_reciprocal(P("1,-2"))
    assert is_reciprocal(P("1,-3,3,-3,3,-1"))


def test_modification_examples():
    assert modification(P("1,-3,2,-1,2,-3,1")) == P("1,-3,-1,5")
    assert modification(P("1,-3,1")) == P("1,-3")
    assert modification(P("1,0,1")) == P("1,0")
    with pytest.raises(OddDegree):
        modification(P("1,1"))
    with pytest.raises(NotReciprocal):
        modification(P("1,2,3"))


@given(palindromes(), st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=20, max_size=20))
def test_modification_evaluates_back(p, alphas):
    F = modification(p)
    n = p.degree // 2
    for a in alphas:
        if a == 0:
            continue
        assert F(a + 1 / a) * a**n == p(a)


@given(palindromes())
def test_inverse_modification_round_trip(p):
    assert inverse_modification(modification(p)) == p


def test_conway_examples():
    assert conway_to_modified(IntPoly([1, 0, 1])) == P("1,-1")
    assert conway_to_modified(IntPoly([1])) == IntPoly([1])
    assert conway_to_modified(IntPoly([1, 0, -1])) == -P("1,-3")


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_conway_matches_modification(a):
    # a[i] multiplies z^(2i); z^2 = t - 2 + 1/t, so t^n z^(2i) = (t - 1)^(2i) t^(n - i)
    if a[-1] == 0:
        a[-1] = 1
    n = len(a) - 1
    c = IntPoly([x if k % 2 == 0 else 0 for k in range(2 * n + 1) for x in [a[k // 2]]])
    p = IntPoly([])
    for i, ai in enumerate(a):
        p = p + (P("1,-1") ** (2 * i)).shift(n - i) * ai
    assert conway_to_modified(c) == modification(p)


# coefficient profiles


def test_profile_examples():
    prof = coeff_profile(P("1,-3,3,-3,3,-1"))
    assert prof.is_alternating_sign
    # plateau 3,3,3,3 starts right after the first coefficient
    assert prof.is_trapezoidal == 1
    assert not coeff_profile(P("1,-2,1,-2,1")).trapezoidal
    assert coeff_profile(P("1,-7,13,-7,1")).is_strictly_log_concave
    assert not coeff_profile(P("1,2,1,2,1")).is_strictly_log_concave


def test_trapezoid_index_bounds():
    assert trapezoid_index([1, 2, 3, 2, 1]) == 2
    assert trapezoid_index([1, 2, 2, 1]) == 1
    # the plateau must be preceded by a strict rise
    assert trapezoid_index([1, 1]) is None
    assert trapezoid_index([2, 1, 2]) is None


@given(st.lists(st.integers(1, 60), min_size=1, max_size=6), st.booleans())
def test_log_concave_palindrome_is_trapezoidal(half, odd_middle):
    seq = sorted(half)
    full = seq + seq[::-1] if not odd_middle else seq + seq[-2::-1]
    if len(full) < 3:
        return
    p = IntPoly(full)
    prof = coeff_profile(p)
    if prof.is_strictly_log_concave:
        k = prof.is_trapezoidal
        assert k is not None
        assert len(full) - 2 * k <= 2
