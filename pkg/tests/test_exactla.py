from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from knotstab import exactla
from knotstab.errors import ParseError
from oracles import det_cofactor


@st.composite
def int_matrices(draw, max_n=6, lo=-9, hi=9):
    n = draw(st.integers(1, max_n))
    return [draw(st.lists(st.integers(lo, hi), min_size=n, max_size=n)) for _ in range(n)]


@given(int_matrices())
def test_bareiss_matches_cofactor(m):
    assert exactla.bareiss_det(m) == det_cofactor(m)


@given(int_matrices(max_n=5))
def test_rational_det_matches_sympy(m):
    q = [[Fraction(x, 3) for x in row] for row in m]
    assert exactla.det(q) == Fraction(str(sympy.Matrix(q).det()))


@given(int_matrices(max_n=5), st.lists(st.integers(-9, 9), min_size=5, max_size=5))
def test_solve_and_inverse(m, b):
    if exactla.bareiss_det(m) == 0:
        return
    n = len(m)
    x = exactla.solve(m, b[:n])
    assert exactla.matvec(m, x) == b[:n]
    inv = exactla.inverse(m)
    assert exactla.matmul(m, inv) == exactla.identity(n)


@given(
    int_matrices(max_n=5, lo=-4, hi=4),
    int_matrices(max_n=5, lo=-4, hi=4),
    st.integers(0, 100),
    st.integers(-5, 5),
    st.integers(-5, 5),
)
def test_coupled_det_formula(a, b, pick, x, y):
    n, m = len(a), len(b)
    alpha, delta = pick % n + 1, (pick // 7) % n + 1
    beta, gamma = (pick // 3) % m + 1, (pick // 11) % m + 1
    full = exactla.coupled_sum(a, b, alpha, beta, gamma, delta, x, y)
    assert exactla.coupled_det(a, b, alpha, beta, gamma, delta, x, y) == det_cofactor(full)


def test_parse_and_format():
    m = exactla.parse_matrix("1,1;0,-1")
    assert m == [[1, 1], [0, -1]]
    assert exactla.format_matrix(m) == "1,1;0,-1"
    with pytest.raises(ParseError):
        exactla.parse_matrix("1,2;3")
    with pytest.raises(ParseError) as e:
        exactla.parse_matrix("1,q;0,1")
    assert e.value.position == 2
