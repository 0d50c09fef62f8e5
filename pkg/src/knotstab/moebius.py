"""The transform f -> f* whose zeros are the images of the zeros of f under
phi(z) = (1 - z i)/(z - i).

For a palindromic f of degree 2n, write f = c_0 prod (t^2 - A_j t + 1) and let
X_k be the elementary symmetric functions of the A_j.  Then
f* = c_0 prod (A_j (t^2 + 1) - 4t).  The coefficients are obtained by integer
triangular matrices acting on the even- and odd-indexed coefficients of f.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List

from . import exactla
from .errors import InvariantViolation, NotReciprocal, PoleAtI, RootAtZeroOrI, ZeroPolynomial
from .polyring import IntPoly, as_intpoly, is_palindromic, modification


def phi_map(z: complex) -> complex:
    z = complex(z)
    if z == 1j:
        raise PoleAtI("phi has a pole at i")
    return (1 - z * 1j) / (z - 1j)


def _lower(size: int, entry) -> List[List[int]]:
    return [[entry(k, i) if i <= k else 0 for i in range(size)] for k in range(size)]


def _diag(values) -> List[List[int]]:
    vals = list(values)
    return [[vals[i] if i == j else 0 for j in range(len(vals))] for i in range(len(vals))]


def _mirror(size: int) -> List[List[int]]:
    return [[int(i + j == size - 1) for j in range(size)] for i in range(size)]


@dataclass(frozen=True)
class StarPipeline:
    n: int
    M: List[List[int]]
    N: List[List[int]]
    P: List[List[int]]
    Phat: List[List[int]]
    Q: List[List[int]]
    even_map: List[List[int]]
    odd_map: List[List[int]]


def star_pipeline(n: int) -> StarPipeline:
    """Matrices for half-degree n.

    Even n = 2m: (a_0, a_2, ...) = M P Q M^-1 (c_0, c_2, ...),
                 (a_1, a_3, ...) = N Phat Q N^-1 (c_1, c_3, ...).
    Odd n = 2m+1: (a_0, a_2, ...) = -M P Q N^-1 (c_1, c_3, ...),
                  (a_1, a_3, ...) = -N Phat Q M^-1 (c_0, c_2, ...).
    """
    if n < 1:
        raise ValueError("half-degree must be positive")
    m = n // 2
    M = _lower(m + 1, lambda k, i: comb(n - 2 * i, k - i))
    if n % 2 == 0:
        N = _lower(m, lambda k, i: comb(n - 2 * i - 1, k - i))
        size_p, size_ph = m + 1, m
    else:
        N = _lower(m + 1, lambda k, i: comb(n - 2 * i - 1, k - i))
        size_p, size_ph = m + 1, m + 1
    P = _diag(16**i for i in range(size_p))
    Phat = _diag(4 * 16**i for i in range(size_ph))
    Minv, Ninv = _int_inverse(M), _int_inverse(N)
    mul = exactla.matmul
    if n % 2 == 0:
        even_map = mul(mul(mul(M, P), _mirror(size_p)), Minv)
        odd_map = mul(mul(mul(N, Phat), _mirror(size_ph)), Ninv) if size_ph else []
        Q = _mirror(size_p)
    else:
        even_map = [[-x for x in row] for row in mul(mul(mul(M, P), _mirror(size_p)), Ninv)]
        odd_map = [[-x for x in row] for row in mul(mul(mul(N, Phat), _mirror(size_ph)), Minv)]
        Q = _mirror(size_p)
    return StarPipeline(n, M, N, P, Phat, Q, even_map, odd_map)


def _int_inverse(m: List[List[int]]) -> List[List[int]]:
    if not m:
        return []
    if exactla.bareiss_det(m) != 1:
        raise InvariantViolation("triangular factor does not have determinant 1")
    return [[int(x) for x in row] for row in exactla.inverse(m)]


def _check_input(f: IntPoly) -> IntPoly:
    if f.is_zero():
        raise ZeroPolynomial("transform of zero")
    if f[0] == 0:
        raise RootAtZeroOrI("f(0) = 0")
    if f.degree % 2 or not is_palindromic(f if f.lc > 0 else -f):
        raise NotReciprocal("input must be palindromic of even degree")
    re = sum(c * (-1) ** (k // 2) for k, c in enumerate(f.coeffs) if k % 2 == 0)
    im = sum(c * (-1) ** (k // 2) for k, c in enumerate(f.coeffs) if k % 2 == 1)
    if re == 0 and im == 0:
        raise RootAtZeroOrI("f(i) = 0")
    return f if f.lc > 0 else -f


def star_transform_raw(f) -> IntPoly:
    """f* with the sign produced by the matrix pipeline (input scaled to positive lc)."""
    f = _check_input(as_intpoly(f))
    n = f.degree // 2
    # c_j is the coefficient of t^(2n - j)
    c = list(reversed(f.coeffs))
    pipe = star_pipeline(n)
    evens = c[0 : n + 1 : 2]
    odds = c[1 : n + 1 : 2]
    if n % 2 == 0:
        a_even = exactla.matvec(pipe.even_map, evens)
        a_odd = exactla.matvec(pipe.odd_map, odds) if odds else []
    else:
        a_even = exactla.matvec(pipe.even_map, odds)
        a_odd = exactla.matvec(pipe.odd_map, evens)
    a = [0] * (2 * n + 1)
    a[0 : n + 1 : 2] = a_even
    a[1 : n + 1 : 2] = a_odd
    for j in range(n + 1, 2 * n + 1):
        a[j] = a[2 * n - j]
    out = IntPoly(reversed(a))
    if not is_palindromic(out if out.lc > 0 else -out):
        raise InvariantViolation("transform output is not reciprocal")
    return out


def star_transform_closed(f) -> IntPoly:
    """Second route: c_0 sum_k X_k (t^2 + 1)^k (-4t)^(n-k), X_k read off the modification."""
    f = _check_input(as_intpoly(f))
    n = f.degree // 2
    F = as_intpoly(modification(f))  # c_0 prod (x - A_j)
    out = IntPoly([])
    t2p1 = IntPoly([1, 0, 1])
    m4t = IntPoly([0, -4])
    for k in range(n + 1):
        # c_0 X_k = (-1)^k [x^(n-k)] F
        ck = (-1) ** k * F[n - k]
        if ck:
            out = out + t2p1**k * m4t ** (n - k) * ck
    return out


def star_transform(f) -> IntPoly:
    """f* normalized to a positive leading coefficient."""
    raw = star_transform_raw(f)
    return raw if raw.lc > 0 else -raw
