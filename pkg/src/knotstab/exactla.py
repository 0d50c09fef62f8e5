"""Exact dense linear algebra on lists of lists of ints or Fractions."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .errors import DimensionMismatch, ParseError, SingularSystem

Matrix = List[List[int]]


def shape(m: Sequence[Sequence]) -> tuple:
    return len(m), (len(m[0]) if m else 0)


def is_square(m: Sequence[Sequence]) -> bool:
    return all(len(row) == len(m) for row in m)


def transpose(m: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*m)] if m else []


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def delete_row_col(m: Sequence[Sequence], i: int, j: int) -> list:
    """Drop row i and column j (0-based)."""
    return [list(row[:j]) + list(row[j + 1 :]) for k, row in enumerate(m) if k != i]


def leading(m: Sequence[Sequence], k: int) -> list:
    return [list(row[:k]) for row in m[:k]]


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(m)
    if n == 0:
        return 1
    if not is_square(m):
        raise DimensionMismatch("determinant of a non-square matrix")
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            ai = a[i]
            aik = ai[k]
            for j in range(k + 1, n):
                ai[j] = (ai[j] * akk - aik * rowk[j]) // prev
            ai[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def det(m: Sequence[Sequence]) -> Fraction:
    """Determinant over the rationals (clears denominators, then Bareiss)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    den = 1
    rows = []
    for row in m:
        fr = [Fraction(x) for x in row]
        d = 1
        for x in fr:
            d = d * x.denominator // _gcd(d, x.denominator)
        rows.append([int(x * d) for x in fr])
        den *= d
    return Fraction(bareiss_det(rows), den)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def solve(a: Sequence[Sequence], b: Sequence) -> list:
    """Solve a x = b exactly by Gauss-Jordan elimination over Q."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise SingularSystem("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def inverse(a: Sequence[Sequence]) -> list:
    n = len(a)
    cols = [solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return transpose(cols)


def parse_matrix(text: str) -> Matrix:
    """Parse "1,1;0,-1" into [[1, 1], [0, -1]]."""
    body = text.strip()
    if not body:
        raise ParseError("empty matrix", 0)
    rows = []
    pos = 0
    for rtext in body.split(";"):
        row = []
        for tok in rtext.split(","):
            t = tok.strip()
            try:
                row.append(int(t))
            except ValueError:
                raise ParseError(f"bad matrix entry {t!r}", pos) from None
            pos += len(tok) + 1
        rows.append(row)
    if not is_square(rows):
        raise ParseError("matrix is not square", 0)
    return rows


def format_matrix(m: Sequence[Sequence[int]]) -> str:
    return ";".join(",".join(str(x) for x in row) for row in m)


def coupled_sum(a: Sequence[Sequence], b: Sequence[Sequence], alpha: int, beta: int, gamma: int, delta: int, x, y) -> list:
    """A (+) B with entry x at (alpha, n + beta) and y at (n + gamma, delta); indices 1-based."""
    n, m = len(a), len(b)
    out = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        out[i][:n] = list(a[i])
    for i in range(m):
        out[n + i][n:] = list(b[i])
    out[alpha - 1][n + beta - 1] = x
    out[n + gamma - 1][delta - 1] = y
    return out


def coupled_det(a: Sequence[Sequence], b: Sequence[Sequence], alpha: int, beta: int, gamma: int, delta: int, x, y):
    """det of coupled_sum from the blocks alone: det A det B - sign * x y det A_(alpha,delta) det B_(gamma,beta)."""
    sign = (-1) ** (alpha + beta + gamma + delta)
    minor_a = det(delete_row_col(a, alpha - 1, delta - 1)) if len(a) > 1 else 1
    minor_b = det(delete_row_col(b, gamma - 1, beta - 1)) if len(b) > 1 else 1
    return det(a) * det(b) - sign * x * y * minor_a * minor_b
