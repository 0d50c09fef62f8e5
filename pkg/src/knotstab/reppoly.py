"""Riley polynomials of 2-bridge knots and links, and dihedral representation polynomials.

Parabolic representation: x -> [[1, 1], [0, 1]], y -> [[1, 0], [z, 1]].

Word convention: for r = beta/alpha put beta* = beta^-1 mod alpha and
e_i = (-1)^floor(i beta*/alpha) for i = 1 .. alpha - 1, letters alternating
x, y, x, ...  For a knot (alpha odd) the Riley polynomial is the (1,1) entry
of the image of that word.  For a link (alpha = 2n) the word is palindromic of
odd length 2n - 1, its image has equal diagonal entries, and the Riley
polynomial is the (1,2) entry.  Results are normalized to a positive leading
coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Tuple

from .errors import BadFraction, EvenP, InvariantViolation, SpecViolation
from .polyring import IntPoly
from .stability import count_real_roots, numeric_zeros

Mat = Tuple[IntPoly, IntPoly, IntPoly, IntPoly]  # (a, b, c, d) row-major

ONE = IntPoly([1])
ZERO = IntPoly([])
ZVAR = IntPoly([0, 1])


def _mul(m: Mat, n: Mat) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


GEN = {
    ("x", 1): (ONE, ONE, ZERO, ONE),
    ("x", -1): (ONE, -ONE, ZERO, ONE),
    ("y", 1): (ONE, ZERO, ZVAR, ONE),
    ("y", -1): (ONE, ZERO, -ZVAR, ONE),
}


@dataclass(frozen=True)
class ParabolicWord:
    """x^e1 y^h1 x^e2 ... y^h(n-1) x^en."""

    epsilons: Tuple[int, ...]
    etas: Tuple[int, ...]

    def __post_init__(self):
        eps, eta = tuple(self.epsilons), tuple(self.etas)
        object.__setattr__(self, "epsilons", eps)
        object.__setattr__(self, "etas", eta)
        if len(eps) != len(eta) + 1:
            raise SpecViolation("need one more x-exponent than y-exponents")
        if any(abs(e) != 1 for e in eps + eta):
            raise SpecViolation("exponents must be +/-1")
        if eps != eps[::-1] or eta != eta[::-1]:
            raise SpecViolation("exponent sequences must be palindromic")

    def letters(self) -> List[Tuple[str, int]]:
        out = []
        for i, e in enumerate(self.epsilons):
            out.append(("x", e))
            if i < len(self.etas):
                out.append(("y", self.etas[i]))
        return out


def exponent_sequence(r) -> List[int]:
    r = _check_fraction(r)
    beta, alpha = r.numerator, r.denominator
    bstar = pow(beta, -1, alpha) if alpha > 1 else 0
    return [(-1) ** ((i * bstar) // alpha) for i in range(1, alpha)]


def parabolic_word(r) -> ParabolicWord:
    """The palindromic link word for r = q/2n."""
    r = _check_fraction(r)
    if r.denominator % 2:
        raise BadFraction("link words need an even denominator")
    e = exponent_sequence(r)
    return ParabolicWord(tuple(e[0::2]), tuple(e[1::2]))


def word_image(letters) -> Mat:
    m: Mat = (ONE, ZERO, ZERO, ONE)
    for letter in letters:
        m = _mul(m, GEN[letter])
    return m


def _check_fraction(r) -> Fraction:
    r = Fraction(r)
    if not (0 < r < 1):
        raise BadFraction(f"{r} must lie strictly between 0 and 1")
    return r


def _positive(p: IntPoly) -> IntPoly:
    return -p if p.lc < 0 else p


def riley_theta_word(r) -> IntPoly:
    """Riley polynomial from the matrix word, for any 0 < r < 1."""
    r = _check_fraction(r)
    e = exponent_sequence(r)
    letters = [("x" if i % 2 == 0 else "y", s) for i, s in enumerate(e)]
    if r.denominator % 2:
        return _positive(word_image(letters)[0])
    a, b, _, d = word_image(parabolic_word(r).letters())
    if a != d:
        raise InvariantViolation("link word image is not of equal-diagonal type")
    return _positive(b)


def theta_torus_knot(n: int) -> IntPoly:
    """r = 1/(2n+1): sum C(n+k, 2k) z^k."""
    return IntPoly([comb(n + k, 2 * k) for k in range(n + 1)])


def theta_torus_link(n: int) -> IntPoly:
    """r = 1/2n: sum_{j<n} C(n+j, 2j+1) z^j."""
    return IntPoly([comb(n + j, 2 * j + 1) for j in range(n)])


def riley_theta(r) -> IntPoly:
    r = _check_fraction(r)
    if r.numerator == 1:
        alpha = r.denominator
        return theta_torus_knot(alpha // 2) if alpha % 2 else theta_torus_link(alpha // 2)
    return riley_theta_word(r)


def riley_zero_check(n: int, link: bool = False, tol: float = 1e-10) -> bool:
    """Compare the closed-form zeros -4 sin^2(...) with the torus knot/link polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    if link:
        theta = theta_torus_link(n)
        claimed = [-4 * math.sin(k * math.pi / (2 * n)) ** 2 for k in range(1, n)]
    else:
        theta = theta_torus_knot(n)
        claimed = [-4 * math.sin((2 * k - 1) * math.pi / (2 * (2 * n + 1))) ** 2 for k in range(1, n + 1)]
    if len(claimed) != theta.degree:
        return False
    scale = max(abs(c) for c in theta.coeffs)
    for x in claimed:
        if abs(theta(x)) > tol * scale * max(1.0, abs(x)) ** theta.degree:
            return False
    return True


def dihedral_phi(p: int) -> IntPoly:
    """sum (2n+1)/(2k+1) C(n+k, 2k) z^k for p = 2n + 1."""
    if p < 3 or p % 2 == 0:
        raise EvenP("p must be odd and at least 3")
    n = (p - 1) // 2
    coeffs = []
    for k in range(n + 1):
        num = p * comb(n + k, 2 * k)
        if num % (2 * k + 1):
            raise InvariantViolation(f"non-integral coefficient at k = {k}")
        coeffs.append(num // (2 * k + 1))
    return IntPoly(coeffs)


def dihedral_real_stable(p: int) -> bool:
    """All zeros real and inside (-4, 0), decided by Sturm counts."""
    phi = dihedral_phi(p)
    return count_real_roots(phi, Fraction(-4), Fraction(0)) == phi.degree and phi(0) != 0


def dihedral_zero_error(p: int, seed: int = 0) -> float:
    """Largest distance between computed zeros and 2 cos(2 pi k / p) - 2."""
    phi = dihedral_phi(p)
    n = phi.degree
    claimed = sorted(2 * math.cos(2 * math.pi * k / p) - 2 for k in range(1, n + 1))
    zeros = numeric_zeros(phi, seed=seed)
    got = sorted(z.real for z in zeros)
    imag = max(abs(z.imag) for z in zeros)
    return max([abs(a - b) for a, b in zip(claimed, got)] + [imag])
