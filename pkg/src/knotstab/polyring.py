"""Exact univariate polynomials over the integers and the rationals.

Coefficients are stored ascending by exponent (index 0 is the constant
term).  The text format is the reverse: comma-separated integers from the
leading coefficient down, so "1,-7,13,-7,1" is t^4 - 7t^3 + 13t^2 - 7t + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import (
    NotReciprocal,
    OddDegree,
    ParseError,
    SignConflict,
    ZeroPolynomial,
)

Number = Union[int, Fraction]


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _as_int(c) -> int:
    if isinstance(c, int):
        return c
    c = Fraction(c)
    if c.denominator != 1:
        raise ValueError(f"non-integral coefficient {c}")
    return c.numerator


class Poly:
    """Base class; use IntPoly or RatPoly."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim([self._coerce(c) for c in coeffs])

    @staticmethod
    def _coerce(c):
        raise NotImplementedError

    # construction helpers

    @classmethod
    def monomial(cls, k: int, c: Number = 1):
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c: Number):
        return cls([c])

    # basic queries

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # arithmetic

    def _result_type(self, other):
        if isinstance(self, IntPoly) and (
            isinstance(other, IntPoly) or isinstance(other, int)
        ):
            return IntPoly
        return RatPoly

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly([other]) if isinstance(other, Fraction) else IntPoly([other])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        return self._result_type(o)([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._result_type(other)([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._result_type(other)([])
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._result_type(other)(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return type(self)([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, q: "Poly"):
        """Return self(q(t))."""
        acc = type(q)([])
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def shift(self, k: int):
        """Multiply by t^k (k >= 0) or divide by t^-k when that is exact."""
        if k >= 0:
            return type(self)([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise ValueError("division by a power of t is not exact")
        return type(self)(self.coeffs[-k:])

    def reverse(self):
        """t^deg * p(1/t)."""
        return type(self)(reversed(self.coeffs))

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term (multiplicity of the root 0)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroPolynomial("zero polynomial has no lowest term")

    def scale_var(self, s: Number):
        """p(s*t)."""
        out, pw = [], 1
        for c in self.coeffs:
            out.append(c * pw)
            pw *= s
        return self._result_type(s)(out)

    def divmod(self, d: "Poly"):
        """Division over the rationals; returns (quotient, remainder) as RatPoly."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = [Fraction(c) for c in self.coeffs]
        dc = [Fraction(c) for c in d.coeffs]
        dl = dc[-1]
        q = [Fraction(0)] * max(len(r) - len(dc) + 1, 0)
        for k in range(len(r) - len(dc), -1, -1):
            c = r[k + len(dc) - 1] / dl
            q[k] = c
            if c:
                for j, y in enumerate(dc):
                    r[k + j] -= c * y
        return RatPoly(q), RatPoly(r[: len(dc) - 1])

    def __floordiv__(self, d):
        return self.divmod(d)[0]

    def __mod__(self, d):
        return self.divmod(d)[1]

    def exact_div(self, d: "Poly"):
        """Quotient of an exact division; keeps IntPoly when possible."""
        q, r = self.divmod(d)
        if not r.is_zero():
            raise ValueError("division is not exact")
        if isinstance(self, IntPoly) and all(c.denominator == 1 for c in q.coeffs):
            return IntPoly(q.coeffs)
        return q

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero()

    # display

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return ",".join(str(c) for c in reversed(self.coeffs))

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = -c if c < 0 else c
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}{mono}" if isinstance(a, int) else f"({a}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"{type(self).__name__}([{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        return self.pretty()


class IntPoly(Poly):
    """Dense polynomial with exact integer coefficients."""

    __slots__ = ()

    _coerce = staticmethod(_as_int)

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse "1,-7,13,-7,1" (descending exponents)."""
        body = text.strip()
        if not body:
            raise ParseError("empty polynomial", 0)
        coeffs = []
        pos = 0
        for tok in body.split(","):
            t = tok.strip()
            try:
                coeffs.append(int(t))
            except ValueError:
                raise ParseError(f"bad coefficient {t!r}", pos) from None
            pos += len(tok) + 1
        return cls(reversed(coeffs))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide by the content and make the leading coefficient positive."""
        if self.is_zero():
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def eval_sign_at(self, x: Fraction) -> int:
        """Sign of p(x) for rational x, in integer arithmetic."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        d = self.degree
        acc = 0
        pw = 1
        # q^d p(num/q) = sum c_i num^i q^(d-i); evaluate by Horner in num/q
        for c in reversed(self.coeffs):
            acc = acc * num + c * pw
            pw *= den
        return (acc > 0) - (acc < 0)


class RatPoly(Poly):
    """Dense polynomial with exact rational coefficients."""

    __slots__ = ()

    _coerce = staticmethod(Fraction)

    def monic(self) -> "RatPoly":
        if self.is_zero():
            return self
        return self * Fraction(1, self.lc)

    def to_int_primitive(self) -> IntPoly:
        """Clear denominators; result is primitive with positive leading term."""
        if self.is_zero():
            return IntPoly([])
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return IntPoly([c * den for c in self.coeffs]).primitive()


def as_intpoly(p) -> IntPoly:
    if isinstance(p, IntPoly):
        return p
    if isinstance(p, RatPoly):
        return p.to_int_primitive()
    return IntPoly(p)


def T() -> IntPoly:
    """The indeterminate t."""
    return IntPoly([0, 1])


# gcd and friends


def pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """prem(a, b) = lc(b)^(deg a - deg b + 1) a mod b, in integer arithmetic."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by zero")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lc
    e = len(r) - db
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b.coeffs):
            r[shift + j] -= c * y
        r.pop()
        e -= 1
        while r and r[-1] == 0:
            r.pop()
    # scale so that the total factor is exactly lc^(deg a - deg b + 1)
    if e > 0:
        r = [x * lb**e for x in r]
    return IntPoly(r)


def poly_gcd(a: Poly, b: Poly) -> IntPoly:
    """Primitive gcd over Q, returned as an integer polynomial with positive lc."""
    x, y = as_intpoly(a), as_intpoly(b)
    x = x.primitive() if not x.is_zero() else x
    y = y.primitive() if not y.is_zero() else y
    while not y.is_zero():
        r = pseudo_remainder(x, y)
        x, y = y, (r.primitive() if not r.is_zero() else r)
    return x.primitive() if not x.is_zero() else x


def squarefree_part(p: Poly) -> IntPoly:
    q = as_intpoly(p)
    g = poly_gcd(q, q.derivative())
    return as_intpoly(q.exact_div(g)).primitive()


# Alexander-polynomial normalizations


def normalize_alexander(
    p: Union[Poly, Mapping[int, int], Sequence[int]], sign_hint: Optional[int] = None
) -> IntPoly:
    """Return +/- t^k p with positive leading coefficient and nonzero constant term.

    ``p`` may be an IntPoly or a Laurent polynomial given as {exponent: coeff}.
    When ``sign_hint`` is supplied it is multiplied in first, and the result
    must already have a positive leading coefficient.
    """
    if isinstance(p, Mapping):
        items = {e: c for e, c in p.items() if c}
        if not items:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lo = min(items)
        hi = max(items)
        q = IntPoly([items.get(lo + i, 0) for i in range(hi - lo + 1)])
    else:
        q = as_intpoly(p) if isinstance(p, Poly) else IntPoly(p)
    if q.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    q = q.shift(-q.low_order())
    if sign_hint is not None:
        if sign_hint not in (1, -1):
            raise ValueError("sign_hint must be +1 or -1")
        q = q * sign_hint
        if q.lc < 0:
            raise SignConflict("sign hint disagrees with the leading coefficient")
    if q.lc < 0:
        q = -q
    return q


def is_reciprocal(p: Poly) -> bool:
    """True when the coefficient list reads the same reversed, up to an overall sign."""
    if p.is_zero():
        raise ZeroPolynomial("reciprocity of the zero polynomial")
    c = p.coeffs
    r = c[::-1]
    return c == r or c == tuple(-x for x in r)


def is_palindromic(p: Poly) -> bool:
    return not p.is_zero() and p.coeffs == p.coeffs[::-1]


def chebyshev_like(n: int) -> list:
    """Polynomials P_k(x) with t^k + t^-k = P_k(t + 1/t), k = 0..n."""
    ps = [IntPoly([2]), IntPoly([0, 1])]
    x = IntPoly([0, 1])
    for k in range(2, n + 1):
        ps.append(x * ps[k - 1] - ps[k - 2])
    return ps[: n + 1]


def modification(p: Poly) -> Poly:
    """F with t^-n p(t) = F(t + 1/t) for palindromic p of degree 2n."""
    if p.is_zero():
        raise ZeroPolynomial("modification of zero")
    if p.degree % 2:
        raise OddDegree(f"degree {p.degree} is odd")
    if p.coeffs != p.coeffs[::-1]:
        raise NotReciprocal("coefficients are not palindromic")
    n = p.degree // 2
    basis = chebyshev_like(n)
    F = type(p)([p[n]])
    for k in range(1, n + 1):
        F = F + basis[k] * p[n + k]
    return F


def inverse_modification(F: Poly) -> Poly:
    """The palindromic p of degree 2 deg F with t^-n p = F(t + 1/t)."""
    n = F.degree
    # (t^2 + 1)^k t^(n-k) expands x^k
    out = type(F)([])
    t2p1 = IntPoly([1, 0, 1])
    for k, c in enumerate(F.coeffs):
        if c:
            out = out + (t2p1**k).shift(n - k) * c
    return out


def conway_to_modified(c: Poly) -> Poly:
    """Sum a_i (x-2)^(n-i) for an even Conway polynomial sum a_i z^(2n-2i).

    Substituting z^2 = x - 2 (z^2 = t - 2 + 1/t) turns the Conway polynomial
    into the modification of the matching Alexander polynomial.
    """
    if any(c[k] for k in range(1, len(c.coeffs), 2)):
        raise ValueError("Conway polynomial must be even in z")
    xm2 = IntPoly([-2, 1])
    out = type(c)([])
    for k in range(0, len(c.coeffs), 2):
        if c[k]:
            out = out + (xm2 ** (k // 2)) * c[k]
    return out


@dataclass(frozen=True)
class CoeffProfile:
    is_alternating_sign: bool
    is_trapezoidal: Optional[int]
    is_strictly_log_concave: bool

    @property
    def trapezoidal(self) -> bool:
        return self.is_trapezoidal is not None


def trapezoid_index(seq: Sequence[int]) -> Optional[int]:
    """Plateau index k with c_0 < ... < c_k = ... = c_{d-k} > ... > c_d, or None."""
    d = len(seq) - 1
    if d < 1 or any(c <= 0 for c in seq):
        return None
    for k in range(1, (d + 1) // 2 + 1):
        hi = d - k
        if hi < k:
            continue
        ok = all(seq[i] < seq[i + 1] for i in range(k))
        ok = ok and all(seq[i] == seq[k] for i in range(k, hi + 1))
        ok = ok and all(seq[i] > seq[i + 1] for i in range(hi, d))
        if ok:
            return k
    return None


def coeff_profile(p: Poly) -> CoeffProfile:
    if p.is_zero():
        raise ZeroPolynomial("profile of zero")
    c = list(reversed(p.coeffs))
    alternating = all(x != 0 for x in c) and all(
        (c[i] > 0) != (c[i + 1] > 0) for i in range(len(c) - 1)
    )
    a = [abs(x) for x in c]
    strict_lc = all(x > 0 for x in a) and all(
        a[j - 1] * a[j + 1] < a[j] * a[j] for j in range(1, len(a) - 1)
    )
    return CoeffProfile(alternating, trapezoid_index(a), strict_lc)
