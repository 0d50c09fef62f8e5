"""Even continued fractions and the closed-form / recursive polynomial families.

A continued fraction is written with full entries, "[2,-2,-8,2]", and stored
as half-entries [1, -1, -4, 1].  Its value is
r = 1/(2a_1 - 1/(2a_2 - ... - 1/(2a_m))).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    BadDimensions,
    BadFraction,
    EmptyCF,
    InvariantViolation,
    NotExpandable,
    OddDenominator,
    ParityViolation,
    ParseError,
    SpecViolation,
    ZeroEntry,
    ZeroK,
)
from .polyring import IntPoly, as_intpoly, normalize_alexander
from .seifert import SplitSpec, alexander_poly, seifert_2bridge, seifert_split, xn_coupling
from .stability import isolate_real_roots

# continued fractions


@dataclass(frozen=True)
class EvenCF:
    half_entries: Tuple[int, ...]

    def __post_init__(self):
        half = tuple(int(a) for a in self.half_entries)
        object.__setattr__(self, "half_entries", half)
        if not half:
            raise EmptyCF("continued fraction is empty")
        if any(a == 0 for a in half):
            raise ZeroEntry("continued fraction has a zero entry")

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "EvenCF":
        if any(e % 2 for e in entries):
            raise SpecViolation("continued fraction entries must be even")
        return cls(tuple(e // 2 for e in entries))

    @classmethod
    def from_text(cls, text: str) -> "EvenCF":
        """Parse "[2,-2,-8,2]"; brackets are optional."""
        body = text.strip()
        if body.startswith("["):
            if not body.endswith("]"):
                raise ParseError("missing closing bracket", len(text))
            body = body[1:-1]
        if not body.strip():
            raise ParseError("empty continued fraction", 0)
        entries = []
        pos = 1
        for tok in body.split(","):
            t = tok.strip()
            try:
                e = int(t)
            except ValueError:
                raise ParseError(f"bad entry {t!r}", pos) from None
            if e == 0 or e % 2:
                raise ParseError(f"entry {e} is not a nonzero even integer", pos)
            entries.append(e)
            pos += len(tok) + 1
        return cls.from_entries(entries)

    @property
    def entries(self) -> List[int]:
        return [2 * a for a in self.half_entries]

    def __len__(self) -> int:
        return len(self.half_entries)

    def __str__(self) -> str:
        return "[" + ",".join(str(e) for e in self.entries) + "]"

    def negated(self) -> "EvenCF":
        return EvenCF(tuple(-a for a in self.half_entries))

    def reversed(self) -> "EvenCF":
        return EvenCF(self.half_entries[::-1])


def as_cf(x) -> EvenCF:
    if isinstance(x, EvenCF):
        return x
    if isinstance(x, str):
        return EvenCF.from_text(x)
    return EvenCF.from_entries(list(x))


def cf_to_fraction(cf) -> Fraction:
    half = as_cf(cf).half_entries
    x = Fraction(2 * half[-1])
    for a in reversed(half[:-1]):
        x = 2 * a - 1 / x
    return 1 / x


def fraction_to_cf(r) -> EvenCF:
    """Even expansion of r with 0 < |r| < 1 (or r = +/-1/2n style values)."""
    r = Fraction(r)
    if r == 0 or abs(r) > 1:
        raise BadFraction(f"{r} is outside 0 < |r| <= 1")
    if r.denominator % 2 == 1 and r.numerator % 2 == 1:
        raise NotExpandable(f"{r}: odd numerator over odd denominator has no even expansion")
    half = []
    while r != 0:
        y = 1 / r
        lo = 2 * math.floor(y / 2)
        # nearest even integer to y; a tie means y is an odd integer
        if y - lo == 1:
            raise NotExpandable(f"tie while expanding: 1/r = {y}")
        e = lo if y - lo < 1 else lo + 2
        if e == 0:
            raise ZeroEntry("expansion produced a zero entry")
        half.append(e // 2)
        r = e - y
    return EvenCF(tuple(half))


def parse_fraction(text: str) -> Fraction:
    """Parse "beta/alpha"."""
    body = text.strip()
    num, sep, den = body.partition("/")
    try:
        beta = int(num)
        alpha = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"bad fraction {text!r}", 0) from None
    if alpha <= 0:
        raise BadFraction("denominator must be positive")
    if math.gcd(beta, alpha) != 1:
        raise BadFraction(f"{beta}/{alpha} is not in lowest terms")
    return Fraction(beta, alpha)


def cf_codec(x, direction: Optional[str] = None):
    """EvenCF -> Fraction or Fraction -> EvenCF, guessing the direction from the type."""
    if direction is None:
        direction = "to_fraction" if isinstance(x, (EvenCF, list, tuple)) else "to_cf"
    if direction == "to_fraction":
        return cf_to_fraction(x)
    if direction == "to_cf":
        return fraction_to_cf(x)
    raise ValueError(f"unknown direction {direction!r}")


def dual_fraction(r) -> Fraction:
    r = Fraction(r)
    d = r.denominator
    if d % 2:
        raise OddDenominator(f"{r} has odd denominator")
    return Fraction(d - r.numerator, d)


COMPOSE_VARIANTS = ("same", "neg", "rev", "neg_rev")


def cf_compose(r, k: int, variant: str = "same") -> EvenCF:
    """[r, 2k, s] with s = r, -r, r reversed, or -(r reversed)."""
    if k == 0:
        raise ZeroK("k must be nonzero")
    r = as_cf(r)
    s = {
        "same": r,
        "neg": r.negated(),
        "rev": r.reversed(),
        "neg_rev": r.reversed().negated(),
    }.get(variant)
    if s is None:
        raise ValueError(f"unknown variant {variant!r}")
    return EvenCF(r.half_entries + (k,) + s.half_entries)


def cf_alexander(cf) -> IntPoly:
    """Normalized Alexander polynomial of the 2-bridge knot or link K(cf)."""
    return normalize_alexander(alexander_poly(seifert_2bridge(as_cf(cf))))


def is_knot(cf) -> bool:
    return len(as_cf(cf)) % 2 == 0


# the pretzel-like family X_n

LAMBDA = IntPoly([2, -5, 2])
T_MINUS_1_4 = IntPoly([-1, 1]) ** 4


def xn_recursion(n: int) -> IntPoly:
    """G(n) for the all-2 case: G(0)=1, G(1)=t^2-3t+1, G(n)=lambda G(n-1) - (t-1)^4 G(n-2)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    g0, g1 = IntPoly([1]), IntPoly([1, -3, 1])
    if n == 0:
        return g0
    for _ in range(n - 1):
        g0, g1 = g1, LAMBDA * g1 - T_MINUS_1_4 * g0
    return g1


def xn_split_spec(a: Sequence[int], b: Sequence[int]) -> SplitSpec:
    """Split Seifert data of X_n(a | b), entries given in full (even) form."""
    if len(a) != len(b) or not a:
        raise BadDimensions("a and b must have the same positive length")
    if any(x % 2 for x in list(a) + list(b)):
        raise SpecViolation("X_n entries must be even")
    return SplitSpec([x // 2 for x in a], [y // 2 for y in b], xn_coupling(len(a)))


def xn_alexander(n: int, a: Optional[Sequence[int]] = None, b: Optional[Sequence[int]] = None) -> IntPoly:
    """Alexander polynomial of X_n(a | b); a, b default to (2,...,2 | -2,...,-2)."""
    if n < 1:
        raise ValueError("n must be positive")
    a = [2] * n if a is None else list(a)
    b = [-2] * n if b is None else list(b)
    if len(a) != n or len(b) != n:
        raise BadDimensions(f"expected {n} entries in a and b")
    split = normalize_alexander(alexander_poly(seifert_split(xn_split_spec(a, b))))
    if all(x == 2 for x in a) and all(y == -2 for y in b):
        rec = normalize_alexander(xn_recursion(n))
        if rec != split:
            raise InvariantViolation(f"X_{n}: recursion and split determinant disagree")
    return split


# Y_n: Conway recursion and its t-form


Z = IntPoly([0, 1])
A_Z = IntPoly([1, 0, -1])  # 1 - z^2
B_Z = IntPoly([1, 0, 1])  # 1 + z^2
MU = IntPoly([1, -3, 1])  # 1 - 3t + t^2
RHO = IntPoly([1, -1, 1])  # 1 - t + t^2
G2_SEED = IntPoly([1, -10, 19, -10, 1])


@dataclass(frozen=True)
class YBundle:
    n: int
    c_n: IntPoly
    f_n: IntPoly
    g_n: IntPoly
    h_n: IntPoly


def conway_sequence(n: int) -> List[IntPoly]:
    """c_1..c_n with c_{k+2} = a^2 (2 c_{k+1} - b^2 c_k)."""
    cs = [A_Z, A_Z * (A_Z * A_Z - Z * Z * 4)]
    while len(cs) < n:
        cs.append(A_Z * A_Z * (cs[-1] * 2 - B_Z * B_Z * cs[-2]))
    return cs[:n]


def g_sequence(n: int) -> List[IntPoly]:
    """g_1..g_n from the seeds g_1 = 1, g_2 and the two alternating recursions."""
    gs = [IntPoly([1]), G2_SEED]
    while len(gs) < n:
        k = len(gs) + 1  # index of the next term
        if k % 2 == 1:
            gs.append(gs[-1] * 2 - RHO * RHO * gs[-2])
        else:
            gs.append(MU * MU * gs[-1] * 2 - RHO * RHO * gs[-2])
    return gs[:n]


def _a_power(n: int) -> int:
    return 2 * ((n + 1) // 2) - 1


def yn_bundle(n: int) -> YBundle:
    if n < 1:
        raise ValueError("n must be positive")
    c = conway_sequence(n)[-1]
    e = _a_power(n)
    f = as_intpoly(c.exact_div(A_Z**e))
    if A_Z.divides(f):
        raise InvariantViolation(f"1 - z^2 still divides f_{n}")
    g = g_sequence(n)[-1]
    if MU.divides(g):
        raise InvariantViolation(f"1 - 3t + t^2 divides g_{n}")
    h = MU**e * g
    return YBundle(n, c, f, g, h)


def even_z_to_t(f: IntPoly) -> IntPoly:
    """t^(d/2) f(sqrt t - 1/sqrt t) for f even in z of degree d (z^2 = (t-1)^2/t)."""
    if any(f[k] for k in range(1, len(f.coeffs), 2)):
        raise ValueError("polynomial must be even in z")
    half = f.degree // 2
    sq = IntPoly([1, -1]) ** 2
    out = IntPoly([])
    for k in range(0, len(f.coeffs), 2):
        if f[k]:
            out = out + (sq ** (k // 2)).shift(half - k // 2) * f[k]
    return out


# Salem-type families


def salem_dmn(m: int, n: int) -> IntPoly:
    """D_{m,n}: normalized Alexander polynomial of [(2)^m, -2, (2)^n]."""
    if not (m >= n >= 0) or (m + n) % 2 == 0:
        raise ParityViolation("need m >= n >= 0 with m + n odd")
    c: Dict[int, int] = {}
    for k in range(n + 1):
        c[k] = c.get(k, 0) + (-1) ** k * (4 * k + 1)
    for k in range(n + 1, m + 1):
        c[k] = c.get(k, 0) + (4 * n + 3) * (-1) ** k
    for j in range(n + 1):
        e = m + j + 1
        c[e] = c.get(e, 0) + (-1) ** (m + j + 1) * (4 * n + 1 - 4 * j)
    p = IntPoly([c.get(k, 0) for k in range(max(c) + 1)])
    if p(1) != -1:
        raise InvariantViolation(f"D_{{{m},{n}}}(1) = {p(1)}, expected -1")
    return p


def salem_dmn_cf(m: int, n: int) -> EvenCF:
    return EvenCF.from_entries([2] * m + [-2] + [2] * n)


SALEM_SPORADIC = {
    1: [2] * 5 + [-2] * 3,
    2: [2] * 9 + [-2] * 5,
    3: [2] * 6 + [-2, 2, -2, -2],
    4: [2] * 4 + [-2] * 3 + [2],
    5: [2] * 6 + [-2] * 5 + [2] * 3,
}


def salem_sequence(i: int) -> EvenCF:
    if i not in SALEM_SPORADIC:
        raise ValueError(f"no sporadic sequence number {i}")
    return EvenCF.from_entries(SALEM_SPORADIC[i])


def max_abs_real_zero(p) -> Optional[float]:
    """Largest |x| over the real zeros of p, or None when there are none."""
    ivs = isolate_real_roots(as_intpoly(p))
    if not ivs:
        return None
    return max(abs(iv.mid) for iv in ivs)


# appendix-style families


def _vertical_core() -> IntPoly:
    return IntPoly([1, -1]) ** 2 * IntPoly([1, 0, 1]) * IntPoly([1, -1, 1, -1, 1])


def appc_vertical(k: int) -> IntPoly:
    """k (t-1)^2 (t^2+1)(t^4-t^3+t^2-t+1) + t^4."""
    if k == 0:
        raise ZeroK("k must be nonzero")
    return _vertical_core() * k + IntPoly.monomial(4)


def appc_vertical_cf(k: int) -> EvenCF:
    if k == 0:
        raise ZeroK("k must be nonzero")
    return EvenCF.from_entries([2, 2, 2, 2 * k, -2, -2, -2, -2])


def appc_horizontal(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("n must be positive")
    c = [0] * (2 * n + 1)
    for k in range(n):
        s = (-1) ** k * (2 * k + 1)
        c[k] += s
        c[2 * n - k] += s
    c[n] += (-1) ** n * (2 * n + 1)
    p = IntPoly(c)
    t = IntPoly([0, 1])
    lhs = (t + 1) ** 2 * p
    rhs = (IntPoly.monomial(2 * n + 1) - 1) * (t - 1) + IntPoly.monomial(n + 1, 4 * (-1) ** n)
    if lhs != rhs:
        raise InvariantViolation(f"closed-form identity fails for n = {n}")
    return p


def exceptional_cstable_cf(m: int, k: int) -> EvenCF:
    """[(2)^(m-1), 2k, (-2)^m]."""
    if k == 0:
        raise ZeroK("k must be nonzero")
    return EvenCF.from_entries([2] * (m - 1) + [2 * k] + [-2] * m)


def cstable_threshold(m: int, k_max: int = 40) -> Optional[int]:
    """Smallest N with K([(2)^(m-1), 2k, (-2)^m]) c-stable for every N <= |k| <= k_max.

    k runs over positive values for even m and negative values for odd m.
    Returns None when even k_max is not c-stable.
    """
    from .stability import classify

    sign = 1 if m % 2 == 0 else -1
    n_found = None
    for k in range(k_max, 0, -1):
        rep = classify(cf_alexander(exceptional_cstable_cf(m, sign * k)), with_delta=False)
        if rep.verdict != "CStable":
            break
        n_found = k
    return n_found

