"""Zero-distribution classification with exact certificates.

Real roots are isolated with Sturm chains in integer arithmetic.  The
unit-circle count for reciprocal polynomials goes through the modification
F(t + 1/t): a real root of F outside [-2, 2] gives a pair of real zeros,
one inside gives a conjugate pair on the unit circle, and every other root
of F gives zeros that are neither.
"""

from __future__ import annotations

import cmath
import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import mpmath

from . import exactla
from .errors import ConvergenceFailure, NonPositiveLeading, SingularSystem, ZeroPolynomial
from .polyring import (
    IntPoly,
    Poly,
    as_intpoly,
    is_palindromic,
    modification,
    poly_gcd,
)

VERDICTS = ("Stable", "CStable", "StrictlyBiStable", "TotallyUnstable", "Mixed")

T_MINUS_1 = IntPoly([-1, 1])
T_PLUS_1 = IntPoly([1, 1])


# Sturm chains


def sturm_chain(p: IntPoly) -> List[IntPoly]:
    """Sturm sequence p, p', -rem, ... kept in Z[t] with positive rescaling."""
    p = as_intpoly(p)
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = _signed_prem(a, b)
        if r.is_zero():
            break
        g = r.content()
        chain.append(IntPoly([-(c // g) for c in r.coeffs]))
    if chain[-1].is_zero():
        chain.pop()
    return chain


def _signed_prem(a: IntPoly, b: IntPoly) -> IntPoly:
    """A positive multiple of the remainder of a by b."""
    lb = b.lc
    scale = abs(lb)
    r = list(a.coeffs)
    db = b.degree
    while r and len(r) - 1 >= db:
        c = r[-1]
        s = len(r) - 1 - db
        # multiply by |lb| and subtract sign(lb)*c*b
        sg = 1 if lb > 0 else -1
        r = [x * scale for x in r]
        for j, y in enumerate(b.coeffs):
            r[s + j] -= sg * c * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return IntPoly(r)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    v, last = 0, 0
    for s in signs:
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def variations_at(chain: Sequence[IntPoly], x) -> int:
    if x == math.inf:
        return _variations([_sign(q.lc) for q in chain])
    if x == -math.inf:
        return _variations([_sign(q.lc) * (-1 if q.degree % 2 else 1) for q in chain])
    return _variations([q.eval_sign_at(x) for q in chain])


def count_real_roots(p: IntPoly, lo=-math.inf, hi=math.inf, chain=None) -> int:
    """Number of distinct real roots in (lo, hi]."""
    chain = chain or sturm_chain(p)
    return variations_at(chain, lo) - variations_at(chain, hi)


def squarefree_decomposition(p: Poly) -> List[Tuple[IntPoly, int]]:
    """Yun's algorithm: primitive square-free factors with multiplicities."""
    f = as_intpoly(p)
    if f.is_zero():
        raise ZeroPolynomial("square-free decomposition of zero")
    out = []
    if f.degree == 0:
        return out
    df = f.derivative()
    a = poly_gcd(f, df)
    b = as_intpoly(f.exact_div(a))
    c = as_intpoly(df.exact_div(a))
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            out.append((g.primitive(), i))
        b = as_intpoly(b.exact_div(g))
        c = as_intpoly(d.exact_div(g))
        d = c - b.derivative()
        i += 1
    return out


def root_bound(p: IntPoly) -> Fraction:
    """A power of two strictly exceeding every |root| (Cauchy bound)."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    b = Fraction(lc + m, lc) + 1
    k = 1
    while k <= b:
        k *= 2
    return Fraction(k)


@dataclass(frozen=True)
class IsolatingInterval:
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> float:
        return float((self.lo + self.hi) / 2)


def _isolate_squarefree(q: IntPoly, lo: Fraction, hi: Fraction, mult: int, width) -> list:
    """Isolate the roots of square-free q in (lo, hi], refined to the given width."""
    chain = sturm_chain(q)
    out = []
    n0 = count_real_roots(q, lo, hi, chain)
    right_root = q.eval_sign_at(hi) == 0
    if right_root:
        out.append(IsolatingInterval(hi, hi, mult))
        n0 -= 1
    # items (a, b, unrecorded roots inside, whether b itself is a recorded root)
    stack = [(lo, hi, n0, right_root)]
    while stack:
        a, b, n, b_root = stack.pop()
        if n == 0:
            continue
        if n == 1 and not b_root:
            out.append(_refine(q, a, b, mult, width))
            continue
        m = (a + b) / 2
        n1 = count_real_roots(q, a, m, chain)
        if q.eval_sign_at(m) == 0:
            out.append(IsolatingInterval(m, m, mult))
            stack.append((a, m, n1 - 1, True))
            stack.append((m, b, n - n1, b_root))
        else:
            stack.append((a, m, n1, False))
            stack.append((m, b, n - n1, b_root))
    return out


def _refine(q: IntPoly, a: Fraction, b: Fraction, mult: int, width) -> IsolatingInterval:
    """Bisect (a, b] holding exactly one simple root, q(b) != 0."""
    sb = q.eval_sign_at(b)
    while b - a > width:
        m = (a + b) / 2
        sm = q.eval_sign_at(m)
        if sm == 0:
            return IsolatingInterval(m, m, mult)
        if sm == sb:
            b = m
        else:
            a = m
    return IsolatingInterval(a, b, mult)


def isolate_real_roots(p: Poly, range: Optional[Tuple] = None, width=Fraction(1, 10**12)) -> List[IsolatingInterval]:
    """Disjoint isolating intervals of the real roots, with multiplicities, ascending."""
    f = as_intpoly(p)
    if f.is_zero():
        raise ZeroPolynomial("root isolation of zero")
    width = Fraction(width)
    out: List[IsolatingInterval] = []
    for q, mult in squarefree_decomposition(f):
        B = root_bound(q)
        lo, hi = (-B, B) if range is None else (Fraction(range[0]), Fraction(range[1]))
        if range is not None and q.eval_sign_at(lo) == 0:
            out.append(IsolatingInterval(lo, lo, mult))
        out.extend(_isolate_squarefree(q, lo, hi, mult, width))
    out.sort(key=lambda iv: (iv.lo, iv.hi))
    return out


def max_real_root(p: Poly) -> Optional[IsolatingInterval]:
    ivs = isolate_real_roots(p)
    return ivs[-1] if ivs else None


# classification


@dataclass
class StabilityReport:
    verdict: str
    n_real: int
    n_unit: int
    n_other: int
    delta_max: Optional[Tuple[Fraction, Fraction]] = None
    numeric_zeros: Optional[List[complex]] = None
    certified: bool = True

    @property
    def degree(self) -> int:
        return self.n_real + self.n_unit + self.n_other

    def to_dict(self) -> dict:
        lo = hi = None
        if self.delta_max is not None:
            lo, hi = float(self.delta_max[0]), float(self.delta_max[1])
        zeros = [[round(z.real, 12) + 0.0, round(z.imag, 12) + 0.0] for z in self.numeric_zeros] if self.numeric_zeros else []
        return {
            "verdict": self.verdict,
            "n_real": self.n_real,
            "n_unit": self.n_unit,
            "n_other": self.n_other,
            "delta_max_lo": lo,
            "delta_max_hi": hi,
            "zeros": zeros,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def verdict_from_counts(n_real: int, n_unit: int, n_other: int) -> str:
    deg = n_real + n_unit + n_other
    if n_real == deg:
        return "Stable"
    if n_unit == deg:
        return "CStable"
    if n_other == 0 and n_real > 0 and n_unit > 0:
        return "StrictlyBiStable"
    if n_real == 0 and n_unit == 0:
        return "TotallyUnstable"
    return "Mixed"


def strip_unit_roots(p: IntPoly) -> Tuple[IntPoly, int, int]:
    """Divide out (t-1)^a (t+1)^b; returns (rest, a, b)."""
    q = as_intpoly(p)
    a = b = 0
    while q.degree > 0 and q(1) == 0:
        q = as_intpoly(q.exact_div(T_MINUS_1))
        a += 1
    while q.degree > 0 and q(-1) == 0:
        q = as_intpoly(q.exact_div(T_PLUS_1))
        b += 1
    return q, a, b


def modified_root_counts(F: Poly) -> Tuple[int, int, int]:
    """(roots of F with |x|>2, roots with |x|<2, roots at +/-2), with multiplicity."""
    outside = inside = boundary = 0
    two = Fraction(2)
    for q, mult in squarefree_decomposition(F):
        chain = sturm_chain(q)
        vm, v2m, v2, vp = (
            variations_at(chain, -math.inf),
            variations_at(chain, -two),
            variations_at(chain, two),
            variations_at(chain, math.inf),
        )
        at_m2 = int(q.eval_sign_at(-two) == 0)
        at_2 = int(q.eval_sign_at(two) == 0)
        left = (vm - v2m) - at_m2
        mid = (v2m - v2) - at_2
        right = v2 - vp
        outside += mult * (left + right)
        inside += mult * mid
        boundary += mult * (at_m2 + at_2)
    return outside, inside, boundary


def classify(p: Poly, tol: float = 1e-8, with_delta: bool = True, with_zeros: bool = False, seed: int = 0) -> StabilityReport:
    """Exact (n_real, n_unit, n_other) counts and the stability verdict."""
    f = as_intpoly(p)
    if f.is_zero():
        raise ZeroPolynomial("classify the zero polynomial")
    deg = f.degree
    k = f.low_order()
    q = f.shift(-k)
    n_other = k
    q, a, b = strip_unit_roots(q)
    n_unit = a + b
    n_real = 0
    certified = True
    if q.degree > 0:
        if is_palindromic(q) or is_palindromic(-q):
            # no roots at +/-1 remain, so q is palindromic of even degree
            F = modification(q if q.lc > 0 else -q)
            outside, inside, boundary = modified_root_counts(F)
            n_real += 2 * outside
            n_unit += 2 * (inside + boundary)
            n_other += q.degree - 2 * (outside + inside + boundary)
        else:
            certified = False
            for z in numeric_zeros(q, seed=seed):
                if abs(z.imag) <= tol * max(1.0, abs(z)):
                    if abs(abs(z.real) - 1) <= tol:
                        n_unit += 1
                    else:
                        n_real += 1
                elif abs(abs(z) - 1) <= tol:
                    n_unit += 1
                else:
                    n_other += 1
    assert n_real + n_unit + n_other == deg
    rep = StabilityReport(verdict_from_counts(n_real, n_unit, n_other), n_real, n_unit, n_other)
    rep.certified = certified
    if with_delta:
        iv = max_real_root(f)
        if iv is not None:
            rep.delta_max = (iv.lo, iv.hi)
    if with_zeros:
        rep.numeric_zeros = numeric_zeros(f, seed=seed)
    return rep


# Routh-Hurwitz and Lyapunov


def hurwitz_matrix(p: Poly) -> List[List]:
    """H[i][j] = a_(2i - j) (1-based) with p = a_0 z^n + a_1 z^(n-1) + ... + a_n."""
    a = list(reversed(p.coeffs))
    n = len(a) - 1

    def coef(k):
        return a[k] if 0 <= k <= n else 0

    return [[coef(2 * i - j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def s_hurwitz(p: Poly) -> Tuple[bool, list]:
    """All leading principal minors of the Hurwitz matrix positive."""
    if p.is_zero() or p.lc <= 0:
        raise NonPositiveLeading("leading coefficient must be positive")
    H = hurwitz_matrix(p)
    minors = []
    for k in range(1, len(H) + 1):
        sub = [row[:k] for row in H[:k]]
        if all(isinstance(x, int) for row in sub for x in row):
            minors.append(exactla.bareiss_det(sub))
        else:
            minors.append(exactla.det(sub))
    return all(m > 0 for m in minors), minors


def companion(p: Poly) -> List[List[Fraction]]:
    """Companion matrix with ones below the diagonal and -b in the last column."""
    a = [Fraction(c) / Fraction(p.lc) for c in p.coeffs]  # monic, ascending
    n = p.degree
    M = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        M[i][i - 1] = Fraction(1)
    for i in range(n):
        M[i][n - 1] = -a[i]
    return M


def lyapunov_certificate(p: Poly) -> Optional[List[List[Fraction]]]:
    """Symmetric V with V M + M^T V = -I, when it exists and is positive definite."""
    if p.is_zero() or p.degree < 1:
        raise ZeroPolynomial("need degree >= 1")
    M = companion(p)
    n = len(M)
    idx = {}
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = len(idx)
    N = len(idx)

    def var(i, j):
        return idx[(i, j) if i <= j else (j, i)]

    rows, rhs = [], []
    for i in range(n):
        for j in range(i, n):
            row = [Fraction(0)] * N
            # (V M)_ij + (M^T V)_ij = sum_k V_ik M_kj + M_ki V_kj
            for k in range(n):
                if M[k][j]:
                    row[var(i, k)] += M[k][j]
                if M[k][i]:
                    row[var(k, j)] += M[k][i]
            rows.append(row)
            rhs.append(Fraction(-1 if i == j else 0))
    try:
        sol = exactla.solve(rows, rhs)
    except SingularSystem:
        return None
    V = [[sol[var(i, j)] for j in range(n)] for i in range(n)]
    if all(exactla.det([r[:k] for r in V[:k]]) > 0 for k in range(1, n + 1)):
        return V
    return None


# Hoste-type bounds


def positive_lc(p: IntPoly) -> IntPoly:
    return -p if p.lc < 0 else p


def hoste_report(p: Poly, seed: int = 0) -> dict:
    """Half-plane tests Re > -1 (Hoste) and -3 < Re < 6 (2-bridge bounds)."""
    f = as_intpoly(p)
    if f.is_zero():
        raise ZeroPolynomial("hoste report of zero")
    hoste_ok = s_hurwitz(positive_lc(f.compose(IntPoly([-1, -1]))))[0] if f.degree else True
    left_ok = s_hurwitz(positive_lc(f.compose(IntPoly([-3, -1]))))[0] if f.degree else True
    right_ok = s_hurwitz(positive_lc(f.compose(IntPoly([6, 1]))))[0] if f.degree else True
    iv = max_real_root(f)
    zs = numeric_zeros(f, seed=seed) if f.degree else []
    return {
        "hoste_ok": hoste_ok,
        "bridge_bounds_ok": left_ok and right_ok,
        "delta_max_interval": (iv.lo, iv.hi) if iv else None,
        "delta_max_real": float((iv.lo + iv.hi) / 2) if iv else None,
        "max_re": max((z.real for z in zs), default=None),
    }


# numeric zeros


def _aberth(coeffs: Sequence[complex], tol: float, rng: random.Random, max_iter: int = 500):
    """Aberth-Ehrlich iteration on float coefficients (ascending order)."""
    n = len(coeffs) - 1
    lc = coeffs[-1]
    mon = [c / lc for c in coeffs]
    dcoeffs = [k * c for k, c in enumerate(mon)][1:]
    radius = 1 + max(abs(c) for c in mon[:-1])
    # a tighter starting radius: geometric mean of |a_0|^(1/n)
    r0 = abs(mon[0]) ** (1.0 / n) if mon[0] else 1.0
    r0 = min(max(r0, 1e-3), radius)
    phase = rng.uniform(0, 2 * math.pi)
    z = [r0 * cmath.exp(1j * (2 * math.pi * k / n + phase + 0.4)) for k in range(n)]

    def horner(cs, x):
        acc = 0j
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def absval(cs, x):
        ax = abs(x)
        acc = 0.0
        for c in reversed(cs):
            acc = acc * ax + abs(c)
        return acc

    done = [False] * n
    for _ in range(max_iter):
        if all(done):
            break
        for k in range(n):
            if done[k]:
                continue
            pk = horner(mon, z[k])
            if abs(pk) <= tol * absval(mon, z[k]):
                done[k] = True
                continue
            dk = horner(dcoeffs, z[k])
            w = pk / dk if dk != 0 else pk
            s = sum(1 / (z[k] - z[j]) for j in range(n) if j != k and z[k] != z[j])
            denom = 1 - w * s
            step = w / denom if denom != 0 else w
            z[k] -= step
            if abs(step) <= 1e-16 * max(1.0, abs(z[k])):
                done[k] = True
    return z, all(done)


def _polish(q: IntPoly, z: complex, tol: float) -> Tuple[complex, bool]:
    """Newton refinement at raised precision on the exact coefficients."""
    with mpmath.workdps(60):
        x = mpmath.mpc(z)
        cs = list(reversed(q.coeffs))
        dcs = list(reversed(q.derivative().coeffs))
        for _ in range(60):
            px = mpmath.polyval(cs, x)
            dx = mpmath.polyval(dcs, x)
            if dx == 0:
                break
            step = px / dx
            x -= step
            if abs(step) <= mpmath.mpf(10) ** -40 * max(1, abs(x)):
                break
        scale = mpmath.polyval([abs(c) for c in cs], abs(x))
        ok = abs(mpmath.polyval(cs, x)) <= tol * scale
        return complex(x), bool(ok)


def _polish_all(q: IntPoly, zs, tol: float) -> Tuple[List[complex], bool]:
    out = []
    ok_all = True
    for z in zs:
        w, ok = _polish(q, z, tol)
        out.append(w)
        ok_all = ok_all and ok
    return out, ok_all


def _distinct(zs: Sequence[complex]) -> bool:
    """Roots of a square-free polynomial must be pairwise separated."""
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if abs(zs[i] - zs[j]) <= 1e-20 * max(1.0, abs(zs[i])):
                return False
    return True


def _mp_roots(q: IntPoly) -> List[complex]:
    with mpmath.workdps(30 + 3 * q.degree):
        roots = mpmath.polyroots(list(reversed(q.coeffs)), maxsteps=400, extraprec=10 * q.degree, error=False)
        return [complex(r) for r in roots]


def numeric_zeros(p: Poly, tol: float = 1e-12, seed: int = 0) -> List[complex]:
    """All complex zeros with multiplicity, via the square-free factors."""
    f = as_intpoly(p)
    if f.is_zero():
        raise ZeroPolynomial("zeros of the zero polynomial")
    if tol <= 0:
        raise ValueError("tol must be positive")
    rng = random.Random(seed)
    zeros: List[complex] = []
    for q, mult in squarefree_decomposition(f):
        k0 = q.low_order()
        found = [0j] * k0
        qq = q.shift(-k0)
        if qq.degree == 1:
            found.append(complex(-Fraction(qq.coeffs[0], qq.coeffs[1])))
        elif qq.degree > 1:
            zs, _ = _aberth([complex(c) for c in qq.coeffs], min(tol, 1e-14), rng)
            polished, ok_all = _polish_all(qq, zs, tol)
            if not (ok_all and _distinct(polished)):
                # two starting points fell into one root; redo at high precision
                polished, ok_all = _polish_all(qq, _mp_roots(qq), tol)
                ok_all = ok_all and _distinct(polished)
            if not ok_all:
                raise ConvergenceFailure("root finder did not reach the residual tolerance", polished)
            found.extend(polished)
        for z in found:
            zeros.extend([z] * mult)
    zeros.sort(key=lambda z: (round(z.real, 12), round(z.imag, 12)))
    return zeros
