"""Exact interlacing of real-rooted pairs, proper position, and unit-circle interlacing."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .errors import NotCStable, NotRealRooted, ZeroPolynomial
from .polyring import IntPoly, as_intpoly, is_palindromic, modification, squarefree_part
from .stability import (
    IsolatingInterval,
    classify,
    count_real_roots,
    isolate_real_roots,
    squarefree_decomposition,
    strip_unit_roots,
    sturm_chain,
)

DIRECTIONS = ("f_le_g", "g_le_f", "equal_multiset", "n/a")


@dataclass
class InterlaceVerdict:
    interlaced: bool
    direction: str
    shared_roots: List[Tuple[float, int]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "interlaced": self.interlaced,
            "direction": self.direction,
            "shared_roots": [[x, m] for x, m in self.shared_roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _multiplicity_in(parts, iv: IsolatingInterval) -> int:
    """Multiplicity of the single root of interest inside iv, from a square-free decomposition."""
    total = 0
    for q, mult, chain in parts:
        if iv.exact:
            hit = q.eval_sign_at(iv.lo) == 0
        else:
            hit = count_real_roots(q, iv.lo, iv.hi, chain) > 0
        if hit:
            total += mult
    return total


def _decomposed(p: IntPoly):
    return [(q, m, sturm_chain(q)) for q, m in squarefree_decomposition(p)] if p.degree > 0 else []


def merged_roots(f: IntPoly, g: IntPoly) -> List[Tuple[IsolatingInterval, int, int]]:
    """Distinct real roots of f*g in increasing order with their multiplicities in f and g.

    Every interval isolates one root of the product, so the order is exact.
    """
    prod = f * g
    if prod.degree <= 0:
        return []
    fparts, gparts = _decomposed(f), _decomposed(g)
    out = []
    for iv in isolate_real_roots(squarefree_part(prod)):
        out.append((iv, _multiplicity_in(fparts, iv), _multiplicity_in(gparts, iv)))
    return out


def _require_real_rooted(p: IntPoly, name: str) -> None:
    if p.is_zero():
        raise ZeroPolynomial(f"{name} is zero")
    if p.degree == 0:
        return
    n = sum(iv.multiplicity for iv in isolate_real_roots(p))
    if n != p.degree:
        raise NotRealRooted(f"{name} has {p.degree - n} non-real zeros")


def _chain_holds(first: List[int], second: List[int]) -> bool:
    """first_1 <= second_1 <= first_2 <= ... using root positions."""
    merged = []
    for i in range(max(len(first), len(second))):
        if i < len(first):
            merged.append(first[i])
        if i < len(second):
            merged.append(second[i])
    return all(a <= b for a, b in zip(merged, merged[1:]))


def interlaced_real(f, g) -> InterlaceVerdict:
    f, g = as_intpoly(f), as_intpoly(g)
    _require_real_rooted(f, "f")
    _require_real_rooted(g, "g")
    roots = merged_roots(f, g)
    alpha: List[int] = []
    beta: List[int] = []
    shared = []
    for pos, (iv, mf, mg) in enumerate(roots):
        alpha += [pos] * mf
        beta += [pos] * mg
        if mf and mg:
            shared.append((iv.mid, min(mf, mg)))
    n, m = len(alpha), len(beta)
    if abs(n - m) > 1:
        return InterlaceVerdict(False, "n/a", shared)
    f_first = n >= m and _chain_holds(alpha, beta)
    g_first = m >= n and _chain_holds(beta, alpha)
    if f_first and g_first:
        # both chains force alpha == beta
        direction = "equal_multiset"
    elif f_first:
        direction = "f_le_g"
    elif g_first:
        direction = "g_le_f"
    else:
        return InterlaceVerdict(False, "n/a", shared)
    return InterlaceVerdict(True, direction, shared)


@dataclass(frozen=True)
class ProperPosition:
    relation: str  # f_ll_g, g_ll_f or neither
    wronskian_zero: bool = False


def wronskian(f, g) -> IntPoly:
    f, g = as_intpoly(f), as_intpoly(g)
    return f.derivative() * g - f * g.derivative()


def _sign_sample(w: IntPoly) -> int:
    k = 0
    while True:
        for x in (Fraction(k), Fraction(-k)):
            s = w.eval_sign_at(x)
            if s:
                return s
        k += 1


def proper_position(f, g) -> ProperPosition:
    """f << g when W[f, g] = f'g - fg' <= 0 on the whole real line."""
    f, g = as_intpoly(f), as_intpoly(g)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("proper position needs nonzero polynomials")
    w = wronskian(f, g)
    if w.is_zero():
        return ProperPosition("f_ll_g", True)
    for q, mult in squarefree_decomposition(w):
        if mult % 2 and q.degree > 0 and count_real_roots(q) > 0:
            return ProperPosition("neither")
    return ProperPosition("f_ll_g" if _sign_sample(w) < 0 else "g_ll_f")


def real_part_polynomial(p) -> IntPoly:
    """Polynomial in x = 2 Re(z) whose roots are the unit zeros of p with Im(z) >= 0.

    Zeros at t = 1 and t = -1 enter as x = 2 and x = -2 with their multiplicity.
    """
    p = as_intpoly(p)
    rest, a, b = strip_unit_roots(p.shift(-p.low_order()))
    if rest.degree > 0:
        rest = rest if rest.lc > 0 else -rest
        if not is_palindromic(rest):
            raise NotCStable("polynomial is not reciprocal")
        F = as_intpoly(modification(rest))
    else:
        F = IntPoly([1])
    return F * IntPoly([-2, 1]) ** a * IntPoly([2, 1]) ** b


def interlaced_unit(f, g) -> InterlaceVerdict:
    for p, name in ((f, "f"), (g, "g")):
        p = as_intpoly(p)
        if p.degree > 0 and classify(p, with_delta=False).verdict != "CStable":
            raise NotCStable(f"{name} is not c-stable")
    return interlaced_real(real_part_polynomial(f), real_part_polynomial(g))
