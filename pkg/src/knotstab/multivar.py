"""Two-variable Laurent Alexander polynomials of 2-bridge links and their specializations."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .errors import EvenLength, NotMultiAffine, ParseError, ZeroInput
from .families import EvenCF, as_cf
from .polyring import IntPoly, RatPoly, normalize_alexander
from .stability import classify, numeric_zeros, strip_unit_roots

Key = Tuple[int, int]


class BiLaurent:
    """Sparse Laurent polynomial in x, y with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Dict[Key, int]] = None):
        self.terms: Dict[Key, int] = {k: int(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BiLaurent":
        return cls({(i, j): c})

    @classmethod
    def x(cls) -> "BiLaurent":
        return cls.monomial(1, 0)

    @classmethod
    def y(cls) -> "BiLaurent":
        return cls.monomial(0, 1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiLaurent({(0, 0): other})
        return isinstance(other, BiLaurent) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def _lift(self, other) -> "BiLaurent":
        return other if isinstance(other, BiLaurent) else BiLaurent({(0, 0): other})

    def __add__(self, other) -> "BiLaurent":
        out = dict(self.terms)
        for k, c in self._lift(other).terms.items():
            out[k] = out.get(k, 0) + c
        return BiLaurent(out)

    __radd__ = __add__

    def __neg__(self) -> "BiLaurent":
        return BiLaurent({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BiLaurent":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BiLaurent":
        return self._lift(other) - self

    def __mul__(self, other) -> "BiLaurent":
        other = self._lift(other)
        out: Dict[Key, int] = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + c * d
        return BiLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiLaurent":
        out = BiLaurent({(0, 0): 1})
        for _ in range(n):
            out = out * self
        return out

    def shift(self, di: int, dj: int) -> "BiLaurent":
        return BiLaurent({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def min_exponents(self) -> Key:
        return min(i for i, _ in self.terms), min(j for _, j in self.terms)

    def canonical(self) -> "BiLaurent":
        """Representative modulo +/- x^i y^j: smallest exponents 0, first term positive."""
        if self.is_zero():
            return self
        mi, mj = self.min_exponents()
        out = self.shift(-mi, -mj)
        if out.terms[min(out.terms)] < 0:
            out = -out
        return out

    def equal_up_to_units(self, other: "BiLaurent") -> bool:
        return self.canonical() == other.canonical()

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def to_text(self) -> str:
        return ";".join(f"{c}:{i},{j}" for (i, j), c in sorted(self.terms.items()))

    @classmethod
    def from_text(cls, text: str) -> "BiLaurent":
        """Parse "c:i,j;c:i,j;..."."""
        out: Dict[Key, int] = {}
        pos = 0
        body = text.strip()
        if not body:
            return cls()
        for part in body.split(";"):
            try:
                c, _, ij = part.partition(":")
                i, j = ij.split(",")
                key = (int(i), int(j))
                out[key] = out.get(key, 0) + int(c)
            except ValueError:
                raise ParseError(f"bad term {part!r}", pos) from None
            pos += len(part) + 1
        return cls(out)

    def to_json(self) -> str:
        return json.dumps([[c, i, j] for (i, j), c in sorted(self.terms.items())])

    @classmethod
    def from_json(cls, text: str) -> "BiLaurent":
        out: Dict[Key, int] = {}
        for c, i, j in json.loads(text):
            out[(i, j)] = out.get((i, j), 0) + c
        return cls(out)

    def __repr__(self) -> str:
        return f"BiLaurent({self.to_text()!r})"


X = BiLaurent.x()
Y = BiLaurent.y()


def gk(n: int) -> BiLaurent:
    """G_n = (x^n - y^n)/(x - y), G_0 = 0, G_-n = -G_n / (xy)^n."""
    if n == 0:
        return BiLaurent()
    m = abs(n)
    g = BiLaurent({(i, m - 1 - i): 1 for i in range(m)})
    if n > 0:
        return g
    return -g.shift(-m, -m)


def _link_halves(cf) -> Tuple[List[int], List[int]]:
    half = list(as_cf(cf).half_entries)
    if len(half) % 2 == 0:
        raise EvenLength("a 2-component link needs an odd number of entries")
    return half[0::2], half[1::2]


def alexander_xy(cf) -> BiLaurent:
    """Subset-sum formula for the two-variable Alexander polynomial of K(cf)."""
    a, b = _link_halves(cf)
    n = len(b)
    xy1 = (X - 1) * (Y - 1)
    total = BiLaurent()
    g_cache: Dict[int, BiLaurent] = {}

    def G(k):
        if k not in g_cache:
            g_cache[k] = gk(k)
        return g_cache[k]

    for mask in range(1 << n):
        chosen = [j for j in range(n) if mask >> j & 1]
        cuts = [-1] + chosen + [n]
        mus = [sum(a[cuts[k] + 1 : cuts[k + 1] + 1]) for k in range(len(cuts) - 1)]
        if any(mu == 0 for mu in mus):
            continue
        coeff = 1
        for j in chosen:
            coeff *= b[j]
        term = xy1 ** len(chosen) * coeff
        for mu in mus:
            term = term * G(mu)
        total = total + term
    return total


def linking_number(cf) -> int:
    a, _ = _link_halves(cf)
    return sum(a)


def specialize(D: BiLaurent, mode: str) -> IntPoly:
    """diag: (t-1) D(t, t); reversed: D(t, 1/t); both normalized."""
    if D.is_zero():
        raise ZeroInput("cannot specialize zero")
    lau: Dict[int, int] = {}
    for (i, j), c in D.terms.items():
        e = i + j if mode == "diag" else i - j if mode == "reversed" else None
        if e is None:
            raise ValueError(f"unknown mode {mode!r}")
        lau[e] = lau.get(e, 0) + c
    if not any(lau.values()):
        raise ZeroInput("specialization vanishes identically")
    p = normalize_alexander(lau)
    if mode == "diag":
        p = normalize_alexander(p * IntPoly([-1, 1]))
    return p


@dataclass
class InversiveReport:
    diag_verdict: str
    reversed_verdict: str
    inversive: bool
    diag: IntPoly = field(repr=False, default=None)
    reversed: IntPoly = field(repr=False, default=None)

    def to_dict(self) -> dict:
        return {
            "diag_verdict": self.diag_verdict,
            "reversed_verdict": self.reversed_verdict,
            "inversive": self.inversive,
            "diag": self.diag.to_text(),
            "reversed": self.reversed.to_text(),
        }


def _stable_sides(p: IntPoly) -> Tuple[bool, bool]:
    """(stable, c-stable) once factors t, t - 1 and t + 1 are set aside."""
    rest, _, _ = strip_unit_roots(p.shift(-p.low_order()))
    if rest.degree <= 0:
        return True, True
    v = classify(rest, with_delta=False).verdict
    return v == "Stable", v == "CStable"


def inversive_check(cf) -> InversiveReport:
    D = alexander_xy(cf)
    d = specialize(D, "diag")
    r = specialize(D, "reversed")
    ds, dc = _stable_sides(d)
    rs, rc = _stable_sides(r)
    inv = (ds and rc) or (dc and rs)
    return InversiveReport(
        classify(d, with_delta=False).verdict,
        classify(r, with_delta=False).verdict,
        inv,
        d,
        r,
    )


def _affine_coeffs(f: BiLaurent) -> Tuple[int, int, int, int]:
    g = f.shift(*(-e for e in f.min_exponents())) if not f.is_zero() else f
    if any(i > 1 or j > 1 for i, j in g.terms):
        raise NotMultiAffine("degree exceeds one in some variable")
    t = g.terms
    return t.get((0, 0), 0), t.get((0, 1), 0), t.get((1, 0), 0), t.get((1, 1), 0)


def multiaffine_stable(f: BiLaurent) -> bool:
    """Exact H-stability of a00 + a01 y + a10 x + a11 xy: det[[a00, a01], [a10, a11]] <= 0."""
    a00, a01, a10, a11 = _affine_coeffs(f)
    return a00 * a11 - a01 * a10 <= 0


@dataclass
class ProbeResult:
    counterexample: bool
    trials: int
    witness: Optional[dict] = None
    heuristic: bool = True

    def to_dict(self) -> dict:
        return {
            "result": "counterexample" if self.counterexample else "no_counterexample",
            "trials": self.trials,
            "witness": self.witness,
            "heuristic": self.heuristic,
        }


def line_restriction(f: BiLaurent, a: Tuple, b: Tuple) -> RatPoly:
    """f(a1 + b1 t, a2 + b2 t) after clearing monomial factors."""
    g = f.shift(*(-e for e in f.min_exponents()))
    lx = RatPoly([a[0], b[0]])
    ly = RatPoly([a[1], b[1]])
    out = RatPoly([])
    for (i, j), c in g.terms.items():
        out = out + lx**i * ly**j * c
    return out


def hstable_probe(f: BiLaurent, trials: int = 1000, seed: int = 0, tol: float = 1e-9) -> ProbeResult:
    """Look for a line a + b t (b > 0) on which f has a zero with Im t > 0.

    Finding none is evidence, not a proof.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    if f.is_zero():
        raise ZeroInput("probe of zero")
    rng = random.Random(seed)
    for n in range(trials):
        a = (Fraction(rng.randint(-30, 30), 10), Fraction(rng.randint(-30, 30), 10))
        b = (Fraction(rng.randint(1, 30), 10), Fraction(rng.randint(1, 30), 10))
        p = line_restriction(f, a, b)
        if p.degree <= 0:
            continue
        for z in numeric_zeros(p.to_int_primitive(), seed=seed):
            if z.imag > tol * max(1.0, abs(z)):
                witness = {"a": [str(v) for v in a], "b": [str(v) for v in b], "root": [z.real, z.imag]}
                return ProbeResult(True, n + 1, witness)
    return ProbeResult(False, trials)
