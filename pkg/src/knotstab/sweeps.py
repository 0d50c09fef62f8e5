"""Family enumeration and per-member rows for parameter sweeps."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import CapExceeded, SpecViolation
from .families import (
    EvenCF,
    appc_horizontal,
    appc_vertical,
    appc_vertical_cf,
    cf_alexander,
    salem_dmn,
    salem_dmn_cf,
    xn_alexander,
    xn_split_spec,
    yn_bundle,
)
from .polyring import IntPoly, normalize_alexander
from .seifert import MontesinosSpec, alexander_poly, seifert_2bridge, seifert_montesinos, seifert_split, signature
from .stability import classify, hoste_report

FAMILIES = ("cf_enum", "xn", "yn", "appc_vertical", "appc_horizontal", "salem", "montesinos")
COLUMNS = ("id", "cf", "polynomial", "verdict", "n_real", "n_unit", "n_other", "delta_max", "signature", "hoste_ok")
DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class SweepSpec:
    family: str
    max_len: int = 4
    max_coef: int = 4
    lo: int = 1
    hi: int = 8
    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise SpecViolation(f"unknown family {self.family!r}")
        if self.max_len < 1 or self.max_coef < 2 or self.cap < 1:
            raise SpecViolation("bounds must be positive (max-coef at least 2)")
        if self.lo > self.hi:
            raise SpecViolation("empty parameter range")


@dataclass(frozen=True)
class Member:
    """One family member: a sort key, a label, and how to rebuild it."""

    key: Tuple
    label: str
    kind: str
    params: Tuple


def _cf_count(spec: SweepSpec) -> int:
    choices = 2 * (spec.max_coef // 2)
    return sum(choices**length for length in range(1, spec.max_len + 1))


def members(spec: SweepSpec) -> List[Member]:
    """All members in canonical order; raises CapExceeded before enumerating too many."""
    fam = spec.family
    if fam == "cf_enum":
        if _cf_count(spec) > spec.cap:
            raise CapExceeded(f"{_cf_count(spec)} continued fractions exceed the cap {spec.cap}")
        half = [a for a in range(-(spec.max_coef // 2), spec.max_coef // 2 + 1) if a]
        out = []
        for length in range(1, spec.max_len + 1):
            for combo in itertools.product(half, repeat=length):
                out.append(Member((length, combo), str(EvenCF(combo)), "cf", combo))
        return out
    params = range(spec.lo, spec.hi + 1)
    if fam == "xn":
        out = [Member((n,), f"X_{n}", "xn", (n,)) for n in params if n >= 1]
    elif fam == "yn":
        out = [Member((n,), f"Y_{n}", "yn", (n,)) for n in params if n >= 1]
    elif fam == "appc_vertical":
        out = [Member((k,), f"vertical_{k}", "vertical", (k,)) for k in params if k != 0]
    elif fam == "appc_horizontal":
        out = [Member((n,), f"horizontal_{n}", "horizontal", (n,)) for n in params if n >= 1]
    elif fam == "salem":
        out = [
            Member((m, n), f"D_{m}_{n}", "salem", (m, n))
            for m in params
            if m >= 0
            for n in range(0, m + 1)
            if (m + n) % 2 == 1
        ]
    else:
        # M(e | [2a] | [2b, -2c]) with odd e in the range and 1 <= a, b, c <= max_coef / 2
        top = spec.max_coef // 2
        out = [
            Member((e, a, b, c), f"M({e}|{2 * a}|{2 * b},{-2 * c})", "montesinos", (e, a, b, c))
            for e in params
            if e > 0 and e % 2 == 1
            for a in range(1, top + 1)
            for b in range(1, top + 1)
            for c in range(1, top + 1)
        ]
    if len(out) > spec.cap:
        raise CapExceeded(f"{len(out)} members exceed the cap {spec.cap}")
    return out


def member_polynomial(m: Member) -> Tuple[IntPoly, Optional[int], str]:
    """(normalized Alexander polynomial, signature or None, cf text)."""
    if m.kind == "cf":
        cf = EvenCF(m.params)
        return cf_alexander(cf), signature(seifert_2bridge(cf)), str(cf)
    if m.kind == "xn":
        n = m.params[0]
        return xn_alexander(n), signature(seifert_split(xn_split_spec([2] * n, [-2] * n))), ""
    if m.kind == "yn":
        return normalize_alexander(yn_bundle(m.params[0]).h_n), None, ""
    if m.kind == "vertical":
        cf = appc_vertical_cf(m.params[0])
        return normalize_alexander(appc_vertical(m.params[0])), signature(seifert_2bridge(cf)), str(cf)
    if m.kind == "horizontal":
        return normalize_alexander(appc_horizontal(m.params[0])), None, ""
    if m.kind == "salem":
        cf = salem_dmn_cf(*m.params)
        return normalize_alexander(salem_dmn(*m.params)), signature(seifert_2bridge(cf)), str(cf)
    e, a, b, c = m.params
    M = seifert_montesinos(MontesinosSpec(e, ((a,), (b, -c))))
    return normalize_alexander(alexander_poly(M)), signature(M), ""


def evaluate(m: Member, tol: float = 1e-12, seed: int = 0) -> dict:
    p, sig, cf = member_polynomial(m)
    rep = classify(p, with_delta=True, seed=seed)
    hoste = hoste_report(p, seed=seed) if p.degree else {"hoste_ok": True}
    delta = ""
    if rep.delta_max is not None:
        delta = f"{float((rep.delta_max[0] + rep.delta_max[1]) / 2):.12g}"
    return {
        "id": m.label,
        "cf": cf,
        "polynomial": p.to_text(),
        "verdict": rep.verdict,
        "n_real": rep.n_real,
        "n_unit": rep.n_unit,
        "n_other": rep.n_other,
        "delta_max": delta,
        "signature": "" if sig is None else sig,
        "hoste_ok": bool(hoste["hoste_ok"]),
    }


def _evaluate_args(args) -> Tuple[Tuple, dict]:
    m, tol, seed = args
    return m.key, evaluate(m, tol, seed)


def resolve_threads(threads: Optional[int]) -> int:
    env = os.environ.get("KNOTSTAB_THREADS")
    if env:
        threads = int(env)
    if not threads or threads < 1:
        threads = os.cpu_count() or 1
    return threads


def run_sweep(spec: SweepSpec, threads: Optional[int] = None, tol: float = 1e-12, seed: int = 0) -> List[dict]:
    """Rows for every member, sorted by the canonical member key."""
    ms = members(spec)
    n_threads = resolve_threads(threads)
    jobs = [(m, tol, seed) for m in ms]
    if n_threads == 1 or len(jobs) < 8:
        results = [_evaluate_args(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n_threads) as pool:
            results = list(pool.map(_evaluate_args, jobs, chunksize=max(1, len(jobs) // (4 * n_threads))))
    results.sort(key=lambda kr: kr[0])
    return [row for _, row in results]


def family_polynomials(spec: SweepSpec) -> Iterator[Tuple[str, IntPoly]]:
    for m in members(spec):
        yield m.label, member_polynomial(m)[0]
