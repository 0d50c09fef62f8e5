"""Seifert matrices, Alexander polynomials det(tM - M^T), and signatures."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from . import exactla
from .errors import DimensionMismatch, EmptyCF, NotSymmetric, SpecViolation, ZeroEntry
from .polyring import IntPoly

FORMS = ("standard", "twisted_chain", "split", "montesinos", "user")


@dataclass(frozen=True)
class SeifertMatrix:
    entries: Tuple[Tuple[int, ...], ...]
    form_tag: str = "user"

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise DimensionMismatch("a Seifert matrix must be square and nonempty")
        if self.form_tag not in FORMS:
            raise ValueError(f"unknown form tag {self.form_tag!r}")

    @property
    def size(self) -> int:
        return len(self.entries)

    def rows(self) -> List[List[int]]:
        return [list(r) for r in self.entries]

    def symmetrized(self) -> List[List[int]]:
        n = self.size
        e = self.entries
        return [[e[i][j] + e[j][i] for j in range(n)] for i in range(n)]

    @classmethod
    def from_text(cls, text: str) -> "SeifertMatrix":
        return cls(exactla.parse_matrix(text), "user")

    def to_text(self) -> str:
        return exactla.format_matrix(self.entries)


def _half_entries(cf) -> List[int]:
    """Accept an EvenCF or a plain list of half-entries."""
    half = list(getattr(cf, "half_entries", cf))
    if not half:
        raise EmptyCF("continued fraction is empty")
    if any(a == 0 for a in half):
        raise ZeroEntry("continued fraction has a zero entry")
    return half


def twisted_chain(half: Sequence[int]) -> List[List[int]]:
    m = len(half)
    rows = [[0] * m for _ in range(m)]
    for i, a in enumerate(half):
        rows[i][i] = a
        if i + 1 < m:
            rows[i][i + 1] = 1
    return rows


def standard_form(half: Sequence[int]) -> List[List[int]]:
    """Diagonal a_i; rows of even (1-based) index carry -1 left and 1 right."""
    m = len(half)
    rows = [[0] * m for _ in range(m)]
    for i, a in enumerate(half):
        rows[i][i] = a
        if i % 2 == 1:
            rows[i][i - 1] = -1
            if i + 1 < m:
                rows[i][i + 1] = 1
    return rows


def seifert_2bridge(cf, form: str = "twisted_chain") -> SeifertMatrix:
    half = _half_entries(cf)
    if form == "twisted_chain":
        return SeifertMatrix(twisted_chain(half), "twisted_chain")
    if form == "standard":
        return SeifertMatrix(standard_form(half), "standard")
    raise ValueError(f"unknown 2-bridge form {form!r}")


@dataclass(frozen=True)
class SplitSpec:
    pos_weights: Tuple[int, ...]
    neg_weights: Tuple[int, ...]
    coupling: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "pos_weights", tuple(self.pos_weights))
        object.__setattr__(self, "neg_weights", tuple(self.neg_weights))
        object.__setattr__(self, "coupling", tuple(tuple(r) for r in self.coupling))
        if any(a <= 0 for a in self.pos_weights):
            raise SpecViolation("positive weights must be > 0")
        if any(b >= 0 for b in self.neg_weights):
            raise SpecViolation("negative weights must be < 0")
        p, q = len(self.pos_weights), len(self.neg_weights)
        if len(self.coupling) != q or any(len(r) != p for r in self.coupling):
            raise DimensionMismatch(f"coupling must be {q}x{p}")


def xn_coupling(n: int) -> List[List[int]]:
    """Lower-triangular all-ones block (diagonal included)."""
    return [[int(j <= i) for j in range(n)] for i in range(n)]


def chain_split_coupling(n_neg: int, n_pos: int) -> List[List[int]]:
    """Coupling of a 2-bridge split form: -1 on the diagonal, 1 just right of it."""
    rows = [[0] * n_pos for _ in range(n_neg)]
    for k in range(n_neg):
        if k < n_pos:
            rows[k][k] = -1
        if k + 1 < n_pos:
            rows[k][k + 1] = 1
    return rows


def seifert_split(spec: SplitSpec) -> SeifertMatrix:
    p, q = len(spec.pos_weights), len(spec.neg_weights)
    n = p + q
    rows = [[0] * n for _ in range(n)]
    for i, a in enumerate(spec.pos_weights):
        rows[i][i] = a
    for k, b in enumerate(spec.neg_weights):
        rows[p + k][p + k] = b
        for j in range(p):
            rows[p + k][j] = spec.coupling[k][j]
    return SeifertMatrix(rows, "split")


def split_from_alternating(half: Sequence[int]) -> SplitSpec:
    """Split form for [2a_1, -2a_2, 2a_3, ...] with every a_i > 0."""
    half = list(half)
    for i, a in enumerate(half):
        if (a > 0) != (i % 2 == 0):
            raise SpecViolation("entries must alternate in sign, starting positive")
    pos = half[0::2]
    neg = half[1::2]
    return SplitSpec(pos, neg, chain_split_coupling(len(neg), len(pos)))


@dataclass(frozen=True)
class MontesinosSpec:
    e: int
    tangles: Tuple[Tuple[int, ...], ...]  # half-entries of each tangle

    def __post_init__(self):
        tangles = tuple(tuple(_half_entries(t)) for t in self.tangles)
        object.__setattr__(self, "tangles", tangles)
        if self.e <= 0 or self.e % 2 == 0:
            raise SpecViolation("e must be an odd positive integer")
        if len(tangles) < 2:
            raise SpecViolation("need at least two tangles")
        for idx, t in enumerate(tangles):
            for i, a in enumerate(t):
                if (a > 0) != (i % 2 == 0):
                    raise SpecViolation("tangle entries must alternate in sign, starting positive")
            if idx == 0 and len(t) % 2 == 0:
                raise SpecViolation("the first tangle must have odd length")
            if idx > 0 and len(t) % 2 == 1:
                raise SpecViolation("later tangles must have even length")


def montesinos_first_block(e: int, first: Sequence[int]) -> List[List[int]]:
    a = [abs(x) for x in first]
    diag = [-(e + 1) // 2]
    for j, aj in enumerate(a):
        if j % 2 == 0:
            diag.extend([-1] * (2 * aj - 1))
        else:
            diag.append(-(aj + 1))
    n = len(diag)
    rows = [[0] * n for _ in range(n)]
    for i, d in enumerate(diag):
        rows[i][i] = d
        if i + 1 < n:
            rows[i][i + 1] = 1
    return rows


def seifert_montesinos(spec: MontesinosSpec) -> SeifertMatrix:
    blocks = [montesinos_first_block(spec.e, spec.tangles[0])]
    blocks += [twisted_chain(t) for t in spec.tangles[1:]]
    n = sum(len(b) for b in blocks)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for bi, b in enumerate(blocks):
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                rows[off + i][off + j] = x
        if bi > 0:
            rows[off][0] = 1
        off += len(b)
    return SeifertMatrix(rows, "montesinos")


def montesinos_block_sizes(spec: MontesinosSpec) -> List[int]:
    first = sum(2 * abs(a) for a in spec.tangles[0][0::2])
    return [first] + [len(t) for t in spec.tangles[1:]]


# determinants


def interpolate(values: Sequence[int]) -> IntPoly:
    """The polynomial of degree < len(values) taking values[k] at t = k."""
    n = len(values)
    # Newton forward differences
    diffs = list(values)
    newton = []
    for k in range(n):
        newton.append(diffs[0])
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    out = [Fraction(0)] * n
    basis = [Fraction(1)]  # coefficients of C(t, k) * k!
    fact = 1
    for k in range(n):
        if k:
            fact *= k
            # basis *= (t - (k-1))
            nb = [Fraction(0)] * (len(basis) + 1)
            for i, c in enumerate(basis):
                nb[i + 1] += c
                nb[i] -= (k - 1) * c
            basis = nb
        if newton[k]:
            for i, c in enumerate(basis):
                out[i] += newton[k] * c / fact
    return IntPoly(out)


def pencil_det(m: Sequence[Sequence[int]], t: int) -> int:
    n = len(m)
    return exactla.bareiss_det([[t * m[i][j] - m[j][i] for j in range(n)] for i in range(n)])


def alexander_poly(M) -> IntPoly:
    """Exact det(tM - M^T) by evaluation at t = 0..n and interpolation."""
    m = M.entries if isinstance(M, SeifertMatrix) else M
    n = len(m)
    return interpolate([pencil_det(m, t) for t in range(n + 1)])


def pencil_det_poly(m: Sequence[Sequence[int]], x: Sequence[Sequence[int]]) -> IntPoly:
    """det(t*A - B) for integer matrices A, B of equal size."""
    n = len(m)
    vals = [
        exactla.bareiss_det([[t * m[i][j] - x[i][j] for j in range(n)] for i in range(n)])
        for t in range(n + 1)
    ]
    return interpolate(vals)


# signatures and definiteness


def signature_of(sym: Sequence[Sequence]) -> int:
    """Signature of a symmetric matrix by rational congruence diagonalization."""
    a = [[Fraction(x) for x in row] for row in sym]
    n = len(a)
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(n)):
        raise NotSymmetric("matrix is not symmetric")
    alive = list(range(n))
    sig = 0
    while alive:
        piv = next((i for i in alive if a[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in alive for j in alive if i != j and a[i][j] != 0), None
            )
            if pair is None:
                break  # radical
            i, j = pair
            # row_i += row_j and col_i += col_j makes a_ii = 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        p = a[piv][piv]
        sig += 1 if p > 0 else -1
        alive.remove(piv)
        for i in alive:
            f = a[i][piv] / p
            if f:
                for k in alive:
                    a[i][k] -= f * a[piv][k]
        for i in alive:
            a[i][piv] = a[piv][i] = Fraction(0)
    return sig


def signature(M) -> int:
    """Signature of M + M^T."""
    m = M.entries if isinstance(M, SeifertMatrix) else M
    n = len(m)
    return signature_of([[m[i][j] + m[j][i] for j in range(n)] for i in range(n)])


def _check_symmetric(s: Sequence[Sequence[int]]) -> None:
    n = len(s)
    if any(len(r) != n for r in s) or any(s[i][j] != s[j][i] for i in range(n) for j in range(n)):
        raise NotSymmetric("matrix is not symmetric")


def is_positive_definite(s: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion with exact leading principal minors."""
    _check_symmetric(s)
    return all(exactla.det(exactla.leading(s, k)) > 0 for k in range(1, len(s) + 1))


def strictly_dominant(s: Sequence[Sequence[int]]) -> bool:
    """Positive diagonal and every row excessive (sufficient for det > 0)."""
    n = len(s)
    return all(
        s[i][i] > 0 and s[i][i] > sum(abs(s[i][j]) for j in range(n) if j != i)
        for i in range(n)
    )


def _irreducible(s: Sequence[Sequence[int]]) -> bool:
    n = len(s)
    if n <= 1:
        return True
    # strongly connected digraph of nonzero off-diagonal entries
    def reach(adj):
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and adj(i, j):
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n

    return reach(lambda i, j: s[i][j] != 0) and reach(lambda i, j: s[j][i] != 0)


def positivity_lemma(s: Sequence[Sequence[int]]) -> bool:
    """Irreducible, positive diagonal, weakly dominant, with one excessive row."""
    n = len(s)
    if not _irreducible(s):
        return False
    slack = []
    for i in range(n):
        off = sum(abs(s[i][j]) for j in range(n) if j != i)
        if s[i][i] <= 0 or s[i][i] < off:
            return False
        slack.append(s[i][i] - off)
    return any(x > 0 for x in slack)


def stabilize_twists(S) -> List[int]:
    """Smallest k_i >= 0 making (S + diag k) + (S + diag k)^T strictly dominant."""
    m = S.entries if isinstance(S, SeifertMatrix) else S
    n = len(m)
    sym = [[m[i][j] + m[j][i] for j in range(n)] for i in range(n)]
    ks = []
    for i in range(n):
        off = sum(abs(sym[i][j]) for j in range(n) if j != i)
        ks.append(max(0, (off - sym[i][i]) // 2 + 1))
    return ks


def add_twists(S, ks: Sequence[int]) -> SeifertMatrix:
    m = S.entries if isinstance(S, SeifertMatrix) else S
    rows = [list(r) for r in m]
    for i, k in enumerate(ks):
        rows[i][i] += k
    return SeifertMatrix(rows, getattr(S, "form_tag", "user"))
