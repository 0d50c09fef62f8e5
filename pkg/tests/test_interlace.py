import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from knotstab.errors import NotCStable, NotRealRooted
from knotstab.families import EvenCF, cf_alexander
from knotstab.interlace import interlaced_real, interlaced_unit, proper_position, real_part_polynomial, wronskian
from knotstab.polyring import IntPoly, RatPoly, squarefree_part
from knotstab.stability import isolate_real_roots, max_real_root

P = IntPoly.from_text


def alt(*a):
    """[2a_1, -2a_2, 2a_3, ...] for positive a_i."""
    return EvenCF(tuple(x if i % 2 == 0 else -x for i, x in enumerate(a)))


def test_six_entry_pair_interlaced():
    f = cf_alexander(EvenCF.from_entries([4, -2, 2, -6, 4, -2]))
    g = cf_alexander(EvenCF.from_entries([4, -2, 2, -6, 4]))
    v = interlaced_real(f, g)
    assert v.interlaced
    zs = [iv.mid for iv in isolate_real_roots(f)]
    for a, b in zip(zs, [0.2866, 0.4550, 0.7654, 1.3065, 2.1976, 3.4888]):
        assert abs(a - b) < 1e-4


def test_simple_pair():
    v = interlaced_real(P("1,-3,1"), P("1,-1"))
    assert v.interlaced and v.direction in ("f_le_g", "g_le_f")


def test_exceptional_pair_not_interlaced():
    f = cf_alexander(EvenCF.from_entries([10, 2, -2, -10]))
    g = cf_alexander(EvenCF.from_entries([10, 2, -2]))
    assert not interlaced_real(f, g).interlaced
    zs = [iv.mid for iv in isolate_real_roots(g)]
    for a, b in zip(zs, [0.4202, 1.0, 2.3797]):
        assert abs(a - b) < 1e-4


def test_not_real_rooted():
    with pytest.raises(NotRealRooted):
        interlaced_real(P("1,0,1"), P("1,-1"))


def test_verdict_json():
    d = json.loads(interlaced_real(P("1,-3,1"), P("1,-1")).to_json())
    assert set(d) == {"interlaced", "direction", "shared_roots"}


def test_shared_root_reinserted():
    f = P("1,-1") * P("1,-3,1")
    g = P("1,-1")
    v = interlaced_real(f, g)
    assert [m for _, m in v.shared_roots] == [1]
    assert not v.interlaced
    assert interlaced_real(P("1,-1") * P("1,-2"), P("1,-1")).interlaced


def test_equal_multiset():
    v = interlaced_real(P("1,-3,1"), P("1,-3,1"))
    assert v.interlaced and v.direction == "equal_multiset"


# proper position


def test_proper_position_examples():
    assert proper_position(P("1,-1"), P("1,-2")).relation == "f_ll_g"
    assert wronskian(P("1,-1"), P("1,-2")) == IntPoly([-1])
    assert proper_position(P("1,-3,1"), P("1,-1")).relation in ("f_ll_g", "g_ll_f")
    same = proper_position(P("1,-3,1"), P("1,-3,1"))
    assert same.relation == "f_ll_g" and same.wronskian_zero
    assert proper_position(P("1,0,-4"), P("1,0,-1")).relation == "neither"


@given(st.lists(st.integers(1, 4), min_size=2, max_size=8))
def test_interlaced_pairs_are_in_proper_position(a):
    f = cf_alexander(alt(*a))
    g = cf_alexander(alt(*a[:-1]))
    assert interlaced_real(f, g).interlaced
    assert proper_position(f, g).relation != "neither"


# the alternating-chain property


@given(st.lists(st.integers(1, 4), min_size=2, max_size=10))
def test_alternating_truncation_interlaces(a):
    f = cf_alexander(alt(*a))
    g = cf_alexander(alt(*a[:-1]))
    assert squarefree_part(f * g).degree == (f * g).degree
    assert interlaced_real(f, g).interlaced


def _zeros_in_unit_interval(p):
    return [iv for iv in isolate_real_roots(p, (Fraction(0), Fraction(1))) if iv.hi < 1]


@pytest.mark.parametrize("seed", range(50))
def test_last_entry_shrink_moves_zeros(seed):
    r = random.Random(seed)
    n = r.randint(2, 8)
    a = [r.randint(1, 4) for _ in range(n)]
    a[-1] = max(a[-1], 2)
    s = cf_alexander(alt(*a))
    smaller = cf_alexander(alt(*(a[:-1] + [a[-1] - 1])))
    betas = _zeros_in_unit_interval(s)
    alphas = _zeros_in_unit_interval(smaller)
    assert len(alphas) == len(betas) == n // 2
    # 0 < alpha_1 < beta_1 < ... < alpha_k < beta_k < 1, with exact interval separation
    for al, be in zip(alphas, betas):
        assert al.hi < be.lo
    for be, al in zip(betas, alphas[1:]):
        assert be.hi < al.lo


@pytest.mark.parametrize("n", range(2, 7))
def test_fibred_chain_maximizes_largest_zero(n):
    best = max_real_root(cf_alexander(alt(*([1] * n))))
    for a in itertools.product([1, 2, 3], repeat=n):
        if all(x == 1 for x in a):
            continue
        other = max_real_root(cf_alexander(alt(*a)))
        assert other.hi < best.lo, a


@pytest.mark.parametrize("seed", range(6))
def test_pencil_of_interlaced_pair_is_real_rooted(seed):
    r = random.Random(seed)
    a = [r.randint(1, 4) for _ in range(r.randint(2, 7))]
    f = cf_alexander(alt(*a))
    g = cf_alexander(alt(*a[:-1]))
    for _ in range(25):
        x = Fraction(r.randint(-20, 20), r.randint(1, 9))
        y = Fraction(r.randint(-20, 20), r.randint(1, 9))
        comb = RatPoly(f.coeffs) * x + RatPoly(g.coeffs) * y
        if comb.is_zero():
            continue
        q = comb.to_int_primitive()
        assert sum(iv.multiplicity for iv in isolate_real_roots(q)) == q.degree


# unit-circle interlacing


def test_unit_interlacing_examples():
    assert interlaced_unit(cf_alexander(EvenCF((1, 1, 1))), cf_alexander(EvenCF((1, 1)))).interlaced
    v = interlaced_unit(P("1,-1,1"), P("1,-1,1"))
    assert v.interlaced and v.direction == "equal_multiset"
    with pytest.raises(NotCStable):
        interlaced_unit(P("1,-3,1"), P("1,-1,1"))


@pytest.mark.parametrize("n", range(2, 11))
def test_twist_chain_unit_interlacing(n):
    assert interlaced_unit(cf_alexander(EvenCF((1,) * n)), cf_alexander(EvenCF((1,) * (n - 1)))).interlaced


def test_real_part_polynomial():
    # t^2 - t + 1 has zeros e^(+-i pi/3): 2 Re = 1
    assert real_part_polynomial(P("1,-1,1")) == P("1,-1")
    assert real_part_polynomial(P("1,-1") * P("1,1")) == P("1,-2") * P("1,2")
