from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.polys import galoistools as gt
from sympy.polys.domains import ZZ

from helpers import RING_TOWERS, inner_derivation, random_poly
from skewgoppa.errors import NotCoprimeError, NotInvariantError, ParameterError, RingMismatchError
from skewgoppa.field_tower import build_tower
from skewgoppa.ore_poly import (
    OreRing,
    eval_left,
    eval_right,
    gcld,
    gcrd,
    invert_mod,
    is_invariant,
    l_divmod,
    l_rem,
    lclm,
    lclm_linear,
    lclm_many,
    lclm_points,
    lcrm,
    leea,
    r_divmod,
    r_rem,
    reea,
)

RINGS = [OreRing(t) for t in RING_TOWERS]
RINGS.append(OreRing(RING_TOWERS[1], inner_derivation(RING_TOWERS[1], 7)))
ring_st = st.sampled_from(RINGS)
seed_st = st.integers(0, 2**32)


def polys(ring, seed, *degs):
    rnd = random.Random(seed)
    return [random_poly(ring, rnd, d) for d in degs]


# -- ring structure ----------------------------------------------------------------


def test_commutation_rule(example_ring, Z):
    R = example_ring
    a = Z(3)
    assert R.x * R.const(a) == R.poly([0, Z(48)])  # sigma(z^3) = z^48
    assert (R.x * R.x) * R.const(a) == R.poly([0, 0, a])


def test_derivation_commutation():
    t = RING_TOWERS[1]
    der = inner_derivation(t, 7)
    R = OreRing(t, der)
    a = t.primitive_element
    assert R.x * R.const(a) == R.poly([der(a), t.sigma(a)])


def test_invalid_derivation_rejected():
    t = RING_TOWERS[1]
    with pytest.raises(ParameterError):
        OreRing(t, lambda a: a)


def test_ring_mismatch():
    a = RINGS[0].one
    b = RINGS[1].one
    with pytest.raises(RingMismatchError):
        a + b


def test_zero_and_degree(example_ring):
    R = example_ring
    assert R.zero.deg == float("-inf")
    assert R.poly([0, 0, 0]).is_zero()
    assert R.poly([1, 2, 0]).deg == 1
    assert R.one == 1 and R.zero == 0


@given(ring_st, seed_st)
def test_associative_and_distributive(R, seed):
    f, g, h = polys(R, seed, 3, 2, 4)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (g + h) * f == g * f + h * f
    assert (f * g).deg == f.deg + g.deg


@given(ring_st, seed_st)
def test_scaling_matches_constant_product(R, seed):
    rnd = random.Random(seed)
    f = random_poly(R, rnd, 4)
    c = R.tower.random_nonzero(rnd)
    assert f * c == f * R.const(c)
    assert c * f == R.const(c) * f
    assert f.left_monic().lc == 1
    assert f.right_monic().lc == 1
    assert r_rem(f.right_monic(), f).is_zero()
    assert l_rem(f.left_monic(), f).is_zero()


# -- division ------------------------------------------------------------------


@given(ring_st, seed_st, st.integers(0, 8), st.integers(0, 5))
def test_left_division(R, seed, df, dd):
    f, d = polys(R, seed, df, dd)
    q, r = l_divmod(f, d)
    assert q * d + r == f
    assert r.deg < d.deg


@given(ring_st, seed_st, st.integers(0, 8), st.integers(0, 5))
def test_right_division(R, seed, df, dd):
    f, d = polys(R, seed, df, dd)
    q, r = r_divmod(f, d)
    assert d * q + r == f
    assert r.deg < d.deg


def test_division_by_zero(example_ring):
    with pytest.raises(ZeroDivisionError):
        l_divmod(example_ring.one, example_ring.zero)
    with pytest.raises(ZeroDivisionError):
        r_divmod(example_ring.one, example_ring.zero)


@given(ring_st, seed_st)
def test_exact_division(R, seed):
    a, b = polys(R, seed, 3, 2)
    assert l_divmod(a * b, b) == (a, R.zero)
    assert r_divmod(a * b, a) == (b, R.zero)


# -- Euclidean algorithms ------------------------------------------------------


def check_left_table(table):
    f, g = table.f, table.g
    for i, (u, v, r) in enumerate(table.rows):
        assert u * f + v * g == r
        if i >= 2:
            assert u.deg == g.deg - table.rows[i - 1][2].deg
            assert v.deg == f.deg - table.rows[i - 1][2].deg
            assert gcld(u, v).deg == 0


def check_right_table(table):
    f, g = table.f, table.g
    for i, (u, v, r) in enumerate(table.rows):
        assert f * u + g * v == r
        if i >= 2:
            assert u.deg == g.deg - table.rows[i - 1][2].deg
            assert v.deg == f.deg - table.rows[i - 1][2].deg
            assert gcrd(u, v).deg == 0


@given(ring_st, seed_st, st.integers(1, 7), st.integers(1, 7))
def test_leea_rows(R, seed, df, dg):
    f, g = polys(R, seed, max(df, dg), min(df, dg))
    check_left_table(leea(f, g))


@given(ring_st, seed_st, st.integers(1, 7), st.integers(1, 7))
def test_reea_rows(R, seed, df, dg):
    f, g = polys(R, seed, max(df, dg), min(df, dg))
    check_right_table(reea(f, g))


@given(ring_st, seed_st)
def test_common_factor_recovered(R, seed):
    a, b, c = polys(R, seed, 2, 3, 2)
    f, g = a * c, b * c
    d = gcrd(f, g)
    assert l_rem(f, d).is_zero() and l_rem(g, d).is_zero()
    assert l_rem(d, c.left_monic()).is_zero()
    m = lclm(f, g)
    assert l_rem(m, f).is_zero() and l_rem(m, g).is_zero()
    assert m.deg + d.deg == f.deg + g.deg


@given(ring_st, seed_st)
def test_common_left_factor_recovered(R, seed):
    a, b, c = polys(R, seed, 2, 3, 2)
    f, g = c * a, c * b
    d = gcld(f, g)
    assert r_rem(f, d).is_zero() and r_rem(g, d).is_zero()
    assert r_rem(d, c).is_zero()
    m = lcrm(f, g)
    assert r_rem(m, f).is_zero() and r_rem(m, g).is_zero()
    assert m.deg + d.deg == f.deg + g.deg


@given(ring_st, seed_st, st.integers(0, 4))
def test_truncated_run(R, seed, stop):
    f, g = polys(R, seed, 6, 5)
    table = leea(f, g, stop_deg=stop)
    u, v, r = table.last
    assert r.deg < stop or r.is_zero()
    assert all(row[2].deg >= stop for row in table.rows[:-1])
    assert u * f + v * g == r


def test_euclid_rejects_zero(example_ring):
    with pytest.raises(ParameterError):
        leea(example_ring.one, example_ring.zero)
    with pytest.raises(ParameterError):
        reea(example_ring.zero, example_ring.one)


@pytest.mark.parametrize("p", [5, 7])
def test_commutative_oracle(p):
    """sigma = id: the ring is F_p[x], so sympy's gcdex is an oracle."""
    R = OreRing(build_tower(p, 1, 1, 1))
    rnd = random.Random(p)
    for _ in range(200):
        f = random_poly(R, rnd, rnd.randint(1, 8))
        g = random_poly(R, rnd, rnd.randint(1, 8))
        fs, gs = [ZZ(c) for c in reversed(f.coeffs)], [ZZ(c) for c in reversed(g.coeffs)]
        s, t, h = gt.gf_gcdex(fs, gs, p, ZZ)
        assert gcrd(f, g).coeffs == tuple(int(c) for c in reversed(h))
        assert gcld(f, g).coeffs == tuple(int(c) for c in reversed(h))
        q, r = gt.gf_div(fs, gs, p, ZZ)
        ql, rl = l_divmod(f, g)
        assert ql.coeffs == tuple(int(c) for c in reversed(q))
        assert rl.coeffs == tuple(int(c) for c in reversed(r))
        table = leea(f, g)
        u, v, rr = table.rows[-2]
        k = pow(rr.lc, -1, p)
        assert (u * k).coeffs == tuple(int(c) for c in reversed(s))
        assert (v * k).coeffs == tuple(int(c) for c in reversed(t))


# -- evaluation and lclm of linear factors ---------------------------------------


@given(ring_st, seed_st)
def test_evaluation_is_remainder(R, seed):
    rnd = random.Random(seed)
    f = random_poly(R, rnd, 5)
    a = R.tower.random_element(rnd)
    assert eval_right(f, a) == l_rem(f, R.linear(a))[0]
    assert eval_left(f, a) == r_rem(f, R.linear(a))[0]


def test_norm_evaluation_example(example_ring, Z):
    R = example_ring
    # (x - a) has a as right root; x^2 - N_2(a) as well
    a = Z(45)
    assert eval_right(R.linear(a), a) == 0
    assert eval_right(R.poly([R.tower.neg(R.tower.partial_norm(a, 2)), 0, 1]), a) == 0


@given(ring_st, seed_st)
def test_lclm_linear_matches_general(R, seed):
    rnd = random.Random(seed)
    f = random_poly(R, rnd, 3)
    a = R.tower.random_element(rnd)
    assert lclm_linear(f, a) == lclm(f, R.linear(a))


def test_lclm_points_annihilates(example_ring, Z):
    pts = [Z(k) for k in (45, 159, 68, 233)]
    v = lclm_points(example_ring, pts)
    assert v.deg == 4
    assert all(eval_right(v, a) == 0 for a in pts)
    assert lclm_many([example_ring.linear(a) for a in pts]) == v
    with pytest.raises(ParameterError):
        lclm_many([])


# -- invariant moduli ------------------------------------------------------------


def test_invariance(example_ring, Z):
    R = example_ring
    w = Z(17)  # in K
    central = R.poly([w, 0, 1, 0, 1])  # K[x^2] is the centre
    assert is_invariant(central)
    assert is_invariant(R.x)
    assert not is_invariant(R.linear(1))
    assert not is_invariant(R.poly([Z(1), 0, 1]))


@given(seed_st)
def test_invert_mod_central(seed):
    tw = RING_TOWERS[0]
    R = OreRing(tw)
    rnd = random.Random(seed)
    g = R.poly([tw.pow(2, 17 * 3), 0, 1, 0, tw.pow(2, 17)])
    f = random_poly(R, rnd, 3)
    try:
        h = invert_mod(f, g)
    except NotCoprimeError:
        assert gcld(f, g).deg > 0
        return
    assert h.deg < g.deg
    assert r_rem(f * h - 1, g).is_zero()
    assert r_rem(h * f - 1, g).is_zero()


def test_invert_mod_rejects_noninvariant(example_ring):
    R = example_ring
    with pytest.raises(NotInvariantError):
        invert_mod(R.x + 1, R.poly([2, 0, 1]))
    with pytest.raises(NotCoprimeError):
        invert_mod(R.x, R.poly([0, 0, 1]))
