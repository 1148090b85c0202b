from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewgoppa import linalg
from skewgoppa.errors import ParameterError
from skewgoppa.field_tower import (
    build_tower,
    coordinates,
    default_modulus,
    is_normal,
    is_primitive,
    partial_norm,
    sigma_pow,
    tower_from_dict,
    tower_to_dict,
)

TOWERS = [
    build_tower(2, 8, 1, 4, [1, 0, 1, 1, 1, 0, 0, 0, 1]),
    build_tower(2, 2, 3, 2),
    build_tower(2, 3, 3, 3),
    build_tower(3, 1, 4, 1),
    build_tower(5, 2, 2, 1),
    build_tower(2, 4, 4, 8),
    build_tower(2, 1, 20, 5),  # above the table limit
]
tower_st = st.sampled_from(TOWERS)


def multiplicative_order(t, a):
    k, x = 1, a
    while x != 1:
        x = t.mul(x, a)
        k += 1
    return k


# -- construction ------------------------------------------------------------------


def test_example_tower_parameters(example_tower):
    assert (example_tower.delta, example_tower.mu) == (4, 2)
    assert len(example_tower.K_elements) == 16


def test_prime_field_tower():
    t = build_tower(2, 1, 1, 1)
    assert (t.order, t.delta, t.mu) == (2, 1, 1)
    assert t.sigma(1) == 1


def test_delta_from_fixed_points():
    t = build_tower(2, 3, 3, 3)
    assert (t.delta, t.mu) == (3, 3)
    fixed = [a for a in range(t.order) if t.sigma(a) == a]
    assert len(fixed) == 2**3


@pytest.mark.parametrize(
    "args",
    [(4, 1, 1, 1), (2, 2, 2, 0), (2, 2, 2, 5), (2, 0, 2, 1)],
)
def test_bad_parameters(args):
    with pytest.raises(ParameterError):
        build_tower(*args)


def test_reducible_modulus_rejected():
    with pytest.raises(ParameterError):
        build_tower(2, 4, 1, 1, [1, 0, 1, 0, 1])  # (z^2+z+1)^2


def test_default_modulus_is_example_modulus():
    assert list(default_modulus(2, 8)) == [1, 0, 1, 1, 1, 0, 0, 0, 1]


@pytest.mark.parametrize("t", TOWERS, ids=repr)
def test_sigma_order_is_mu(t):
    g = t.primitive_element
    assert t.sigma(g, t.mu) == g
    for j in range(1, t.mu):
        assert t.sigma(g, j) != g
    assert sum(1 for a in t.subfield_elements(t.delta) if t.in_K(a)) == t.p**t.delta


# -- automorphism and norms --------------------------------------------------------


def test_sigma_examples(example_tower, Z):
    assert sigma_pow(example_tower, Z(1), 1) == Z(16)
    assert sigma_pow(example_tower, Z(37), 2) == Z(37)
    assert sigma_pow(example_tower, Z(99), 0) == Z(99)


def test_partial_norm_examples(example_tower, Z):
    assert partial_norm(example_tower, Z(45), 2) == 1
    assert partial_norm(example_tower, Z(210), 2) == 1
    assert partial_norm(example_tower, Z(7), 0) == 1
    # exponent arithmetic: N_2(z^k) = z^(17k)
    for k in range(255):
        assert partial_norm(example_tower, Z(k), 2) == Z(17 * k)


@given(tower_st, st.data())
def test_sigma_is_a_field_automorphism(t, data):
    a = data.draw(st.integers(0, t.order - 1))
    b = data.draw(st.integers(0, t.order - 1))
    i = data.draw(st.integers(-5, 5))
    assert t.sigma(t.mul(a, b), i) == t.mul(t.sigma(a, i), t.sigma(b, i))
    assert t.sigma(t.add(a, b), i) == t.add(t.sigma(a, i), t.sigma(b, i))
    assert t.sigma(t.sigma(a, i), -i) == a


@given(tower_st, st.data())
def test_norm_cocycle_and_K(t, data):
    a = data.draw(st.integers(1, t.order - 1))
    i = data.draw(st.integers(0, 6))
    j = data.draw(st.integers(0, 6))
    lhs = t.partial_norm(a, i + j)
    rhs = t.mul(t.partial_norm(a, i), t.sigma(t.partial_norm(a, j), i))
    assert lhs == rhs
    n = t.norm(a)
    assert t.in_K(n)
    assert n == t.partial_norm(a, -t.mu)


@given(tower_st, st.data())
def test_field_axioms(t, data):
    a = data.draw(st.integers(0, t.order - 1))
    b = data.draw(st.integers(0, t.order - 1))
    c = data.draw(st.integers(1, t.order - 1))
    assert t.mul(t.add(a, b), c) == t.add(t.mul(a, c), t.mul(b, c))
    assert t.mul(c, t.inv(c)) == 1
    assert t.sub(t.add(a, b), b) == a
    assert t.mul(a, b) == t._slow_mul(a, b)


# -- coordinates -------------------------------------------------------------------


def test_coordinates_small_examples(example_tower, Z):
    assert coordinates(example_tower, Z(77)) == [Z(77)]
    t = build_tower(2, 1, 8, 1)
    assert coordinates(t, 0) == [0] * 8
    assert coordinates(t, 4) == [0, 0, 1, 0, 0, 0, 0, 0]


@given(tower_st, st.data())
def test_coordinates_are_F_linear_and_invertible(t, data):
    rnd = random.Random(data.draw(st.integers(0, 10**6)))
    a, b = t.random_element(rnd), t.random_element(rnd)
    lam = t.random_F(rnd)
    ca, cb = t.coordinates(a), t.coordinates(b)
    assert all(t.in_F(c) for c in ca)
    assert t.from_coordinates(ca) == a
    combo = t.add(t.mul(lam, a), b)
    assert t.coordinates(combo) == [t.add(t.mul(lam, x), y) for x, y in zip(ca, cb)]


def test_custom_basis_roundtrip():
    t = build_tower(2, 2, 3, 2)
    g = t.primitive_element
    basis = (t.pow(g, 5), t.pow(g, 11), t.pow(g, 40))
    t2 = build_tower(2, 2, 3, 2, t.modulus, basis)
    for a in range(t.order):
        assert t2.from_coordinates(t2.coordinates(a)) == a
    with pytest.raises(ParameterError):
        build_tower(2, 2, 3, 2, t.modulus, (1, 1, 1)).coordinates(3)


# -- generator tests ---------------------------------------------------------------


def test_normal_examples(example_tower, Z):
    assert is_normal(example_tower, Z(37))
    assert not is_normal(example_tower, 1)
    assert not is_normal(example_tower, 0)


def test_primitive_examples(example_tower, Z):
    assert is_primitive(example_tower, Z(41))
    assert not is_primitive(example_tower, Z(5))
    assert not is_primitive(example_tower, 1)
    assert is_primitive(build_tower(2, 1, 1, 1), 1)
    with pytest.raises(ParameterError):
        is_primitive(example_tower, 0)


@pytest.mark.parametrize("t", TOWERS[:5], ids=repr)
def test_primitive_matches_order(t):
    for a in range(1, t.order):
        assert t.is_primitive(a) == (multiplicative_order(t, a) == t.order - 1)


@pytest.mark.parametrize("t", TOWERS[:6], ids=repr)
def test_normal_matches_rank(t):
    """Hensel's test against the K-rank of the conjugates, written over F_p."""
    Kb = [t.pow(t.subfield_generator(t.delta), i) for i in range(t.delta)] if t.delta > 1 else [1]
    field = linalg.PrimeField(t.p)
    rnd = random.Random(1)
    for _ in range(40):
        a = t.random_element(rnd)
        vecs = [t.digits(t.mul(k, t.sigma(a, j))) for j in range(t.mu) for k in Kb]
        assert t.is_normal(a) == (linalg.rank(vecs, field) == t.degree)


def test_normal_density_bound():
    t = build_tower(2, 4, 4, 8)
    rnd = random.Random(3)
    hits = sum(t.is_normal(t.random_element(rnd)) for _ in range(400))
    bound = 1 / (math.e * math.ceil(math.log(t.mu, t.p**t.delta))) if t.mu > 1 else 1
    assert hits / 400 >= bound


# -- serialization -----------------------------------------------------------------


@pytest.mark.parametrize("t", TOWERS, ids=repr)
def test_tower_dict_roundtrip(t):
    again = tower_from_dict(tower_to_dict(t))
    assert again == t
    for a in (0, 1, t.order - 1):
        assert again.from_hex(t.to_hex(a)) == a
