"""Random generation shared by the test modules."""

from __future__ import annotations

import random

from skewgoppa.field_tower import build_tower
from skewgoppa.ore_poly import OrePoly, OreRing

RING_TOWERS = [
    build_tower(2, 8, 1, 4, [1, 0, 1, 1, 1, 0, 0, 0, 1]),  # mu = 2, K = F_16
    build_tower(2, 2, 3, 2),  # F_4 in F_64, mu = 3
    build_tower(3, 1, 4, 1),  # sigma = Frobenius on F_81
    build_tower(2, 3, 3, 3),  # mu = 3, K = F_8
    build_tower(5, 1, 1, 1),  # commutative
]


def random_poly(ring: OreRing, rng: random.Random, deg: int, monic: bool = False) -> OrePoly:
    t = ring.tower
    coeffs = [t.random_element(rng) for _ in range(deg)]
    coeffs.append(1 if monic else t.random_nonzero(rng))
    return ring.poly(coeffs)


def inner_derivation(tower, c: int):
    """a -> c (sigma(a) - a), a sigma-derivation for any c."""

    def der(a: int) -> int:
        return tower.mul(c, tower.sub(tower.sigma(a), a))

    return der


def toy_code(p: int, d: int, m: int, s: int, t: int, n: int | None = None, seed: int = 0):
    """A random skew Goppa code on the first n points of a maximal P-independent set."""
    from skewgoppa.goppa import build_code, make_goppa_poly
    from skewgoppa.kem import random_normal, random_primitive
    from skewgoppa.pindep import maximal_p_independent

    rnd = random.Random(seed)
    tw = build_tower(p, d, m, s)
    ring = OreRing(tw)
    P = maximal_p_independent(tw, random_primitive(tw, rnd), random_normal(tw, rnd))
    pts = P.points if n is None else P.points[:n]
    return build_code(ring, pts, None, make_goppa_poly(t, ring, rnd))


def codeword_basis(code) -> list[list[int]]:
    from skewgoppa import linalg

    return linalg.nullspace(code.parity_check_matrix(), code.n, code.tower)


def random_codeword(code, basis, rnd: random.Random) -> list[int]:
    tw = code.tower
    word = [0] * code.n
    for row in basis:
        c = tw.random_F(rnd)
        word = [tw.add(w, tw.mul(c, b)) for w, b in zip(word, row)]
    return word


def random_error(code, rnd: random.Random, weight: int) -> list[int]:
    tw = code.tower
    e = [0] * code.n
    for j in rnd.sample(range(code.n), weight):
        e[j] = tw.random_F(rnd, nonzero=True)
    return e
