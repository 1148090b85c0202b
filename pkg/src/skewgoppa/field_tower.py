"""Finite field towers F_p <= F = F_{p^d} <= L = F_{p^{dm}} with an automorphism.

Elements of L are Python ints holding their polynomial-basis coordinates
over F_p packed in base p (bit-packed when p = 2): the element
``c_0 + c_1 z + ... + c_{n-1} z^{n-1}`` is the integer ``sum c_i p^i``.
Elements of the subfields F and K = L^sigma use the same encoding, so no
conversion is ever needed between them and L.

The automorphism is sigma = tau^s where tau is the p-Frobenius, so sigma
has order mu = dm / gcd(s, dm) and its fixed field K has p^delta elements,
delta = gcd(s, dm).
"""

from __future__ import annotations

import random
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterator, Sequence

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_pow_mod

from . import linalg
from .errors import ParameterError

# Fields up to this order get exp/log tables for multiplication.
TABLE_LIMIT = 1 << 16
# Largest supported field order.
MAX_ORDER = 1 << 64


def _check_irreducible(modulus: Sequence[int], p: int) -> bool:
    return bool(gf_irreducible_p([int(c) for c in reversed(modulus)], p, ZZ))


@lru_cache(maxsize=None)
def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n, ascending."""
    return tuple(sorted(factorint(n)))


@lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Smallest primitive polynomial of degree n over F_p.

    Candidates are ordered by their base-p packing, which makes the choice
    reproducible. For (2, 8) this is z^8 + z^4 + z^3 + z^2 + 1.
    Coefficients are returned low degree first.
    """
    if n == 1:
        # z - r with r a primitive root mod p (z itself is then primitive)
        if p == 2:
            return (1, 1)
        order = p - 1
        for r in range(2, p):
            if all(pow(r, order // f, p) != 1 for f in prime_factors(order)):
                return ((-r) % p, 1)
    group = p**n - 1
    factors = prime_factors(group)
    for tail in range(1, p**n):
        coeffs = [(tail // p**i) % p for i in range(n)] + [1]
        if coeffs[0] == 0:
            continue
        high = list(reversed(coeffs))
        if not gf_irreducible_p(high, p, ZZ):
            continue
        if all(gf_pow_mod([1, 0], group // f, high, p, ZZ) != [1] for f in factors):
            return tuple(coeffs)
    raise ParameterError(f"no primitive polynomial of degree {n} over F_{p}")  # pragma: no cover


def _poly_gcd_is_one(f: list[int], g: list[int], field: FieldTower) -> bool:
    """Whether gcd(f, g) in L[z] (commutative, coefficients low first) is a unit."""

    def strip(a: list[int]) -> list[int]:
        while a and a[-1] == 0:
            a.pop()
        return a

    a, b = strip(list(f)), strip(list(g))
    while b:
        inv_lead = field.inv(b[-1])
        while len(a) >= len(b):
            c = field.mul(a[-1], inv_lead)
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                if bi:
                    a[shift + i] = field.sub(a[shift + i], field.mul(c, bi))
            strip(a)
            if not a:
                break
        a, b = b, a
    return len(a) == 1


class FieldTower:
    """The tower F_p <= K, F <= L together with sigma = tau^s on L.

    Parameters
    ----------
    p : prime characteristic.
    d : degree of F over F_p.
    m : degree of L over F.
    s : exponent of the Frobenius, 1 <= s <= d*m.
    modulus : coefficients (low degree first) of an irreducible monic
        polynomial of degree d*m over F_p defining L. Defaults to the
        smallest primitive polynomial.
    basis : ordered F-basis of L used by :meth:`coordinates`. Defaults to
        1, z, ..., z^(m-1).
    """

    def __init__(
        self,
        p: int,
        d: int,
        m: int,
        s: int,
        modulus: Sequence[int] | None = None,
        basis: Sequence[int] | None = None,
    ) -> None:
        if not isprime(p):
            raise ParameterError(f"p = {p} is not prime")
        if d < 1 or m < 1:
            raise ParameterError("d and m must be positive")
        n = d * m
        if not 1 <= s <= n:
            raise ParameterError(f"s = {s} outside 1..{n}")
        if p**n > MAX_ORDER:
            raise ParameterError(f"field order {p}^{n} exceeds 2^64")
        self.p, self.d, self.m, self.s = p, d, m, s
        self.degree = n
        self.order = p**n
        self.delta = gcd(s, n)
        self.mu = n // self.delta
        if modulus is None:
            modulus = default_modulus(p, n)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ParameterError(f"modulus must be monic of degree {n}")
        if not _check_irreducible(modulus, p):
            raise ParameterError("modulus is reducible over F_p")
        self.modulus = modulus
        self._binary = p == 2
        if self._binary:
            self._modint = sum(c << i for i, c in enumerate(modulus))
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.order <= TABLE_LIMIT:
            self._build_tables()
        self._sigma_tables: dict[int, list[int]] = {}
        self._coord_cache: dict[int, list[int]] = {}
        self._basis = tuple(basis) if basis is not None else None
        if self._basis is not None and len(self._basis) != m:
            raise ParameterError(f"basis of L over F must have {m} elements")

    # -- identity ---------------------------------------------------------

    def key(self) -> tuple:
        return (self.p, self.d, self.m, self.s, self.modulus, self.basis)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldTower) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return (
            f"FieldTower(p={self.p}, d={self.d}, m={self.m}, s={self.s}, "
            f"delta={self.delta}, mu={self.mu})"
        )

    def with_s(self, s: int) -> FieldTower:
        """Same fields, different automorphism exponent."""
        return FieldTower(self.p, self.d, self.m, s, self.modulus, self._basis)

    # -- encoding ---------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        """Coordinates of a over F_p in the basis 1, z, ..., z^(n-1)."""
        p = self.p
        out = []
        for _ in range(self.degree):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_digits(self, digits: Sequence[int]) -> int:
        if self._binary:
            return sum((c & 1) << i for i, c in enumerate(digits))
        a = 0
        for c in reversed(digits):
            a = a * self.p + c % self.p
        return a

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def element_width(self) -> int:
        """Number of hex digits used to serialize one element."""
        return max(1, ((self.order - 1).bit_length() + 3) // 4)

    def to_hex(self, a: int) -> str:
        return format(a, f"0{self.element_width()}x")

    def from_hex(self, text: str) -> int:
        a = int(text, 16)
        if not 0 <= a < self.order:
            raise ValueError(f"{text!r} is not an element of F_{self.p}^{self.degree}")
        return a

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self._binary:
            return a ^ b
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def sub(self, a: int, b: int) -> int:
        if self._binary:
            return a ^ b
        return self.from_digits([x - y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        if self._binary:
            return a
        return self.from_digits([-x for x in self.digits(a)])

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def _slow_mul(self, a: int, b: int) -> int:
        if self._binary:
            n, mod = self.degree, self._modint
            top = 1 << n
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= mod
            return r
        p, n = self.p, self.degree
        x, y = self.digits(a), self.digits(b)
        prod = [0] * (2 * n - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        mod = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(n):
                    prod[k - n + i] -= c * mod[i]
        return self.from_digits(prod[:n])

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        return self._slow_pow(a, e % (self.order - 1) if e else 0)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in L")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self._slow_pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def scale(self, k: int, a: int) -> int:
        """k * a for an integer k (an element of the prime field)."""
        k %= self.p
        if k == 0:
            return 0
        if k == 1:
            return a
        return self.mul(k, a)

    def _build_tables(self) -> None:
        group = self.order - 1
        if group == 1:
            self._exp = [1, 1]
            self._log = [0, 0]
            return
        factors = prime_factors(group)
        gen = next(
            c
            for c in range(2, self.order)
            if all(self._slow_pow(c, group // f) != 1 for f in factors)
        )
        exp = [0] * (2 * group)
        log = [0] * self.order
        x = 1
        for i in range(group):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[group:] = exp[:group]
        self._exp, self._log = exp, log
        self._table_generator = gen

    # -- automorphisms and norms -----------------------------------------

    def frobenius(self, a: int, k: int) -> int:
        """a^(p^k), k taken modulo the degree."""
        k %= self.degree
        if k == 0 or a == 0:
            return a
        if self._exp is not None:
            return self._exp[(self._log[a] * pow(self.p, k, self.order - 1)) % (self.order - 1)]
        if self._binary:
            for _ in range(k):
                a = self._slow_mul(a, a)
            return a
        return self._slow_pow(a, self.p**k)

    def sigma(self, a: int, i: int = 1) -> int:
        """sigma^i(a); negative i applies the inverse automorphism."""
        j = i % self.mu
        if j == 0 or a == 0:
            return a
        if self._exp is None:
            return self.frobenius(a, self.s * j)
        table = self._sigma_tables.get(j)
        if table is None:
            table = [self.frobenius(x, self.s * j) for x in range(self.order)]
            self._sigma_tables[j] = table
        return table[a]

    def partial_norm(self, a: int, i: int) -> int:
        """N_i(a) = a sigma(a) ... sigma^(i-1)(a); for i < 0 the same with sigma^-1."""
        step = 1 if i >= 0 else -1
        out = 1
        for j in range(abs(i)):
            out = self.mul(out, self.sigma(a, step * j))
        return out

    def norm(self, a: int) -> int:
        """Field norm of a down to K."""
        return self.partial_norm(a, self.mu)

    # -- subfields --------------------------------------------------------

    def in_subfield(self, a: int, e: int) -> bool:
        """Whether a lies in the subfield with p^e elements."""
        return self.frobenius(a, e) == a

    def in_F(self, a: int) -> bool:
        return self.in_subfield(a, self.d)

    def in_K(self, a: int) -> bool:
        return self.sigma(a) == a

    @cached_property
    def primitive_element(self) -> int:
        """The smallest-encoded generator of the multiplicative group of L."""
        return next(c for c in range(1, self.order) if self.is_primitive(c))

    def subfield_generator(self, e: int) -> int:
        """A generator of the multiplicative group of the subfield of order p^e."""
        if self.degree % e:
            raise ParameterError(f"F_{self.p}^{e} is not a subfield of L")
        return self.pow(self.primitive_element, (self.order - 1) // (self.p**e - 1))

    def subfield_elements(self, e: int) -> list[int]:
        """All elements of the subfield of order p^e, zero first."""
        g = self.subfield_generator(e)
        out, x = [0], 1
        for _ in range(self.p**e - 1):
            out.append(x)
            x = self.mul(x, g)
        return out

    @cached_property
    def K_elements(self) -> list[int]:
        return self.subfield_elements(self.delta)

    @cached_property
    def F_basis_over_prime(self) -> tuple[int, ...]:
        """F_p-basis 1, w, ..., w^(d-1) of F inside L."""
        if self.d == self.degree:
            return tuple(self.from_digits([int(i == j) for j in range(self.degree)]) for i in range(self.d))
        w = self.subfield_generator(self.d)
        out, x = [], 1
        for _ in range(self.d):
            out.append(x)
            x = self.mul(x, w)
        return tuple(out)

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.order)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.order)

    def random_F(self, rng: random.Random, nonzero: bool = False) -> int:
        """Uniform element of F (nonzero if requested)."""
        while True:
            if self.d == self.degree:
                a = rng.randrange(self.order)
            else:
                a = 0
                for b in self.F_basis_over_prime:
                    a = self.add(a, self.scale(rng.randrange(self.p), b))
            if a or not nonzero:
                return a

    def random_K(self, rng: random.Random) -> int:
        return rng.choice(self.K_elements)

    # -- coordinates over F ------------------------------------------------

    @property
    def basis(self) -> tuple[int, ...]:
        if self._basis is None:
            z = self.from_digits([0, 1] + [0] * (self.degree - 2)) if self.degree > 1 else 1
            self._basis = tuple(self.pow(z, k) for k in range(self.m))
        return self._basis

    @cached_property
    def _coordinate_images(self) -> list[list[int]]:
        """F-coordinates of each F_p-basis element z^i of L."""
        fb = self.F_basis_over_prime
        # columns: digit vectors of f_a * b_k, ordered (k, a)
        cols = [self.digits(self.mul(f, b)) for b in self.basis for f in fb]
        field = linalg.PrimeField(self.p)
        mat = linalg.transpose(cols)
        n = self.degree
        if linalg.rank(mat, field) < n:
            raise ParameterError("basis is not F-linearly independent")
        images = []
        for i in range(n):
            sol = linalg.solve(mat, [int(j == i) for j in range(n)], field)
            coords = []
            for k in range(self.m):
                acc = 0
                for a, f in enumerate(fb):
                    acc = self.add(acc, self.scale(sol[k * self.d + a], f))
                coords.append(acc)
            images.append(coords)
        return images

    def coordinates(self, a: int) -> list[int]:
        """Coordinates of a over F with respect to :attr:`basis`."""
        if self.m == 1 and self.basis == (1,):
            return [a]
        cached = self._coord_cache.get(a)
        if cached is not None:
            return list(cached)
        out = [0] * self.m
        for i, c in enumerate(self.digits(a)):
            if c:
                img = self._coordinate_images[i]
                out = [self.add(o, self.scale(c, v)) for o, v in zip(out, img)]
        if self._exp is not None:
            self._coord_cache[a] = out
        return list(out)

    def from_coordinates(self, coords: Sequence[int]) -> int:
        acc = 0
        for c, b in zip(coords, self.basis):
            if c:
                acc = self.add(acc, self.mul(c, b))
        return acc

    # -- generator tests --------------------------------------------------

    def is_primitive(self, a: int) -> bool:
        """Whether a generates the multiplicative group of L."""
        if a == 0:
            raise ParameterError("zero is never primitive")
        group = self.order - 1
        if group == 1:
            return a == 1
        return all(self.pow(a, group // f) != 1 for f in prime_factors(group))

    def is_normal(self, a: int) -> bool:
        """Hensel test: {a, sigma(a), ...} is a K-basis of L.

        Checks gcd(z^mu - 1, a z^(mu-1) + a^(p^delta) z^(mu-2) + ... ) = 1 in L[z].
        """
        if a == 0:
            return False
        mu = self.mu
        conj = [self.frobenius(a, self.delta * i) for i in range(mu)]
        f = list(reversed(conj))  # coefficient of z^(mu-1-i) is conj[i]
        zmu = [self.neg(1)] + [0] * (mu - 1) + [1]
        return _poly_gcd_is_one(zmu, f, self)


def build_tower(
    p: int,
    d: int,
    m: int,
    s: int,
    modulus: Sequence[int] | None = None,
    basis: Sequence[int] | None = None,
) -> FieldTower:
    return FieldTower(p, d, m, s, modulus, basis)


def sigma_pow(t: FieldTower, a: int, i: int) -> int:
    return t.sigma(a, i)


def partial_norm(t: FieldTower, a: int, i: int) -> int:
    return t.partial_norm(a, i)


def coordinates(t: FieldTower, a: int) -> list[int]:
    return t.coordinates(a)


def is_normal(t: FieldTower, a: int) -> bool:
    return t.is_normal(a)


def is_primitive(t: FieldTower, a: int) -> bool:
    return t.is_primitive(a)


def tower_to_dict(t: FieldTower) -> dict:
    return {
        "p": t.p,
        "d": t.d,
        "m": t.m,
        "s": t.s,
        "modulus": list(t.modulus),
        "basis": [t.to_hex(b) for b in t.basis],
    }


def tower_from_dict(data: dict) -> FieldTower:
    t = FieldTower(data["p"], data["d"], data["m"], data["s"], data["modulus"])
    basis = tuple(t.from_hex(b) for b in data["basis"])
    if basis != t.basis:
        t = FieldTower(data["p"], data["d"], data["m"], data["s"], data["modulus"], basis)
    return t
