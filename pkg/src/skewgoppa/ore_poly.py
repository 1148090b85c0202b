"""Ore polynomials L[x; sigma, der] and their Euclidean algorithms.

Multiplication follows the commutation rule ``x a = sigma(a) x + der(a)``.
Polynomials are immutable; coefficients are stored low degree first with
trailing zeros stripped, so the zero polynomial has no coefficients and
degree ``-inf``.

Naming of the one-sided operations:

* ``l_divmod(f, d)`` returns (q, r) with ``f = q d + r`` (left quotient).
* ``r_divmod(f, d)`` returns (q, r) with ``f = d q + r``.
* gcrd / lclm generate left ideals (``Rf + Rg``, ``Rf ∩ Rg``), gcld / lcrm
  the right ideals. All four are returned monic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .errors import NotCoprimeError, NotInvariantError, ParameterError, RingMismatchError
from .field_tower import FieldTower

NEG_INF = float("-inf")

Derivation = Callable[[int], int]


class OreRing:
    """The ring L[x; sigma, der] over a :class:`FieldTower`.

    ``derivation`` is an optional sigma-derivation on L (an additive map with
    ``der(ab) = sigma(a) der(b) + der(a) b``). It is validated on all pairs
    of the F_p-basis 1, z, ..., z^(n-1) of L.
    """

    def __init__(self, tower: FieldTower, derivation: Derivation | None = None) -> None:
        self.tower = tower
        self.derivation = derivation
        if derivation is not None:
            self._validate_derivation()

    def _validate_derivation(self) -> None:
        t, der = self.tower, self.derivation
        basis = [t.pow(t.from_digits([0, 1] + [0] * (t.degree - 2)), i) for i in range(t.degree)] if t.degree > 1 else [1]
        for a in basis:
            for b in basis:
                if der(t.add(a, b)) != t.add(der(a), der(b)):
                    raise ParameterError("derivation is not additive")
                lhs = der(t.mul(a, b))
                rhs = t.add(t.mul(t.sigma(a), der(b)), t.mul(der(a), b))
                if lhs != rhs:
                    raise ParameterError("derivation violates der(ab) = sigma(a)der(b) + der(a)b")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, OreRing)
            and self.tower == other.tower
            and self.derivation is other.derivation
        )

    def __hash__(self) -> int:
        return hash((self.tower, id(self.derivation)))

    def __repr__(self) -> str:
        der = "0" if self.derivation is None else "der"
        return f"OreRing({self.tower!r}, derivation={der})"

    # constructors
    def poly(self, coeffs: Iterable[int]) -> OrePoly:
        return OrePoly(self, coeffs)

    def const(self, a: int) -> OrePoly:
        return OrePoly(self, [a])

    def monomial(self, c: int, k: int) -> OrePoly:
        return OrePoly(self, [0] * k + [c])

    def linear(self, a: int) -> OrePoly:
        """The polynomial x - a."""
        return OrePoly(self, [self.tower.neg(a), 1])

    @property
    def zero(self) -> OrePoly:
        return OrePoly(self, [])

    @property
    def one(self) -> OrePoly:
        return OrePoly(self, [1])

    @property
    def x(self) -> OrePoly:
        return OrePoly(self, [0, 1])

    def is_commutative(self) -> bool:
        return self.derivation is None and self.tower.mu == 1


class OrePoly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: OreRing, coeffs: Iterable[int]) -> None:
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.ring = ring
        self.coeffs = tuple(c)

    # -- basics -------------------------------------------------------------

    @property
    def deg(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return (
            isinstance(other, OrePoly)
            and self.coeffs == other.coeffs
            and (self.ring is other.ring or self.ring == other.ring)
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"OrePoly({self.to_text()})"

    def to_text(self) -> str:
        """Render as ``c_k*x^k + ... + c_0`` with hex coefficients."""
        if not self.coeffs:
            return "0"
        t = self.ring.tower
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c:
                mono = "" if j == 0 else ("*x" if j == 1 else f"*x^{j}")
                terms.append(f"{t.to_hex(c)}{mono}")
        return " + ".join(terms)

    def to_hex_list(self) -> list[str]:
        return [self.ring.tower.to_hex(c) for c in self.coeffs]

    def _check(self, other: OrePoly) -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def _coerce(self, other: OrePoly | int) -> OrePoly:
        if isinstance(other, int):
            return OrePoly(self.ring, [other])
        self._check(other)
        return other

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: OrePoly | int) -> OrePoly:
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.ring.tower.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return OrePoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> OrePoly:
        neg = self.ring.tower.neg
        return OrePoly(self.ring, [neg(c) for c in self.coeffs])

    def __sub__(self, other: OrePoly | int) -> OrePoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> OrePoly:
        return self._coerce(other) - self

    def __mul__(self, other: OrePoly | int) -> OrePoly:
        if isinstance(other, int):
            return self.right_scale(other)
        self._check(other)
        return _mul(self, other)

    def __rmul__(self, other: int) -> OrePoly:
        return self.left_scale(other)

    def left_scale(self, c: int) -> OrePoly:
        """c * self for a constant c in L."""
        mul = self.ring.tower.mul
        return OrePoly(self.ring, [mul(c, a) for a in self.coeffs])

    def right_scale(self, c: int) -> OrePoly:
        """self * c for a constant c in L."""
        if self.ring.derivation is not None:
            return _mul(self, self.ring.const(c))
        t = self.ring.tower
        return OrePoly(self.ring, [t.mul(a, t.sigma(c, j)) for j, a in enumerate(self.coeffs)])

    def shift(self, k: int) -> OrePoly:
        """self * x^k."""
        if not self.coeffs:
            return self
        return OrePoly(self.ring, (0,) * k + self.coeffs)

    def left_monic(self) -> OrePoly:
        """The monic left associate (lc^-1) * self."""
        if not self.coeffs:
            return self
        return self.left_scale(self.ring.tower.inv(self.lc))

    def right_monic(self) -> OrePoly:
        """The monic right associate self * c."""
        if not self.coeffs:
            return self
        t = self.ring.tower
        n = len(self.coeffs) - 1
        return self.right_scale(t.sigma(t.inv(self.lc), -n))


def _mul(f: OrePoly, g: OrePoly) -> OrePoly:
    ring = f.ring
    if not f.coeffs or not g.coeffs:
        return ring.zero
    t = ring.tower
    add, mul = t.add, t.mul
    if ring.derivation is None:
        out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
        gc = g.coeffs
        for i, fi in enumerate(f.coeffs):
            if not fi:
                continue
            for j, gj in enumerate(gc):
                if gj:
                    out[i + j] = add(out[i + j], mul(fi, t.sigma(gj, i)))
        return OrePoly(ring, out)
    der = ring.derivation
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    xg = list(g.coeffs)  # coefficients of x^i * g
    for i, fi in enumerate(f.coeffs):
        if fi:
            for j, c in enumerate(xg):
                if c:
                    out[j] = add(out[j], mul(fi, c))
        if i + 1 < len(f.coeffs):
            nxt = [0] * (len(xg) + 1)
            for j, c in enumerate(xg):
                if c:
                    nxt[j + 1] = add(nxt[j + 1], t.sigma(c))
                    nxt[j] = add(nxt[j], der(c))
            xg = nxt
    return OrePoly(ring, out)


def mul(f: OrePoly, g: OrePoly) -> OrePoly:
    return f * g


# -- division -----------------------------------------------------------------


def l_divmod(f: OrePoly, d: OrePoly) -> tuple[OrePoly, OrePoly]:
    """(q, r) with f = q d + r and deg r < deg d."""
    f._check(d)
    if not d.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    t = ring.tower
    r = list(f.coeffs)
    dd = len(d.coeffs) - 1
    if len(r) - 1 < dd:
        return ring.zero, f
    q = [0] * (len(r) - dd)
    der = ring.derivation
    xkd: dict[int, list[int]] = {}

    def x_power_times_d(k: int) -> list[int]:
        # coefficients of x^k d
        if der is None:
            return [t.sigma(c, k) for c in d.coeffs]
        if k not in xkd:
            prev = list(d.coeffs) if k == 0 else x_power_times_d(k - 1)
            if k == 0:
                xkd[0] = prev
            else:
                nxt = [0] * (len(prev) + 1)
                for j, c in enumerate(prev):
                    if c:
                        nxt[j + 1] = t.add(nxt[j + 1], t.sigma(c))
                        nxt[j] = t.add(nxt[j], der(c))
                xkd[k] = nxt
        return xkd[k]

    lc_inv: dict[int, int] = {}
    while len(r) - 1 >= dd:
        k = len(r) - 1 - dd
        if k not in lc_inv:
            lc_inv[k] = t.inv(t.sigma(d.coeffs[-1], k))
        c = t.mul(r[-1], lc_inv[k])
        q[k] = t.add(q[k], c)
        row = x_power_times_d(k)
        if der is None:
            for j, a in enumerate(row):
                if a:
                    r[j + k] = t.sub(r[j + k], t.mul(c, a))
        else:
            for j, a in enumerate(row):
                if a:
                    r[j] = t.sub(r[j], t.mul(c, a))
        r[-1] = 0
        while r and r[-1] == 0:
            r.pop()
    return OrePoly(ring, q), OrePoly(ring, r)


def r_divmod(f: OrePoly, d: OrePoly) -> tuple[OrePoly, OrePoly]:
    """(q, r) with f = d q + r and deg r < deg d."""
    f._check(d)
    if not d.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    t = ring.tower
    dd = len(d.coeffs) - 1
    if len(f.coeffs) - 1 < dd:
        return ring.zero, f
    lcd_inv = t.inv(d.coeffs[-1])
    q = [0] * (len(f.coeffs) - dd)
    r = f
    while r.coeffs and len(r.coeffs) - 1 >= dd:
        k = len(r.coeffs) - 1 - dd
        c = t.sigma(t.mul(lcd_inv, r.lc), -dd)
        q[k] = t.add(q[k], c)
        r = r - d.right_scale(c).shift(k)
    return OrePoly(ring, q), r


def l_quo(f: OrePoly, d: OrePoly) -> OrePoly:
    return l_divmod(f, d)[0]


def l_rem(f: OrePoly, d: OrePoly) -> OrePoly:
    return l_divmod(f, d)[1]


def r_rem(f: OrePoly, d: OrePoly) -> OrePoly:
    return r_divmod(f, d)[1]


# -- Euclidean algorithms -------------------------------------------------------


@dataclass
class EuclideanTable:
    """Rows (u_i, v_i, r_i) of an extended Euclidean run and its quotients.

    For a left run ``r_i = u_i f + v_i g``; for a right run ``r_i = f u_i + g v_i``.
    """

    f: OrePoly
    g: OrePoly
    side: str
    rows: list[tuple[OrePoly, OrePoly, OrePoly]] = field(default_factory=list)
    quotients: list[OrePoly] = field(default_factory=list)

    @property
    def last(self) -> tuple[OrePoly, OrePoly, OrePoly]:
        return self.rows[-1]

    @property
    def complete(self) -> bool:
        return not self.rows[-1][2]

    @property
    def h(self) -> int:
        """Index of the last nonzero remainder (complete runs only)."""
        return len(self.rows) - 2

    def gcd(self) -> OrePoly:
        """gcrd (left run) or gcld (right run), monic."""
        if not self.complete:
            raise ValueError("truncated run has no gcd")
        r = self.rows[-2][2]
        return r.left_monic() if self.side == "left" else r.right_monic()

    def lcm(self) -> OrePoly:
        """lclm (left run) or lcrm (right run), monic."""
        if not self.complete:
            raise ValueError("truncated run has no lcm")
        u = self.rows[-1][0]
        if self.side == "left":
            return (u * self.f).left_monic()
        return (self.f * u).right_monic()


def leea(f: OrePoly, g: OrePoly, stop_deg: int | None = None) -> EuclideanTable:
    """Left extended Euclidean algorithm.

    With ``stop_deg`` the run stops at the first row whose remainder has
    degree below ``stop_deg``; that row is ``table.last``.
    """
    f._check(g)
    if not f.coeffs or not g.coeffs:
        raise ParameterError("leea needs nonzero inputs")
    ring = f.ring
    table = EuclideanTable(f, g, "left", [(ring.one, ring.zero, f), (ring.zero, ring.one, g)])
    while True:
        (u0, v0, r0), (u1, v1, r1) = table.rows[-2], table.rows[-1]
        if not r1.coeffs or (stop_deg is not None and r1.deg < stop_deg):
            return table
        q, r = l_divmod(r0, r1)
        table.quotients.append(q)
        table.rows.append((u0 - q * u1, v0 - q * v1, r))


def reea(f: OrePoly, g: OrePoly, stop_deg: int | None = None) -> EuclideanTable:
    """Right extended Euclidean algorithm: r_i = f u_i + g v_i."""
    f._check(g)
    if not f.coeffs or not g.coeffs:
        raise ParameterError("reea needs nonzero inputs")
    ring = f.ring
    table = EuclideanTable(f, g, "right", [(ring.one, ring.zero, f), (ring.zero, ring.one, g)])
    while True:
        (u0, v0, r0), (u1, v1, r1) = table.rows[-2], table.rows[-1]
        if not r1.coeffs or (stop_deg is not None and r1.deg < stop_deg):
            return table
        q, r = r_divmod(r0, r1)
        table.quotients.append(q)
        table.rows.append((u0 - u1 * q, v0 - v1 * q, r))


def gcrd(f: OrePoly, g: OrePoly) -> OrePoly:
    return leea(f, g).gcd()


def lclm(f: OrePoly, g: OrePoly) -> OrePoly:
    return leea(f, g).lcm()


def gcld(f: OrePoly, g: OrePoly) -> OrePoly:
    return reea(f, g).gcd()


def lcrm(f: OrePoly, g: OrePoly) -> OrePoly:
    return reea(f, g).lcm()


# -- evaluation -------------------------------------------------------------------


def eval_right(f: OrePoly, gamma: int) -> int:
    """Remainder of f modulo x - gamma on the right: f = h (x - gamma) + r.

    Zero exactly when gamma is a right root of f. Without derivation this is
    the norm formula sum_j f_j N_j(gamma).
    """
    ring = f.ring
    if ring.derivation is not None:
        return l_divmod(f, ring.linear(gamma))[1][0]
    t = ring.tower
    acc, norm = 0, 1
    for j, c in enumerate(f.coeffs):
        if c:
            acc = t.add(acc, t.mul(c, norm))
        norm = t.mul(norm, t.sigma(gamma, j))
    return acc


def eval_left(f: OrePoly, gamma: int) -> int:
    """Remainder of f = (x - gamma) h + r, i.e. sum_j sigma^-j(f_j) N_-j(gamma)."""
    ring = f.ring
    if ring.derivation is not None:
        return r_divmod(f, ring.linear(gamma))[1][0]
    t = ring.tower
    acc, norm = 0, 1
    for j, c in enumerate(f.coeffs):
        if c:
            acc = t.add(acc, t.mul(t.sigma(c, -j), norm))
        norm = t.mul(norm, t.sigma(gamma, -j))
    return acc


def conjugate(tower: FieldTower, a: int, c: int, derivation: Derivation | None = None) -> int:
    """The conjugate sigma(c) a c^-1 (+ der(c) c^-1) of a by c."""
    cinv = tower.inv(c)
    out = tower.mul(tower.mul(tower.sigma(c), a), cinv)
    if derivation is not None:
        out = tower.add(out, tower.mul(derivation(c), cinv))
    return out


def lclm_linear(f: OrePoly, a: int) -> OrePoly:
    """Monic lclm(f, x - a).

    Uses the product rule: if f = q (x - a) + c with c != 0 then
    (x - a^c) f has a as right root, where a^c is the conjugate of a by c.
    """
    f = f.left_monic()
    c = eval_right(f, a)
    if c == 0:
        return f
    b = conjugate(f.ring.tower, a, c, f.ring.derivation)
    return f.ring.linear(b) * f


def lclm_many(polys: Sequence[OrePoly]) -> OrePoly:
    """Monic least common left multiple of a nonempty list."""
    if not polys:
        raise ParameterError("lclm of an empty list")
    acc = polys[0].left_monic()
    if not acc.coeffs:
        raise ParameterError("lclm of the zero polynomial")
    for p in polys[1:]:
        if not p.coeffs:
            raise ParameterError("lclm of the zero polynomial")
        if len(p.coeffs) == 2:
            a = p.ring.tower.neg(p.ring.tower.div(p.coeffs[0], p.coeffs[1]))
            acc = lclm_linear(acc, a)
        else:
            acc = lclm(acc, p)
    return acc


def lclm_points(ring: OreRing, points: Iterable[int]) -> OrePoly:
    """Monic lclm of x - a over the given points."""
    acc = ring.one
    for a in points:
        acc = lclm_linear(acc, a)
    return acc


# -- invariance and inverses ------------------------------------------------------


def _ring_generators(ring: OreRing) -> list[OrePoly]:
    t = ring.tower
    z = t.from_digits([0, 1] + [0] * (t.degree - 2)) if t.degree > 1 else 1
    gens = [ring.x]
    acc = 1
    for _ in range(t.degree):
        gens.append(ring.const(acc))
        acc = t.mul(acc, z)
    return gens


def is_invariant(g: OrePoly) -> bool:
    """Whether Rg = gR, tested on the generators x and 1, z, ..., z^(n-1)."""
    if not g.coeffs:
        raise ParameterError("invariance of the zero polynomial")
    for u in _ring_generators(g.ring):
        if l_rem(g * u, g).coeffs or r_rem(u * g, g).coeffs:
            return False
    return True


def invert_mod(f: OrePoly, g: OrePoly, check_invariant: bool = True) -> OrePoly:
    """The h with deg h < deg g and f h - 1, h f - 1 in Rg, for g invariant."""
    if check_invariant and not is_invariant(g):
        raise NotInvariantError("modulus is not invariant")
    table = reea(f, g)
    _, _, r = table.rows[-2]
    if r.deg != 0:
        raise NotCoprimeError("gcld(f, g) is not a unit")
    u = table.rows[-2][0]
    h = u.right_scale(f.ring.tower.inv(r.coeffs[0]))
    return r_rem(h, g)
