"""Skew Goppa codes: Goppa polynomial, parity-check polynomials and matrix, syndromes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import FormatError, NotInvariantError, ParameterError, PointSetError
from .field_tower import FieldTower, _poly_gcd_is_one, tower_from_dict, tower_to_dict
from .ore_poly import OrePoly, OreRing, eval_right, invert_mod, is_invariant
from .pindep import PointSet

FORMAT_VERSION = 1


# -- root-freeness over K ---------------------------------------------------------


def _polymulmod(a: list[int], b: list[int], mod: list[int], t: FieldTower) -> list[int]:
    """a*b mod (monic) mod in the commutative ring L[y]; coefficients low first."""
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] = t.add(prod[i + j], t.mul(ai, bj))
    n = len(mod) - 1
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k]
        if c:
            for i in range(n + 1):
                prod[k - n + i] = t.sub(prod[k - n + i], t.mul(c, mod[i]))
    return prod[:n]


def has_roots_in_K(h: Sequence[int], t: FieldTower) -> bool:
    """Whether the monic polynomial h (over K, low first) has a root in K.

    Uses gcd(h, y^|K| - y) != 1.
    """
    h = list(h)
    if len(h) <= 1:
        return False
    q = t.p**t.delta
    acc, base = [1], [0, 1]
    e = q
    while e:
        if e & 1:
            acc = _polymulmod(acc, base, h, t)
        base = _polymulmod(base, base, h, t)
        e >>= 1
    acc = acc + [0] * (len(h) - 1 - len(acc))
    if len(acc) < 2:
        acc = acc + [0] * (2 - len(acc))
    acc[1] = t.sub(acc[1], 1)
    return not _poly_gcd_is_one(h, acc, t)


def make_goppa_poly(t_param: int, ring: OreRing, rng: random.Random, max_tries: int = 10_000) -> OrePoly:
    """Random g = h(x^mu) x^(2t mod mu) with h monic over K and root-free in K."""
    tower = ring.tower
    mu = tower.mu
    D, a = divmod(2 * t_param, mu)
    if D == 0 and a == 0:
        raise ParameterError("t must be positive")
    if D == 1:
        raise ParameterError("a monic degree-1 h always has a root in K; need 2t // mu != 1")
    for _ in range(max_tries):
        h = [tower.random_K(rng) for _ in range(D)] + [1]
        if D == 0 or not has_roots_in_K(h, tower):
            break
    else:  # pragma: no cover - probability is negligible
        raise ParameterError("could not sample a root-free h")
    coeffs = [0] * (2 * t_param + 1)
    for k, c in enumerate(h):
        coeffs[mu * k + a] = c
    return ring.poly(coeffs)


# -- the code ---------------------------------------------------------------------


@dataclass(frozen=True)
class GoppaCode:
    """A skew Goppa code over F with its private structure."""

    ring: OreRing
    points: PointSet
    etas: tuple[int, ...]
    g: OrePoly
    parity_polys: tuple[OrePoly, ...]
    t: int

    @property
    def tower(self) -> FieldTower:
        return self.ring.tower

    @property
    def n(self) -> int:
        return len(self.points)

    def parity_check_matrix(self) -> list[list[int]]:
        return parity_check_matrix(self)

    def syndrome(self, y: Sequence[int]) -> OrePoly:
        return syndrome(self, y)

    def is_codeword(self, y: Sequence[int]) -> bool:
        return not syndrome(self, y).coeffs

    # -- private-key serialization --

    def to_dict(self) -> dict:
        tw = self.tower
        return {
            "format": "skewgoppa-private-key",
            "version": FORMAT_VERSION,
            "tower": tower_to_dict(tw),
            "t": self.t,
            "points": self.points.to_hex(),
            "etas": [tw.to_hex(e) for e in self.etas],
            "g": self.g.to_hex_list(),
            "parity_polys": [h.to_hex_list() for h in self.parity_polys],
        }

    @classmethod
    def from_dict(cls, data: dict, validate: bool = True) -> GoppaCode:
        try:
            if data.get("format") != "skewgoppa-private-key" or data.get("version") != FORMAT_VERSION:
                raise FormatError("not a version-1 private key")
            tw = tower_from_dict(data["tower"])
            ring = OreRing(tw)
            pts = [tw.from_hex(a) for a in data["points"]]
            etas = [tw.from_hex(e) for e in data["etas"]]
            g = ring.poly(tw.from_hex(c) for c in data["g"])
            hs = tuple(ring.poly(tw.from_hex(c) for c in h) for h in data["parity_polys"])
            t = int(data["t"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed private key: {exc}") from exc
        if not validate:
            return cls(ring, PointSet(tw, tuple(pts), len(pts)), tuple(etas), g, hs, t)
        code = build_code(ring, pts, etas, g)
        if code.parity_polys != hs or code.t != t:
            raise FormatError("stored parity polynomials do not match the code")
        return code


def build_code(
    ring: OreRing,
    points: Sequence[int] | PointSet,
    etas: Sequence[int] | None,
    g: OrePoly,
) -> GoppaCode:
    """Validate the data of a skew Goppa code and compute its parity polynomials."""
    if ring.derivation is not None:
        raise ParameterError("code construction requires a zero derivation")
    tower = ring.tower
    if isinstance(points, PointSet):
        pts = points if points.certified_degree == len(points) else PointSet.validated(tower, points.points)
    else:
        pts = PointSet.validated(tower, points)
    n = len(pts)
    etas = tuple(etas) if etas is not None else (1,) * n
    if len(etas) != n:
        raise ParameterError("need one multiplier per point")
    if any(e == 0 for e in etas):
        raise ParameterError("multipliers must be nonzero")
    if not g.coeffs or g.deg < 1 or g.deg % 2:
        raise ParameterError("Goppa polynomial must have positive even degree")
    if not is_invariant(g):
        raise NotInvariantError("Goppa polynomial is not invariant")
    for a in pts.points:
        if eval_right(g, a) == 0:
            raise PointSetError(f"point {tower.to_hex(a)} is a right root of g")
    hs = tuple(invert_mod(ring.linear(a), g, check_invariant=False) for a in pts.points)
    return GoppaCode(ring, pts, etas, g, hs, int(g.deg) // 2)


def parity_check_matrix(code: GoppaCode) -> list[list[int]]:
    """The (2t m) x n matrix over F; row j*m + k holds coordinate k of sigma^-j(h_ij) eta_i."""
    tw = code.tower
    chi = 2 * code.t
    rows = [[0] * code.n for _ in range(chi * tw.m)]
    for i, (h, eta) in enumerate(zip(code.parity_polys, code.etas)):
        for j in range(chi):
            coords = tw.coordinates(tw.mul(tw.sigma(h[j], -j), eta))
            for k, c in enumerate(coords):
                rows[j * tw.m + k][i] = c
    return rows


def syndrome(code: GoppaCode, y: Sequence[int]) -> OrePoly:
    """s = sum_i h_i eta_i y_i."""
    if len(y) != code.n:
        raise ParameterError(f"received word has length {len(y)}, expected {code.n}")
    tw = code.tower
    chi = 2 * code.t
    s = [0] * chi
    for h, eta, yi in zip(code.parity_polys, code.etas, y):
        if yi:
            c = tw.mul(eta, yi)
            for j, hj in enumerate(h.coeffs):
                if hj:
                    s[j] = tw.add(s[j], tw.mul(hj, tw.sigma(c, j)))
    return code.ring.poly(s)
