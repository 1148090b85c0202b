"""Niederreiter-style key encapsulation on skew Goppa codes.

Parameter search, key generation, encapsulation and decapsulation with a
SHAKE-256 shared secret, and the generator-matrix (McEliece) variant.
Public objects live over a standalone F = F_{p^d}; the private code lives in
L, and the two are linked by a fixed embedding F -> L.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Sequence

from . import linalg
from .decoder import decode
from .errors import (
    FormatError,
    InvalidCryptogram,
    KeygenError,
    ParameterError,
    SkewGoppaError,
    UndecodableError,
)
from .field_tower import FieldTower, build_tower
from .goppa import GoppaCode, build_code, make_goppa_poly
from .ore_poly import OrePoly, OreRing
from .pindep import PointSet, maximal_p_independent

FORMAT_VERSION = 1
MAX_A_TRIES = 64
SECRET_BYTES = 32


# -- parameters -------------------------------------------------------------------


def code_dimension(n: int, t: int) -> int:
    """k = n - 2t floor(n / 4t)."""
    return n - 2 * t * (n // (4 * t))


def violations(n: int, t: int, p: int, d: int, m: int, delta: int) -> list[str]:
    """The admissibility conditions that (m, delta) breaks, as readable strings."""
    out = []
    if 10 * t * m < n:
        out.append(f"m >= n/(10t) fails: {m} < {n}/{10 * t}")
    if 4 * t * m > n:
        out.append(f"m <= n/(4t) fails: {m} > {n}/{4 * t}")
    if delta < 1 or (d * m) % delta:
        out.append(f"delta | dm fails: {delta} does not divide {d * m}")
    elif delta >= d * m:
        out.append(f"delta < dm fails: sigma must be nontrivial ({delta} >= {d * m})")
    elif n * delta > d * m * (p**delta - 1):
        out.append(f"m >= n*delta/(d(p^delta-1)) fails for delta = {delta}")
    return out


def search_parameters(n: int, t: int, p: int, d: int) -> list[tuple[int, int]]:
    """All admissible (m, delta) pairs, sorted."""
    if t < 1 or 2 * t >= n:
        raise ParameterError("need 1 <= t < n/2")
    out = []
    for m in range(1, n // (4 * t) + 1):
        for delta in range(1, d * m):
            if (d * m) % delta == 0 and not violations(n, t, p, d, m, delta):
                out.append((m, delta))
    if not out:
        raise ParameterError("no admissible parameters")
    return out


@dataclass(frozen=True)
class Params:
    n: int
    t: int
    p: int
    d: int
    m: int
    s: int

    @property
    def k(self) -> int:
        return code_dimension(self.n, self.t)

    @property
    def delta(self) -> int:
        return gcd(self.s, self.d * self.m)

    @property
    def mu(self) -> int:
        return self.d * self.m // self.delta

    def check(self) -> Params:
        bad = violations(self.n, self.t, self.p, self.d, self.m, self.delta)
        if not 1 <= self.s <= self.d * self.m:
            bad.append(f"1 <= s <= dm fails: s = {self.s}")
        if bad:
            raise ParameterError("inadmissible parameters: " + "; ".join(bad))
        return self

    def as_dict(self) -> dict:
        return {"n": self.n, "t": self.t, "p": self.p, "d": self.d, "m": self.m, "s": self.s}


def choose_parameters(
    n: int,
    t: int,
    p: int,
    d: int,
    rng: random.Random,
    m: int | None = None,
    s: int | None = None,
) -> Params:
    """Pick (m, delta) among the admissible pairs, then s with gcd(s, dm) = delta.

    Fixed m and/or s are honored and validated.
    """
    if m is not None and s is not None:
        return Params(n, t, p, d, m, s).check()
    pairs = search_parameters(n, t, p, d)
    if m is not None:
        pairs = [pr for pr in pairs if pr[0] == m]
    if s is not None:
        pairs = [pr for pr in pairs if gcd(s, d * pr[0]) == pr[1]]
    if not pairs:
        raise ParameterError("no admissible (m, delta) matches the fixed values")
    m_, delta = rng.choice(pairs)
    if s is None:
        s = rng.choice([x for x in range(1, d * m_ + 1) if gcd(x, d * m_) == delta])
    return Params(n, t, p, d, m_, s).check()


# -- F inside L -------------------------------------------------------------------


def base_field(p: int, d: int) -> FieldTower:
    """F_{p^d} on its own, with its default modulus."""
    return build_tower(p, d, 1, d)


class Embedding:
    """F -> L sending F's generator to the smallest root of F's modulus in L."""

    def __init__(self, F: FieldTower, L: FieldTower) -> None:
        if F.p != L.p or L.degree % F.degree:
            raise ParameterError("F is not a subfield of L")
        self.F, self.L = F, L
        roots = [b for b in L.subfield_elements(F.degree) if self._eval_modulus(b) == 0]
        self.beta = min(roots)
        self._powers = []
        x = 1
        for _ in range(F.degree):
            self._powers.append(x)
            x = L.mul(x, self.beta)

    def _eval_modulus(self, b: int) -> int:
        acc = 0
        for c in reversed(self.F.modulus):
            acc = self.L.add(self.L.mul(acc, b), self.L.scale(c, 1))
        return acc

    def to_L(self, a: int) -> int:
        acc = 0
        for c, w in zip(self.F.digits(a), self._powers):
            if c:
                acc = self.L.add(acc, self.L.scale(c, w))
        return acc

    @cached_property
    def _inverse(self) -> dict[int, int]:
        return {self.to_L(a): a for a in range(self.F.order)}

    def from_L(self, x: int) -> int:
        try:
            return self._inverse[x]
        except KeyError:
            raise ParameterError("element of L does not lie in F") from None


# -- keys -------------------------------------------------------------------------


@dataclass(frozen=True)
class PublicKey:
    """RREF parity-check matrix H_pub over F with n - k rows."""

    n: int
    t: int
    p: int
    d: int
    rows: tuple[tuple[int, ...], ...]

    @cached_property
    def field(self) -> FieldTower:
        return base_field(self.p, self.d)

    @property
    def k(self) -> int:
        return code_dimension(self.n, self.t)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, v in enumerate(r) if v) for r in self.rows)

    def syndrome(self, e: Sequence[int]) -> list[int]:
        """e H_pub^T."""
        return linalg.mat_vec(self.rows, e, self.field)

    def to_dict(self) -> dict:
        F = self.field
        return {
            "format": "skewgoppa-public-key",
            "version": FORMAT_VERSION,
            "n": self.n,
            "t": self.t,
            "p": self.p,
            "d": self.d,
            "rows": len(self.rows),
            "cols": self.n,
            "matrix": ["".join(F.to_hex(v) for v in r) for r in self.rows],
        }

    @classmethod
    def from_dict(cls, data: dict) -> PublicKey:
        if not isinstance(data, dict) or data.get("format") != "skewgoppa-public-key":
            raise FormatError("not a public key")
        if data.get("version") != FORMAT_VERSION:
            raise FormatError(f"unsupported public key version {data.get('version')!r}")
        try:
            n, t, p, d = (int(data[x]) for x in ("n", "t", "p", "d"))
            F = base_field(p, d)
            w = F.element_width()
            rows = []
            for text in data["matrix"]:
                if len(text) != w * n:
                    raise FormatError("matrix row has the wrong length")
                rows.append(tuple(F.from_hex(text[i : i + w]) for i in range(0, len(text), w)))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed public key: {exc}") from exc
        if len(rows) != int(data.get("rows", -1)) or len(rows) != n - code_dimension(n, t):
            raise FormatError("public key has the wrong number of rows")
        pk = cls(n, t, p, d, tuple(rows))
        reduced, _ = linalg.rref(pk.rows, F)
        if tuple(tuple(r) for r in reduced) != pk.rows:
            raise FormatError("public key matrix is not in reduced row echelon form")
        return pk


@dataclass(frozen=True)
class KeyPair:
    public: PublicKey
    code: GoppaCode
    params: Params
    alpha: int
    gamma: int

    @cached_property
    def embedding(self) -> Embedding:
        return Embedding(self.public.field, self.code.tower)

    def private_dict(self) -> dict:
        return {
            "format": "skewgoppa-secret-key",
            "version": FORMAT_VERSION,
            "params": self.params.as_dict(),
            "code": self.code.to_dict(),
        }


def load_private(data: dict) -> tuple[Params, GoppaCode]:
    if not isinstance(data, dict) or data.get("format") != "skewgoppa-secret-key":
        raise FormatError("not a secret key")
    if data.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported secret key version {data.get('version')!r}")
    try:
        params = Params(**{k: int(v) for k, v in data["params"].items()})
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise FormatError(f"malformed parameters: {exc}") from exc
    try:
        code = GoppaCode.from_dict(data.get("code") or {})
    except FormatError:
        raise
    except SkewGoppaError as exc:
        raise FormatError(f"secret key does not describe a valid code: {exc}") from exc
    return params, code


def private_parity_matrix(code: GoppaCode, emb: Embedding) -> list[list[int]]:
    """The parity-check matrix H of the code, with entries moved into standalone F."""
    return [[emb.from_L(v) for v in row] for row in code.parity_check_matrix()]


def public_from_private(
    params: Params,
    H: Sequence[Sequence[int]],
    F: FieldTower,
    rng: random.Random,
    A: Sequence[Sequence[int]] | None = None,
) -> PublicKey:
    """Nonzero rows of RREF([H; A]) for a random full-rank A completing to n - k rows."""
    n, k = params.n, params.k
    r_H = linalg.rank(H, F)
    extra = n - k - r_H
    if extra < 0:
        raise KeygenError("rank of H exceeds n - k")
    for _ in range(1 if A is not None else MAX_A_TRIES):
        block = [list(r) for r in A] if A is not None else [
            [F.random_element(rng) for _ in range(n)] for _ in range(extra)
        ]
        reduced, pivots = linalg.rref(list(H) + block, F)
        if len(pivots) == n - k:
            return PublicKey(n, params.t, params.p, params.d, tuple(tuple(r) for r in reduced[: n - k]))
    raise KeygenError("could not complete H to n - k independent rows")


def random_normal(tower: FieldTower, rng: random.Random, tries: int = 10_000) -> int:
    for _ in range(tries):
        a = tower.random_nonzero(rng)
        if tower.is_normal(a):
            return a
    raise KeygenError("no normal element found")


def random_primitive(tower: FieldTower, rng: random.Random, tries: int = 10_000) -> int:
    for _ in range(tries):
        a = tower.random_nonzero(rng)
        if tower.is_primitive(a):
            return a
    raise KeygenError("no primitive element found")


def keygen(
    params: Params,
    rng: random.Random,
    *,
    tower: FieldTower | None = None,
    alpha: int | None = None,
    gamma: int | None = None,
    points: Sequence[int] | None = None,
    g: OrePoly | None = None,
    etas: Sequence[int] | None = None,
    A: Sequence[Sequence[int]] | None = None,
    random_etas: bool = False,
) -> KeyPair:
    """Key schedule; every random choice can be injected for reproduction.

    Multipliers default to 1; random_etas draws them uniformly from L*.
    """
    params.check()
    if tower is None:
        tower = build_tower(params.p, params.d, params.m, params.s)
    elif (tower.p, tower.d, tower.m, tower.s) != (params.p, params.d, params.m, params.s):
        raise ParameterError("tower does not match the parameters")
    ring = OreRing(tower)
    if alpha is None:
        alpha = random_normal(tower, rng)
    if gamma is None:
        gamma = random_primitive(tower, rng)
    P = maximal_p_independent(tower, gamma, alpha)
    if points is None:
        if params.n > len(P):
            raise ParameterError(f"n = {params.n} exceeds the {len(P)} available points")
        pts = PointSet(tower, tuple(P[i] for i in rng.sample(range(len(P)), params.n)), params.n)
    else:
        members = set(P.points)
        if len(points) != params.n or any(a not in members for a in points):
            raise ParameterError("injected points must be n distinct members of the maximal set")
        if len(set(points)) != len(points):
            raise ParameterError("injected points must be distinct")
        pts = PointSet(tower, tuple(points), len(points))
    if g is None:
        g = make_goppa_poly(params.t, ring, rng)
    if etas is None and random_etas:
        etas = [tower.random_nonzero(rng) for _ in range(params.n)]
    code = build_code(ring, pts, etas, g)
    F = base_field(params.p, params.d)
    emb = Embedding(F, tower)
    H = private_parity_matrix(code, emb)
    pk = public_from_private(params, H, F, rng, A)
    return KeyPair(pk, code, params, alpha, gamma)


# -- encapsulation ----------------------------------------------------------------


def serialize_error(e: Sequence[int], F: FieldTower) -> bytes:
    """n as 4 little-endian bytes, then each coordinate in fixed width, little-endian."""
    width = max(1, ((F.order - 1).bit_length() + 7) // 8)
    out = bytearray(len(e).to_bytes(4, "little"))
    for v in e:
        out += int(v).to_bytes(width, "little")
    return bytes(out)


def deserialize_error(data: bytes, F: FieldTower) -> list[int]:
    width = max(1, ((F.order - 1).bit_length() + 7) // 8)
    if len(data) < 4:
        raise FormatError("truncated error vector")
    n = int.from_bytes(data[:4], "little")
    if len(data) != 4 + n * width:
        raise FormatError("error vector length does not match its header")
    out = [int.from_bytes(data[4 + i * width : 4 + (i + 1) * width], "little") for i in range(n)]
    if any(v >= F.order for v in out):
        raise FormatError("coordinate outside the field")
    return out


def hash_error(e: Sequence[int], F: FieldTower) -> bytes:
    return hashlib.shake_256(serialize_error(e, F)).digest(SECRET_BYTES)


def random_error(n: int, t: int, F: FieldTower, rng: random.Random) -> list[int]:
    """Weight exactly t: t distinct positions, uniform nonzero values."""
    e = [0] * n
    for j in rng.sample(range(n), t):
        e[j] = F.random_nonzero(rng)
    return e


def encap_with_error(pk: PublicKey, e: Sequence[int]) -> tuple[list[int], bytes]:
    if len(e) != pk.n:
        raise ParameterError("error vector has the wrong length")
    return pk.syndrome(e), hash_error(e, pk.field)


def encap(pk: PublicKey, rng: random.Random) -> tuple[list[int], bytes]:
    return encap_with_error(pk, random_error(pk.n, pk.t, pk.field, rng))


def preimage(pk: PublicKey, c: Sequence[int]) -> list[int]:
    """The y supported on the pivot columns with y H_pub^T = c."""
    if len(c) != len(pk.rows):
        raise FormatError(f"cryptogram has length {len(c)}, expected {len(pk.rows)}")
    y = [0] * pk.n
    for v, j in zip(c, pk.pivots):
        y[j] = v
    return y


def decap_error(code: GoppaCode, pk: PublicKey, c: Sequence[int], emb: Embedding | None = None) -> list[int]:
    """The error vector behind c, or InvalidCryptogram."""
    emb = emb or Embedding(pk.field, code.tower)
    y = preimage(pk, c)
    try:
        e_L = decode(code, [emb.to_L(v) for v in y])
    except UndecodableError as exc:
        raise InvalidCryptogram(str(exc)) from exc
    e = [emb.from_L(v) for v in e_L]
    # the private code is larger than the public subcode, so re-check against H_pub
    if pk.syndrome(e) != list(c):
        raise InvalidCryptogram("decoded error does not reproduce the cryptogram")
    return e


def decap(code: GoppaCode, pk: PublicKey, c: Sequence[int], emb: Embedding | None = None) -> bytes:
    return hash_error(decap_error(code, pk, c, emb), pk.field)


def cryptogram_to_dict(c: Sequence[int], pk: PublicKey) -> dict:
    return {
        "format": "skewgoppa-cryptogram",
        "version": FORMAT_VERSION,
        "c": "".join(pk.field.to_hex(v) for v in c),
    }


def cryptogram_from_dict(data: dict, pk: PublicKey) -> list[int]:
    if not isinstance(data, dict) or data.get("format") != "skewgoppa-cryptogram":
        raise FormatError("not a cryptogram")
    if data.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported cryptogram version {data.get('version')!r}")
    text = data.get("c")
    F = pk.field
    w = F.element_width()
    if not isinstance(text, str) or len(text) != w * len(pk.rows):
        raise FormatError("cryptogram has the wrong length")
    try:
        return [F.from_hex(text[i : i + w]) for i in range(0, len(text), w)]
    except ValueError as exc:
        raise FormatError(f"malformed cryptogram: {exc}") from exc


# -- generator-matrix variant -----------------------------------------------------


@dataclass(frozen=True)
class McElieceKey:
    G_pub: tuple[tuple[int, ...], ...]
    code: GoppaCode
    params: Params

    @cached_property
    def field(self) -> FieldTower:
        return base_field(self.params.p, self.params.d)

    @cached_property
    def embedding(self) -> Embedding:
        return Embedding(self.field, self.code.tower)


def random_invertible(r: int, F: FieldTower, rng: random.Random, tries: int = MAX_A_TRIES) -> list[list[int]]:
    for _ in range(tries):
        S = [[F.random_element(rng) for _ in range(r)] for _ in range(r)]
        if linalg.rank(S, F) == r:
            return S
    raise KeygenError("no invertible scrambler found")


def mceliece_keygen(params: Params, rng: random.Random, **inject) -> McElieceKey:
    """G_pub = first k rows of S G, G a basis of the code over F."""
    kp = keygen(params, rng, **inject)
    F = kp.public.field
    H = private_parity_matrix(kp.code, kp.embedding)
    G = linalg.nullspace(H, params.n, F)
    S = random_invertible(len(G), F, rng)
    SG = linalg.mat_mul(S, G, F)
    return McElieceKey(tuple(tuple(r) for r in SG[: params.k]), kp.code, params)


def mceliece_encrypt(key: McElieceKey, message: Sequence[int], e: Sequence[int]) -> list[int]:
    F = key.field
    if len(message) != len(key.G_pub):
        raise ParameterError(f"message must have {len(key.G_pub)} symbols")
    mG = linalg.vec_mat(message, key.G_pub, F)
    return [F.add(a, b) for a, b in zip(mG, e)]


def mceliece_decrypt(key: McElieceKey, y: Sequence[int]) -> list[int]:
    F, emb = key.field, key.embedding
    try:
        e_L = decode(key.code, [emb.to_L(v) for v in y])
    except UndecodableError as exc:
        raise InvalidCryptogram(str(exc)) from exc
    word = [F.sub(a, emb.from_L(b)) for a, b in zip(y, e_L)]
    m = linalg.solve(linalg.transpose(key.G_pub), word, F)
    if m is None:
        raise InvalidCryptogram("decoded word is not in the public code")
    return m
