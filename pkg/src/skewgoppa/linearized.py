"""Linearized polynomials sum c_i x^(q^i) and their Ore-ring image L[y; tau_q].

The coefficient-preserving map sum c_i x^(q^i) -> sum c_i y^i turns
composition into Ore multiplication. The module also carries a fixed
instance showing that an older linearized-Goppa key equation fails, together
with the corrected equation on an invariant modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotCoprimeError, RingMismatchError
from .field_tower import FieldTower, build_tower
from .ore_poly import OrePoly, OreRing, l_divmod, l_quo, l_rem, lclm, lclm_many, r_rem, reea
from .report import Report, guarded


@dataclass(frozen=True)
class LinearizedPoly:
    """sum_i coeffs[i] x^(q^i) over the field L of `tower`, with q = p^s."""

    tower: FieldTower
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def q(self) -> int:
        return self.tower.p**self.tower.s

    @property
    def q_degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __call__(self, a: int) -> int:
        """Evaluate by exponent sums: sum c_i a^(q^i)."""
        tw = self.tower
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c:
                acc = tw.add(acc, tw.mul(c, tw.pow(a, self.q**i)))
        return acc

    def __add__(self, other: LinearizedPoly) -> LinearizedPoly:
        _same(self, other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = a + (0,) * (n - len(a))
        b = b + (0,) * (n - len(b))
        return LinearizedPoly(self.tower, tuple(self.tower.add(x, y) for x, y in zip(a, b)))

    def to_text(self, base: int | None = None, names: str = "c") -> str:
        """Text with coefficients as powers of `base` when given, hex otherwise."""
        tw = self.tower
        logs = _log_table(tw, base) if base is not None else None
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            coef = f"{names}^{logs[c]}" if logs is not None else tw.to_hex(c)
            parts.append(f"{coef}*x^({self.q}^{i})")
        return " + ".join(parts) if parts else "0"


def _same(f: LinearizedPoly, g: LinearizedPoly) -> None:
    if f.tower != g.tower:
        raise RingMismatchError("linearized polynomials live over different fields")


def _log_table(tw: FieldTower, base: int) -> dict[int, int]:
    logs, x = {}, 1
    for k in range(tw.order - 1):
        logs.setdefault(x, k)
        x = tw.mul(x, base)
    return logs


def lin_to_ore(f: LinearizedPoly, ring: OreRing) -> OrePoly:
    if ring.tower != f.tower or ring.derivation is not None:
        raise RingMismatchError("target ring must be L[y; tau_q] with zero derivation")
    return ring.poly(f.coeffs)


def ore_to_lin(f: OrePoly) -> LinearizedPoly:
    if f.ring.derivation is not None:
        raise RingMismatchError("only derivation-free Ore polynomials are linearized")
    return LinearizedPoly(f.ring.tower, f.coeffs)


def lin_compose(f: LinearizedPoly, g: LinearizedPoly) -> LinearizedPoly:
    """f o g, computed from (c x^(q^i)) o (d x^(q^j)) = c d^(q^i) x^(q^(i+j))."""
    _same(f, g)
    tw = f.tower
    if not f.coeffs or not g.coeffs:
        return LinearizedPoly(tw, ())
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, c in enumerate(f.coeffs):
        if c:
            for j, d in enumerate(g.coeffs):
                if d:
                    out[i + j] = tw.add(out[i + j], tw.mul(c, tw.sigma(d, i)))
    return LinearizedPoly(tw, tuple(out))


def apply_ore(f: OrePoly, a: int) -> int:
    """The q-linear map of f applied to a via repeated Frobenius."""
    tw = f.ring.tower
    acc, power = 0, a
    for c in f.coeffs:
        if c:
            acc = tw.add(acc, tw.mul(c, power))
        power = tw.sigma(power, 1)
    return acc


def right_inverse_mod(f: OrePoly, modulus: OrePoly) -> OrePoly:
    """h with deg h < deg modulus and f h - 1 in modulus R.

    Read off the right extended Euclidean run f u + modulus v = r.
    """
    table = reea(f, modulus)
    u, _, r = table.rows[-2]
    if r.deg != 0:
        raise NotCoprimeError("f and the modulus share a nontrivial left factor")
    return u.right_scale(f.ring.tower.inv(r.coeffs[0]))


# -- the fixed counterexample ----------------------------------------------------

# F_512 = F_2[c]/(c^9 + c^4 + 1), F_8 = F_2[b]/(b^3 + b + 1), b -> c^292.
# Field elements are recorded as exponents of c.
COUNTEREXAMPLE_CONSTANTS: dict[str, object] = {
    "modulus": (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    "b_image": 292,
    "g": (479, 224, 232, 158, 14, 60, 121, 267),
    "L": (377, 53, 413, 414, 15, 0),
    "r": (454, 194, 402, 117, 297, 353, 90, 178),
    "error_b": (1, 6),
    "error_c": (292, 219),
    "inverse_1": (384, 280, 334, 164, 59),
    "inverse_2": (189, 505, 410, 336, 296),
    "S": (436, 149, 378, 165, 226),
    "sigma": (225, 81, 0),
    "composition": (456, 346, 0),
    "omega": (193, 438),
    "sigma_S_mod_L": (450, 301, 32, 76, 507),
}


def counterexample_tower(d: int = 1, modulus: Sequence[int] | None = None) -> FieldTower:
    """F_512 with sigma = tau_2, over F_2 (d = 1) or F_8 (d = 3)."""
    return build_tower(2, d, 9 // d, 1, list(modulus or COUNTEREXAMPLE_CONSTANTS["modulus"]))


def _poly_from_exponents(ring: OreRing, exps: Sequence[int], c: int = 2) -> OrePoly:
    # the last exponent of a monic polynomial is 0, meaning coefficient 1
    tw = ring.tower
    return ring.poly(tw.pow(c, e) for e in exps)


def _exponents(f: OrePoly, logs: dict[int, int]) -> str:
    return "(" + ", ".join(str(logs[c]) if c else "-" for c in f.coeffs) + ")"


def _exp_text(exps: Iterable[int]) -> str:
    return "(" + ", ".join(str(e) for e in exps) + ")"


def linearized_counterexample_report(constants: dict[str, object] | None = None) -> Report:
    """Recompute every display of the linearized counterexample.

    Polynomials are compared as tuples of c-exponents, constant term first.
    Pass a modified copy of COUNTEREXAMPLE_CONSTANTS to exercise the failure path.
    """
    k = dict(COUNTEREXAMPLE_CONSTANTS)
    if constants:
        k.update(constants)
    return guarded(_counterexample_checks, k)


def _counterexample_checks(rep: Report, k: dict) -> None:
    tw = counterexample_tower(1, k["modulus"])
    R = OreRing(tw)
    C = lambda e: tw.pow(2, e)  # noqa: E731
    logs = _log_table(tw, 2)

    b = C(k["b_image"])
    rep.add("b image is a root of b^3 + b + 1", "0", str(tw.add(tw.add(tw.pow(b, 3), b), 1)))

    gs = [C(e) for e in k["g"]]
    lin = [R.linear(g) for g in gs]
    Lx = _poly_from_exponents(R, k["L"])
    rs = []
    for f in lin:
        _, r = l_divmod(Lx, f)
        rs.append(logs[r.coeffs[0]] if r.coeffs else None)
    rep.add("remainders r_i of L by x^2 - g_i x", _exp_text(k["r"]), _exp_text(rs))

    inv1 = right_inverse_mod(lin[0], Lx)
    inv2 = right_inverse_mod(lin[1], Lx)
    rep.add("inverse of x^2 - g_1 x", _exp_text(k["inverse_1"]), _exponents(inv1, logs))
    rep.add("inverse of x^2 - g_2 x", _exp_text(k["inverse_2"]), _exponents(inv2, logs))
    pairs = ((lin[0], inv1), (lin[1], inv2))
    rep.add(
        "f o f^-1 - 1 lies in L o R",
        "True",
        str(all(_in_right_ideal(f * h - 1, Lx) for f, h in pairs)),
    )

    e = [C(x) for x in k["error_c"]]
    rep.add(
        "error embedded in F_512",
        _exp_text(k["error_c"]),
        _exp_text(logs[tw.pow(b, j)] for j in k["error_b"]),
    )

    S = inv1 * e[0] + inv2 * e[1]
    rep.add("syndrome S", _exp_text(k["S"]), _exponents(S, logs))

    sigma = lclm(lin[0], lin[1])
    rep.add("locator sigma = lclm", _exp_text(k["sigma"]), _exponents(sigma, logs))

    comp = ore_to_lin(lin[1] * lin[0])
    comp_lin = lin_compose(ore_to_lin(lin[1]), ore_to_lin(lin[0]))
    rep.add(
        "composition (x^2 - g_2 x) o (x^2 - g_1 x)",
        _exp_text(k["composition"]),
        _exponents(lin_to_ore(comp_lin, R), logs),
    )
    rep.add("composition differs from sigma", "True", str(lin_to_ore(comp, R) != sigma))

    omega = lin[1].left_scale(e[0]) + lin[0].left_scale(e[1])
    rep.add("evaluator omega", _exp_text(k["omega"]), _exponents(omega, logs))

    _, sS = l_divmod(sigma * S, Lx)
    rep.add("sigma o S reduced by L", _exp_text(k["sigma_S_mod_L"]), _exponents(sS, logs))
    rep.add("sigma o S mod L differs from omega", "True", str(sS != omega))

    ok, detail = corrected_key_equation()
    rep.add("corrected key equation on an invariant modulus", "True", str(ok) + detail, ok)


def _in_right_ideal(f: OrePoly, modulus: OrePoly) -> bool:
    """Whether f lies in modulus R."""
    return not r_rem(f, modulus).coeffs


def corrected_key_equation() -> tuple[bool, str]:
    """omega = sum rho_i e_i satisfies omega - lambda s in R G for invariant G.

    Uses the same error over F_512[y; tau_2] with G = y^18 + y^9 + 1, a
    central polynomial, as a skew Goppa modulus over F_8. The eight listed
    g_i span only a 7-dimensional F_2-space (g_2+g_3+g_4+g_6+g_8 = 0), so
    g_8 is left out to keep the points P-independent.
    """
    from .decoder import decode
    from .goppa import build_code

    tw = counterexample_tower(3)
    R = OreRing(tw)
    C = lambda e: tw.pow(2, e)  # noqa: E731
    G = R.poly([1] + [0] * 8 + [1] + [0] * 8 + [1])
    pts = [C(e) for e in COUNTEREXAMPLE_CONSTANTS["g"][:7]]
    code = build_code(R, pts, None, G)
    err = [0] * code.n
    for i, x in enumerate(COUNTEREXAMPLE_CONSTANTS["error_c"]):
        err[i] = C(x)
    s = code.syndrome(err)
    support = [i for i, v in enumerate(err) if v]
    lam = lclm_many([R.linear(pts[i]) for i in support])
    omega = R.zero
    for i in support:
        rho = l_quo(lam, R.linear(pts[i]))
        omega = omega + rho * err[i]
    holds = not l_rem(omega - lam * s, G).coeffs
    decoded = decode(code, err) == err
    detail = "" if holds and decoded else f" (key equation {holds}, decode {decoded})"
    return holds and decoded, detail
