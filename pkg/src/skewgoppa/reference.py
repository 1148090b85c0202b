"""Published reference instances, embedded as data, and their recomputation.

Field elements are written as exponents of the generator z (or c), and
polynomials as exponent tuples with the constant term first; None stands
for a zero coefficient.
"""

from __future__ import annotations

import random
from typing import Sequence

from . import linalg
from .decoder import decode_full, failure_certificate
from .errors import SkewGoppaError
from .field_tower import FieldTower, build_tower
from .goppa import GoppaCode, build_code
from .kem import (
    Embedding,
    KeyPair,
    Params,
    base_field,
    decap_error,
    encap_with_error,
    keygen,
    preimage,
    private_parity_matrix,
    search_parameters,
)
from .linearized import linearized_counterexample_report
from .ore_poly import OrePoly, OreRing, eval_right, lclm_linear
from .pindep import is_p_independent, maximal_p_independent
from .report import Report, guarded

# F = L = F_2[z]/(z^8 + z^4 + z^3 + z^2 + 1), sigma = tau^4, n = 16, t = 2
DECODING_EXAMPLE: dict[str, object] = {
    "modulus": (1, 0, 1, 1, 1, 0, 0, 0, 1),
    "s": 4,
    "n": 16,
    "t": 2,
    "K_generator": 34,
    "alpha": 37,
    "gamma": 41,
    "points": (45, 159, 68, 233, 110, 77, 27, 200, 37, 210, 201, 168, 151, 127, 251, 192),
    # (power of gamma, j) with point = gamma^i sigma^(j+1)(alpha) / sigma^j(alpha)
    "point_labels": (
        (0, 0), (9, 0), (13, 0), (13, 1), (10, 1), (7, 0), (12, 0), (10, 0),
        (2, 1), (0, 1), (6, 1), (3, 0), (11, 1), (2, 0), (1, 1), (12, 1),
    ),
    "g": (68, None, 238, None, 0),
    "h": (
        (142, 187, 91, 136), (130, 136, 62, 68), (17, 204, 170, 102), (107, 204, 5, 102),
        (9, 34, 60, 85), (161, 204, 195, 238), (92, 170, 7, 85), (174, 34, 225, 85),
        (14, 187, 252, 170), (232, 187, 181, 136), (139, 238, 3, 102), (19, 136, 19, 136),
        (155, 34, 36, 170), (179, 187, 162, 170), (157, 221, 242, 51), (182, 170, 97, 85),
    ),
    # tails of the 8 x 16 public matrix; the left block is the identity
    "H_pub_tail": (
        (142, 92, 126, 156, 187, 178, 234, 88),
        (73, 103, 157, 113, 188, 253, 222, 152),
        (109, 109, 64, 165, 131, 204, 138, 145),
        (180, 78, 202, 230, 82, 81, 185, 224),
        (70, 247, 51, 65, 49, 162, 111, 36),
        (119, 236, 50, 243, 136, 56, 133, 225),
        (89, 172, 152, 209, 234, 22, 231, 96),
        (70, 152, 157, 32, 247, 180, 172, 106),
    ),
    "error": {0: 249, 9: 0},
    "cryptogram": (133, 103, 109, 78, 247, 236, 172, 152),
    "syndrome": (132, 87, 81, 36),
    "v_I": (174, 189),
    "r_I": (119,),
    "v_I_root": 240,
    "root_added": 9,
    "locator": (0, None, 0),
    "evaluator": (200, 155),
    "positions": (0, 9),
}

PARAMETER_TABLES: dict[str, object] = {
    "table_4096_25_2_1": (
        (24, 12), (26, 13), (28, 14), (30, 15), (32, 16), (33, 11),
        (34, 17), (36, 12), (36, 18), (38, 19), (39, 13), (40, 20),
    ),
    "count_2560_22_2_4": 65,
    "m_range_2560_22_2_4": (12, 29),
    "delta_range_2560_22_2_4": (12, 58),
}


class Exponents:
    """z^k <-> int conversion for a field with primitive z = 2."""

    def __init__(self, tower: FieldTower, base: int = 2) -> None:
        self.tower = tower
        self.pow = []
        self.log: dict[int, int] = {}
        x = 1
        for k in range(tower.order - 1):
            self.pow.append(x)
            self.log.setdefault(x, k)
            x = tower.mul(x, base)

    def __call__(self, k: int | None) -> int:
        return 0 if k is None else self.pow[k % len(self.pow)]

    def of(self, a: int) -> int | None:
        return None if a == 0 else self.log[a]

    def poly(self, ring: OreRing, exps: Sequence[int | None]) -> OrePoly:
        return ring.poly(self(k) for k in exps)

    def exps(self, f: OrePoly | Sequence[int]) -> tuple[int | None, ...]:
        coeffs = f.coeffs if isinstance(f, OrePoly) else f
        return tuple(self.of(c) for c in coeffs)


def example_tower(constants: dict | None = None) -> FieldTower:
    k = constants or DECODING_EXAMPLE
    return build_tower(2, 8, 1, k["s"], list(k["modulus"]))


def example_code(constants: dict | None = None) -> GoppaCode:
    k = constants or DECODING_EXAMPLE
    tw = example_tower(k)
    Z = Exponents(tw)
    ring = OreRing(tw)
    return build_code(ring, [Z(a) for a in k["points"]], None, Z.poly(ring, k["g"]))


def example_public_rows(constants: dict | None = None) -> list[list[int]]:
    k = constants or DECODING_EXAMPLE
    Z = Exponents(example_tower(k))
    rows = []
    for i, tail in enumerate(k["H_pub_tail"]):
        rows.append([int(j == i) for j in range(8)] + [Z(a) for a in tail])
    return rows


def completing_rows(H: Sequence[Sequence[int]], candidates: Sequence[Sequence[int]], F: FieldTower) -> list[list[int]]:
    """Greedy choice of candidate rows that raise the rank of H."""
    chosen: list[list[int]] = []
    r = linalg.rank(H, F)
    for row in candidates:
        if linalg.rank(list(H) + chosen + [list(row)], F) > r:
            chosen.append(list(row))
            r += 1
    return chosen


def example_keypair(constants: dict | None = None) -> KeyPair:
    """The example's keys, with the random block A taken from the published matrix.

    RREF([H; A]) reproduces the published matrix exactly iff the row space
    of H lies inside it, which makes the comparison a real check.
    """
    k = constants or DECODING_EXAMPLE
    tw = example_tower(k)
    Z = Exponents(tw)
    ring = OreRing(tw)
    code = example_code(k)
    F = base_field(2, 8)
    H = private_parity_matrix(code, Embedding(F, tw))
    A = completing_rows(H, example_public_rows(k), F)
    params = Params(k["n"], k["t"], 2, 8, 1, k["s"])
    return keygen(
        params,
        random.Random(0),
        tower=tw,
        alpha=Z(k["alpha"]),
        gamma=Z(k["gamma"]),
        points=[Z(a) for a in k["points"]],
        g=Z.poly(ring, k["g"]),
        A=A,
    )


def decoding_example_report(constants: dict | None = None) -> Report:
    k = dict(DECODING_EXAMPLE)
    if constants:
        k.update(constants)
    return guarded(_decoding_checks, k)


def _decoding_checks(rep: Report, k: dict) -> None:
    tw = example_tower(k)
    Z = Exponents(tw)
    ring = OreRing(tw)
    n = k["n"]

    w = Z(k["K_generator"])
    rep.add("K generator is a root of w^4 + w + 1", 0, tw.add(tw.add(tw.pow(w, 4), w), 1))
    rep.add("(delta, mu)", (4, 2), (tw.delta, tw.mu))
    alpha, gamma = Z(k["alpha"]), Z(k["gamma"])
    rep.add("alpha is normal", True, tw.is_normal(alpha))
    rep.add("gamma is primitive", True, tw.is_primitive(gamma))

    ratios = [tw.div(tw.sigma(alpha, j + 1), tw.sigma(alpha, j)) for j in range(tw.mu)]
    labelled = tuple(Z.of(tw.mul(tw.pow(gamma, i), ratios[j])) for i, j in k["point_labels"])
    rep.add("points from their gamma / sigma labels", tuple(k["points"]), labelled)
    P = maximal_p_independent(tw, gamma, alpha)
    rep.add("points lie in the maximal P-independent set", True, all(Z(a) in P.points for a in k["points"]))
    rep.add("points are P-independent", True, is_p_independent(tw, [Z(a) for a in k["points"]]))

    code = example_code(k)
    rep.add("parity polynomials h_0..h_15", tuple(tuple(h) for h in k["h"]), tuple(Z.exps(h) for h in code.parity_polys))

    expected_pub = example_public_rows(k)
    try:
        kp = example_keypair(k)
    except SkewGoppaError as exc:
        # the published rows cannot complete H; nothing downstream is comparable
        rep.add("public matrix H_pub", "RREF([H; A]) with A from the published rows", f"{type(exc).__name__}: {exc}", False)
        return
    rep.add(
        "public matrix H_pub",
        [[Z.of(v) for v in r] for r in expected_pub],
        [[Z.of(v) for v in r] for r in kp.public.rows],
    )

    e = [0] * n
    for pos, a in k["error"].items():
        e[pos] = Z(a)
    c, _ = encap_with_error(kp.public, e)
    rep.add("cryptogram c = e H_pub^T", tuple(k["cryptogram"]), tuple(Z.of(v) for v in c))
    y = preimage(kp.public, [Z(a) for a in k["cryptogram"]])
    rep.add(
        "pivot preimage y",
        tuple(k["cryptogram"]) + (None,) * (n - 8),
        tuple(Z.of(v) for v in y),
    )

    out = decode_full(code, y)
    rep.add("syndrome s", tuple(k["syndrome"]), Z.exps(out.syndrome))
    rep.add("v_I", tuple(k["v_I"]), Z.exps(out.v_I))
    rep.add("r_I", tuple(k["r_I"]), Z.exps(out.r_I))
    root = Z(k["v_I_root"])
    rep.add("v_I has the right root z^240", 0, eval_right(out.v_I, root))
    rep.add("z^240 is not a positional point", False, root in code.points.points)
    rep.add("decoding failure detected", True, out.alg2_failed)
    grown = lclm_linear(out.v_I, code.points[k["root_added"]])
    rep.add("lclm(v_I, x - alpha_9)", tuple(k["locator"]), Z.exps(grown.left_monic()))
    rep.add("locator lambda", tuple(k["locator"]), Z.exps(out.locator))
    rep.add("evaluator omega", tuple(k["evaluator"]), Z.exps(out.evaluator))
    rep.add("error positions", tuple(k["positions"]), tuple(out.positions))
    rep.add(
        "error values",
        tuple(k["error"].get(p) for p in k["positions"]),
        tuple(Z.of(out.error[p]) for p in k["positions"]),
    )
    rep.add("determinant certificate flags the failure", False, failure_certificate(code, e))
    rep.add("decapsulation recovers e", [Z.of(v) for v in e], [Z.of(v) for v in decap_error(code, kp.public, c)])


def parameter_table_report(constants: dict | None = None) -> Report:
    k = dict(PARAMETER_TABLES)
    if constants:
        k.update(constants)
    return guarded(_parameter_checks, k)


def _parameter_checks(rep: Report, k: dict) -> None:
    rep.add("(m, delta) pairs for n=4096, t=25, q=2", list(k["table_4096_25_2_1"]), search_parameters(4096, 25, 2, 1))
    pairs = search_parameters(2560, 22, 2, 4)
    rep.add("number of pairs for n=2560, t=22, q=2^4", k["count_2560_22_2_4"], len(pairs))
    rep.add("m range for n=2560, t=22, q=2^4", k["m_range_2560_22_2_4"], (min(m for m, _ in pairs), max(m for m, _ in pairs)))
    lo, hi = k["delta_range_2560_22_2_4"]
    rep.add(
        "delta range for n=2560, t=22, q=2^4",
        (lo, hi),
        (min(d for _, d in pairs), max(d for _, d in pairs)),
    )


def verify_all() -> dict[str, Report]:
    return {
        "linearized-counterexample": linearized_counterexample_report(),
        "decoding-example": decoding_example_report(),
        "parameter-tables": parameter_table_report(),
    }
