"""Key-equation decoding of skew Goppa codes.

The decoder runs the left extended Euclidean algorithm on (g, s) until the
remainder degree drops below t, reads the error positions off the right
roots of the resulting locator candidate, and, when that candidate has
fewer roots among the positional points than its degree, grows it by
lclm degree stabilization until it is the true locator. Error values are
then solved over F.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Sequence

from . import linalg
from .errors import ParameterError, UndecodableError
from .goppa import GoppaCode, syndrome
from .ore_poly import OrePoly, eval_right, l_quo, lclm_linear, leea

log = logging.getLogger(__name__)


@dataclass
class DecodeState:
    v: OrePoly
    r: OrePoly
    pos: list[int]
    other: list[int]
    roots_added: int = 0
    trace: list[str] = field(default_factory=list)

    @property
    def failed(self) -> bool:
        return self.v.deg > len(self.pos)


@dataclass
class DecodeOutcome:
    """Everything a decode produced, for callers that need more than e."""

    error: list[int]
    syndrome: OrePoly
    v_I: OrePoly | None = None
    r_I: OrePoly | None = None
    locator: OrePoly | None = None
    evaluator: OrePoly | None = None
    positions: list[int] = field(default_factory=list)
    alg2_failed: bool = False
    roots_added: int = 0
    trace: list[str] = field(default_factory=list)


def solve_key_equation(code: GoppaCode, s: OrePoly, trace: list[str] | None = None) -> tuple[OrePoly, OrePoly]:
    """(v_I, r_I) from the left Euclidean run on (g, s) truncated at degree t."""
    if not s.coeffs:
        raise ParameterError("zero syndrome has no key equation to solve")
    table = leea(code.g, s, stop_deg=code.t)
    if trace is not None:
        for i, (u, v, r) in enumerate(table.rows):
            trace.append(f"leea row {i}: v = {v.to_text()} ; r = {r.to_text()}")
    _, v, r = table.last
    return v, r


def find_positions(code: GoppaCode, v: OrePoly) -> tuple[list[int], list[int]]:
    """Split indices into right roots of v among the points and the rest."""
    pos, other = [], []
    for i, a in enumerate(code.points.points):
        (pos if eval_right(v, a) == 0 else other).append(i)
    return pos, other


def resolve_failure(code: GoppaCode, state: DecodeState) -> DecodeState:
    """Grow v until it has deg v roots among the positional points.

    Scans the remaining points in ascending order, accumulating
    f <- lclm(f, x - a_i) until the degree stops growing; the index that
    failed to raise the degree is an error position.
    """
    pts = code.points.points
    n = code.n
    v, r = state.v, state.r
    pos, other = list(state.pos), list(state.other)
    added = state.roots_added
    trace = state.trace
    while v.deg > len(pos):
        f, e = v, v.deg
        if not other:
            raise UndecodableError("no further locator roots among the positional points")
        i = other.pop(0)
        f = lclm_linear(f, pts[i])
        while f.deg > e:
            e += 1
            if not other:
                raise UndecodableError("lclm degree never stabilized")
            i = other.pop(0)
            f = lclm_linear(f, pts[i])
        pos.append(i)
        pset = set(pos)
        other = [k for k in range(n) if k not in pset]
        v_old = v
        v = lclm_linear(v_old, pts[i])
        r = l_quo(v, v_old) * r
        added += 1
        trace.append(f"root added: index {i}; v = {v.to_text()}")
        for k in list(other):
            if eval_right(v, pts[k]) == 0:
                pos.append(k)
                other.remove(k)
        if v.deg > code.t:
            raise UndecodableError("locator degree exceeds t")
    pos.sort()
    return DecodeState(v, r, pos, other, added, trace)


def solve_values(code: GoppaCode, pos: Sequence[int], lam: OrePoly, omega: OrePoly) -> dict[int, int]:
    """Error values e_j in F* with omega = sum_j rho_j eta_j e_j.

    Coefficient l of the identity is turned F-linear by applying sigma^-l,
    then expanded into F-coordinates.
    """
    tw = code.tower
    nu = len(pos)
    if lam.deg != nu:
        raise UndecodableError("locator degree does not match the number of positions")
    if nu == 0:
        return {}
    rhos = [l_quo(lam, code.ring.linear(code.points[j])) for j in pos]
    matrix: list[list[int]] = []
    rhs: list[int] = []
    for l in range(nu):
        cols = [
            tw.coordinates(tw.mul(tw.sigma(rho[l], -l), code.etas[j]))
            for rho, j in zip(rhos, pos)
        ]
        target = tw.coordinates(tw.sigma(omega[l], -l))
        for k in range(tw.m):
            matrix.append([c[k] for c in cols])
            rhs.append(target[k])
    if linalg.rank(matrix, tw) < nu:
        raise UndecodableError("error-value system is singular")
    sol = linalg.solve(matrix, rhs, tw)
    if sol is None:
        raise UndecodableError("error-value system is inconsistent")
    if any(v == 0 for v in sol):
        raise UndecodableError("an error value vanished")
    return dict(zip(pos, sol))


def decode_full(code: GoppaCode, y: Sequence[int], trace: bool = False) -> DecodeOutcome:
    """Decode y and report the intermediate objects."""
    s = syndrome(code, y)
    n = code.n
    if not s.coeffs:
        return DecodeOutcome([0] * n, s)
    lines: list[str] = []
    v_I, r_I = solve_key_equation(code, s, lines if trace else None)
    pos, other = find_positions(code, v_I)
    state = DecodeState(v_I, r_I, pos, other, trace=lines)
    alg2_failed = state.failed
    if alg2_failed:
        log.debug("decoding failure: %d roots for degree %s", len(pos), v_I.deg)
        state = resolve_failure(code, state)
    tw = code.tower
    scale = tw.inv(state.v.lc)
    lam, omega = state.v.left_scale(scale), state.r.left_scale(scale)
    values = solve_values(code, state.pos, lam, omega)
    e = [0] * n
    for j, val in values.items():
        e[j] = val
    if len(values) > code.t or syndrome(code, e) != s:
        raise UndecodableError("no error of weight <= t explains the received word")
    return DecodeOutcome(
        error=e,
        syndrome=s,
        v_I=v_I,
        r_I=r_I,
        locator=lam,
        evaluator=omega,
        positions=list(state.pos),
        alg2_failed=alg2_failed,
        roots_added=state.roots_added,
        trace=lines,
    )


def decode(code: GoppaCode, y: Sequence[int]) -> list[int]:
    """The error e of weight <= t with y - e in the code."""
    return decode_full(code, y).error


def certificate_matrix(code: GoppaCode, e: Sequence[int]) -> list[list[int]]:
    """Entries N_-i(a_k) sigma^-i(eta_k) sigma^-i(e_k) over the support k of e."""
    tw = code.tower
    support = [k for k, v in enumerate(e) if v]
    nu = len(support)
    return [
        [
            tw.mul(
                tw.partial_norm(code.points[k], -i),
                tw.sigma(tw.mul(code.etas[k], e[k]), -i),
            )
            for k in support
        ]
        for i in range(nu)
    ]


def failure_certificate(code: GoppaCode, e: Sequence[int]) -> bool:
    """True iff gcld(omega, lambda) = 1, i.e. the Euclidean step alone finds the locator."""
    if not any(e):
        raise ParameterError("certificate needs a nonzero error")
    return linalg.determinant(certificate_matrix(code, e), code.tower) != 0
