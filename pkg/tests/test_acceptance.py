"""Acceptance gate: one test per criterion, each recorded for the summary lines."""

from __future__ import annotations

import itertools
import random
import time

import pytest
from sympy.polys import galoistools as gt
from sympy.polys.domains import ZZ

import conftest
from helpers import RING_TOWERS, codeword_basis, random_codeword, random_poly, toy_code
from skewgoppa import kem, simulate
from skewgoppa.decoder import decode, decode_full, failure_certificate
from skewgoppa.errors import InvalidCryptogram
from skewgoppa.field_tower import build_tower
from skewgoppa.linearized import linearized_counterexample_report
from skewgoppa.ore_poly import OreRing, gcld, leea
from skewgoppa.reference import decoding_example_report, example_code, parameter_table_report


def record(n: int, ok: bool, detail: str) -> None:
    conftest.ACCEPTANCE[n] = ("PASS" if ok else "FAIL", detail)
    assert ok, detail


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def failure_text(rep) -> str:
    return "; ".join(f"{c.name}: expected {c.expected}, got {c.actual}" for c in rep.failures())


# -- 1 ---------------------------------------------------------------------------


def test_criterion_1_worked_decoding_example():
    rep, secs = timed(decoding_example_report)
    detail = f"{len(rep.checks) - len(rep.failures())}/{len(rep.checks)} checks in {secs:.2f}s"
    if not rep.ok:
        detail += " | " + failure_text(rep)
    record(1, rep.ok and secs < 5, detail)


# -- 2 ---------------------------------------------------------------------------


def test_criterion_2_linearized_counterexample():
    rep, secs = timed(linearized_counterexample_report)
    detail = f"{len(rep.checks) - len(rep.failures())}/{len(rep.checks)} checks in {secs:.2f}s"
    if not rep.ok:
        detail += " | " + failure_text(rep)
    record(2, rep.ok and secs < 1, detail)


# -- 3 ---------------------------------------------------------------------------


def test_criterion_3_parameter_tables():
    rep, secs = timed(parameter_table_report)
    detail = f"{len(rep.checks) - len(rep.failures())}/{len(rep.checks)} checks in {secs:.2f}s"
    if not rep.ok:
        detail += " | " + failure_text(rep)
    record(3, rep.ok and secs < 1, detail)


# -- 4 ---------------------------------------------------------------------------


def all_errors(code, max_weight: int):
    tw = code.tower
    F = [a for a in range(1, tw.order) if tw.in_F(a)]
    for w in range(max_weight + 1):
        for support in itertools.combinations(range(code.n), w):
            for values in itertools.product(F, repeat=w):
                e = [0] * code.n
                for j, v in zip(support, values):
                    e[j] = v
                yield e


@pytest.mark.slow
def test_criterion_4_exhaustive_decoding():
    start = time.perf_counter()
    rnd = random.Random(4)
    failures = 0
    counts = []
    # full product: 100 codewords x every error of weight <= 2, K = F_16, L = F_256
    full = toy_code(2, 4, 2, 4, 2, 12, seed=4)
    basis = codeword_basis(full)
    words = [random_codeword(full, basis, rnd) for _ in range(100)]
    errors = list(all_errors(full, 2))
    tw = full.tower
    for c in words:
        for e in errors:
            y = [tw.add(a, b) for a, b in zip(c, e)]
            failures += decode(full, y) != e
    counts.append(f"n=12 F_16<F_256: {len(words)}x{len(errors)}")
    # every error of weight <= 2 at n = 16, codewords assigned in turn
    wide = toy_code(2, 4, 2, 4, 2, 16, seed=4)
    basis = codeword_basis(wide)
    words = [random_codeword(wide, basis, rnd) for _ in range(100)]
    n_err = 0
    for i, e in enumerate(all_errors(wide, 2)):
        c = words[i % len(words)]
        y = [tw.add(a, b) for a, b in zip(c, e)]
        failures += decode(wide, y) != e
        n_err += 1
    counts.append(f"n=16 F_16<F_256: {n_err} errors over 100 codewords")
    secs = time.perf_counter() - start
    record(4, failures == 0 and secs < 600, f"{failures} failures; {'; '.join(counts)}; {secs:.0f}s")


# -- 5 ---------------------------------------------------------------------------


def leea_violations(f, g) -> int:
    bad = 0
    table = leea(f, g)
    for i, (u, v, r) in enumerate(table.rows):
        bad += u * f + v * g != r
        if i >= 1:
            bad += f.deg != table.rows[i - 1][2].deg + v.deg
        if u and v:
            bad += gcld(u, v).deg != 0
    return bad


def commutative_mismatches(p: int, pairs: int, rnd: random.Random) -> int:
    R = OreRing(build_tower(p, 1, 1, 1))
    bad = 0
    for _ in range(pairs):
        f = random_poly(R, rnd, rnd.randint(2, 8))
        g = random_poly(R, rnd, rnd.randint(1, int(f.deg)))
        s, t, h = gt.gf_gcdex([ZZ(c) for c in reversed(f.coeffs)], [ZZ(c) for c in reversed(g.coeffs)], p, ZZ)
        u, v, r = leea(f, g).rows[-2]
        k = pow(r.lc, -1, p)
        got = tuple(tuple(reversed((x * k).coeffs)) for x in (u, v, r))
        want = tuple(tuple(int(c) for c in x) for x in (s, t, h))
        bad += got != want
    return bad


@pytest.mark.slow
def test_criterion_5_euclidean_invariants():
    start = time.perf_counter()
    rnd = random.Random(5)
    towers = RING_TOWERS[:4]
    per_tower = 2500
    bad = 0
    for tw in towers:
        R = OreRing(tw)
        for _ in range(per_tower):
            f = random_poly(R, rnd, rnd.randint(1, 7))
            g = random_poly(R, rnd, rnd.randint(0, int(f.deg)))
            bad += leea_violations(f, g)
    oracle_bad = commutative_mismatches(5, 500, rnd) + commutative_mismatches(7, 500, rnd)
    secs = time.perf_counter() - start
    detail = (
        f"{len(towers) * per_tower} pairs over {len(towers)} towers, {bad} identity violations; "
        f"sigma=id oracle 1000 pairs, {oracle_bad} mismatches; {secs:.0f}s"
    )
    record(5, bad == 0 and oracle_bad == 0 and secs < 120, detail)


# -- 6 ---------------------------------------------------------------------------


@pytest.mark.slow
def test_criterion_6_failure_certificate():
    start = time.perf_counter()
    code = example_code()
    rows = simulate.simulate(code, 10_000, seed=6)
    mismatches = sum(not (r.certificate == (not r.alg2_failed) == r.gcld_unit) for r in rows)
    undecoded = sum(not r.decoded for r in rows)
    stats = simulate.summary(rows)
    z = lambda k: code.tower.pow(2, k)  # noqa: E731
    e = [0] * 16
    e[0], e[9] = z(249), 1
    out = decode_full(code, e)
    published = out.alg2_failed and not failure_certificate(code, e) and gcld(out.locator, out.evaluator).deg > 0
    secs = time.perf_counter() - start
    detail = (
        f"{len(rows)} trials, {mismatches} equivalence mismatches, {undecoded} decode errors, "
        f"measured failure rate {stats['failure_rate']:.4f}; published error certified failure: {published}; {secs:.0f}s"
    )
    record(6, mismatches == 0 and undecoded == 0 and published and secs < 300, detail)


# -- 7 ---------------------------------------------------------------------------


@pytest.mark.slow
def test_criterion_7_kem_roundtrip_and_tamper():
    start = time.perf_counter()
    params = kem.Params(256, 8, 2, 4, 4, 8)
    kp = kem.keygen(params, random.Random(7))
    pk, code = kp.public, kp.code
    emb = kp.embedding
    F = pk.field
    rnd = random.Random(70)
    mismatched = 0
    for _ in range(1000):
        c, ss = kem.encap(pk, rnd)
        got = kem.decap(code, pk, c, emb)
        mismatched += got != ss or len(got) != 32
    accepted = 0
    for _ in range(100):
        c, _ = kem.encap(pk, rnd)
        bad = list(c)
        for j in rnd.sample(range(len(bad)), 2 * params.t + 1):
            bad[j] = F.add(bad[j], F.random_nonzero(rnd))
        try:
            kem.decap(code, pk, bad, emb)
            accepted += 1
        except InvalidCryptogram:
            pass
    secs = time.perf_counter() - start
    detail = (
        f"n=256 t=8 q=2^4 m=4 delta=8: {1000 - mismatched}/1000 secrets equal, "
        f"{100 - accepted}/100 tampered cryptograms rejected; {secs:.0f}s"
    )
    record(7, mismatched == 0 and accepted == 0 and secs < 300, detail)


# -- 8 ---------------------------------------------------------------------------


def test_criterion_8_full_scale_claims():
    reason = "not reproducible at desk scale: full-size parameter sets and security claims (table check covered by criterion 3)"
    conftest.ACCEPTANCE[8] = ("SKIP", reason)
    pytest.skip(reason)
