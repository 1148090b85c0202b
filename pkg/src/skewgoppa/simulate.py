"""Monte Carlo measurement of decoding failures."""

from __future__ import annotations

import csv
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import astuple, dataclass, fields
from typing import IO, Iterable

from .decoder import decode_full, failure_certificate
from .goppa import GoppaCode
from .ore_poly import gcld


@dataclass(frozen=True)
class TrialRow:
    trial: int
    weight: int
    alg2_failed: bool
    alg3_roots_added: int
    certificate: bool
    gcld_unit: bool
    decoded: bool


def trial_rng(seed: int, idx: int) -> random.Random:
    return random.Random(f"{seed}:{idx}")


def random_error(code: GoppaCode, rng: random.Random, weight: int | None = None) -> list[int]:
    """Weight uniform in 1..t unless given; positions and nonzero F values uniform."""
    tw = code.tower
    w = rng.randint(1, code.t) if weight is None else weight
    e = [0] * code.n
    for j in rng.sample(range(code.n), w):
        e[j] = tw.random_F(rng, nonzero=True)
    return e


def run_trial(code: GoppaCode, idx: int, seed: int, weight: int | None = None) -> TrialRow:
    e = random_error(code, trial_rng(seed, idx), weight)
    out = decode_full(code, e)
    unit = gcld(out.locator, out.evaluator).deg == 0
    return TrialRow(
        idx,
        sum(1 for v in e if v),
        out.alg2_failed,
        out.roots_added,
        failure_certificate(code, e),
        unit,
        out.error == e,
    )


def _run_chunk(args: tuple[GoppaCode, list[int], int, int | None]) -> list[TrialRow]:
    code, idxs, seed, weight = args
    return [run_trial(code, i, seed, weight) for i in idxs]


def simulate(
    code: GoppaCode,
    trials: int,
    seed: int,
    weight: int | None = None,
    workers: int = 1,
) -> list[TrialRow]:
    """Rows in trial order; every trial has its own (seed, index) stream."""
    if workers <= 1:
        return [run_trial(code, i, seed, weight) for i in range(trials)]
    chunks = [list(range(i, trials, workers)) for i in range(workers)]
    with ProcessPoolExecutor(workers) as pool:
        parts = list(pool.map(_run_chunk, [(code, c, seed, weight) for c in chunks]))
    rows = [r for part in parts for r in part]
    return sorted(rows, key=lambda r: r.trial)


def write_csv(rows: Iterable[TrialRow], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow([f.name for f in fields(TrialRow)])
    for r in rows:
        w.writerow([int(v) if isinstance(v, bool) else v for v in astuple(r)])


def summary(rows: list[TrialRow]) -> dict[str, float]:
    n = len(rows)
    failures = sum(r.alg2_failed for r in rows)
    return {
        "trials": n,
        "failures": failures,
        "failure_rate": failures / n if n else 0.0,
        "certificate_mismatches": sum(r.certificate == r.alg2_failed for r in rows),
        "decode_errors": sum(not r.decoded for r in rows),
    }
