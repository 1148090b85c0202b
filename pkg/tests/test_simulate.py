from __future__ import annotations

import csv
import io

from skewgoppa import simulate
from skewgoppa.reference import example_code

CODE = example_code()


def test_rows_are_reproducible():
    a = simulate.simulate(CODE, 50, seed=3)
    b = simulate.simulate(CODE, 50, seed=3)
    assert a == b
    assert [r.trial for r in a] == list(range(50))
    assert simulate.simulate(CODE, 50, seed=4) != a


def test_parallel_matches_serial():
    assert simulate.simulate(CODE, 40, seed=1, workers=3) == simulate.simulate(CODE, 40, seed=1)


def test_fixed_weight():
    rows = simulate.simulate(CODE, 30, seed=2, weight=2)
    assert all(r.weight == 2 for r in rows)
    assert all(r.decoded for r in rows)


def test_certificate_agrees_on_every_row():
    rows = simulate.simulate(CODE, 300, seed=7)
    for r in rows:
        assert r.certificate == (not r.alg2_failed) == r.gcld_unit
        assert r.alg3_roots_added == 0 or r.alg2_failed
    stats = simulate.summary(rows)
    assert stats["certificate_mismatches"] == 0 and stats["decode_errors"] == 0


def test_csv_layout():
    rows = simulate.simulate(CODE, 5, seed=0)
    buf = io.StringIO()
    simulate.write_csv(rows, buf)
    parsed = list(csv.DictReader(io.StringIO(buf.getvalue())))
    assert list(parsed[0]) == ["trial", "weight", "alg2_failed", "alg3_roots_added", "certificate", "gcld_unit", "decoded"]
    assert len(parsed) == 5
    assert {p["decoded"] for p in parsed} <= {"0", "1"}


def test_summary_of_nothing():
    assert simulate.summary([])["failure_rate"] == 0.0
