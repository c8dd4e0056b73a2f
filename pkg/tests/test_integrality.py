import json
from fractions import Fraction
from math import gcd

import pytest

from apsum.integrality import (
    F_val,
    IntegralityReport,
    disagreements,
    f_val,
    is_integral_poly,
    make_report,
    reports_to_csv,
    reports_to_json,
    theorem2_predicate,
    verify_theorem2_grid,
)
from apsum.powersum import ProgressionParams, coeffs_theorem1, sufficient_condition
from oracles import power_sum_interpolated

PUBLISHED_F = {
    1: 2, 2: 6, 3: 2, 4: 30, 5: 6, 6: 42, 7: 6, 8: 30, 9: 10, 10: 66,
    11: 6, 12: 2730, 13: 210, 14: 30, 15: 6, 16: 510, 17: 30, 18: 3990, 19: 210, 20: 2310,
}


@pytest.mark.parametrize("n, j, expected", [(3, 2, 1), (2, 2, 2), (4, 4, 6)])
def test_f_val_examples(n, j, expected):
    assert f_val(n, j) == expected


@pytest.mark.parametrize("n, j", [(4, 3), (4, 0), (3, 4), (5, 6)])
def test_f_val_rejects(n, j):
    with pytest.raises(ValueError):
        f_val(n, j)


@pytest.mark.parametrize("n", sorted(PUBLISHED_F))
def test_F_table(n):
    assert F_val(n) == PUBLISHED_F[n]


def test_F_is_even():
    assert all(F_val(n) % 2 == 0 for n in range(1, 21))


def _smallest_integral_m(n):
    m = 1
    while not power_sum_is_integral(m, 1, n):
        m += 1
    return m


def power_sum_is_integral(m, r, n):
    return all(c.denominator == 1 for c in power_sum_interpolated(m, r, n))


@pytest.mark.parametrize("n", range(1, 11))
def test_F_is_smallest_integral_step(n):
    # brute search over m with r = 1, using only interpolated brute-force sums
    assert _smallest_integral_m(n) == F_val(n)


def test_is_integral_examples():
    assert is_integral_poly(2, 1, 3)
    assert not is_integral_poly(2, 5, 2)
    assert not is_integral_poly(1, 0, 4)


def test_predicate_examples():
    assert theorem2_predicate(2, 3)
    assert not any(theorem2_predicate(1, n) for n in range(1, 21))
    assert theorem2_predicate(2730, 12)
    with pytest.raises(ValueError):
        theorem2_predicate(0, 3)


def test_grid_ordering_and_filter():
    reports = verify_theorem2_grid(4, 4, 3, coprime_only=True)
    keys = [(rep.params.n, rep.params.m, rep.params.r) for rep in reports]
    assert keys == sorted(keys)
    assert all(rep.coprime for rep in reports)
    full = verify_theorem2_grid(4, 4, 3, coprime_only=False)
    assert len(full) == 4 * 5 * 3
    assert len(reports) == sum(1 for rep in full if rep.coprime)


def test_grid_theorem2_small():
    reports = verify_theorem2_grid(6, 6, 8, coprime_only=True)
    assert all(rep.agrees for rep in reports)
    by_params = {(rep.params.m, rep.params.r, rep.params.n): rep for rep in reports}
    rep = by_params[(2, 1, 3)]
    assert rep.is_integral and rep.predicate
    assert by_params[(4, 5, 3)].is_integral


def test_parallel_grid_matches_serial():
    serial = verify_theorem2_grid(5, 5, 5, coprime_only=False)
    parallel = verify_theorem2_grid(5, 5, 5, coprime_only=False, workers=2)
    assert [r.as_record() for r in serial] == [r.as_record() for r in parallel]


def test_disagreements_are_reported_not_dropped():
    p = ProgressionParams(3, 1, 2)
    fake = IntegralityReport(p, coeffs_theorem1(p), True, F_val(2), False)
    assert not fake.agrees
    assert disagreements([make_report(p), fake]) == [fake]


def test_r_independence_on_coprime_grid():
    for n in range(1, 9):
        for m in range(1, 13):
            values = {is_integral_poly(m, r, n) for r in range(0, 13) if gcd(m, r) == 1}
            assert len(values) == 1


def test_sufficient_condition_on_grid():
    for n in range(1, 9):
        for m in range(1, 9):
            for r in range(0, 9):
                if sufficient_condition(m, r, n):
                    assert is_integral_poly(m, r, n)


def test_report_serialization_roundtrip():
    reports = verify_theorem2_grid(3, 2, 3, coprime_only=False)
    records = json.loads(reports_to_json(reports))
    for rec, rep in zip(records, reports):
        assert all(isinstance(rec[k], str) for k in ("m", "r", "n", "F"))
        assert [Fraction(c) for c in rec["coefficients"]] == list(rep.coeffs.coeffs)
        assert rec["agrees"] is rep.agrees
    lines = reports_to_csv(reports).splitlines()
    assert lines[0] == "m,r,n,coefficients,is_integral,F,predicate,agrees"
    assert len(lines) == len(reports) + 1
