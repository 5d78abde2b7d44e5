import json

import pytest
from gmpy2 import mpq

from logpow.combinatorics import enumerate_weighted, size, term_valuation
from logpow.exact_arith import INFINITY, HypothesisError, Valuation, nu_int
from logpow.harness import (
    VerifyReport,
    all_pass,
    iter_small_tuples,
    random_large_tuples,
    reconstruct,
    render_json_lines,
    render_tsv,
    sample_falling_cases,
    verify_c_coeffs,
    verify_falling_valuation,
    verify_falling_valuation_random,
    verify_main,
    verify_offset_bound,
    verify_offset_equality,
    verify_reconstruct,
    verify_valuation_inequality,
    verify_zero_coeffs,
    verify_zero_property,
)
from logpow.series import log_series, reciprocal, scale_variable

WORKED_EXPONENTS = [1, 0, -2, -2, -3, -5, -5, -6, -9]


def test_verify_main_worked_example():
    for t in (9, -9):
        reports = verify_main(3, t, 9)
        assert [r.actual.value for r in reports] == WORKED_EXPONENTS
        assert [r.predicted.value for r in reports] == WORKED_EXPONENTS
        assert all(r.passed for r in reports)


def test_verify_main_p2():
    reports = verify_main(2, 2, 2)
    assert [r.actual.value for r in reports] == [0, -2]
    assert all_pass(reports)
    # series oracle for t=4: [x^m] of the 4th power, m = 1..4
    reports = verify_main(2, 4, 4)
    assert [r.actual.value for r in reports] == [1, -1, -1, -4]
    assert all_pass(reports)


def test_verify_main_hypothesis_gate():
    with pytest.raises(HypothesisError):
        verify_main(3, 9, 10)
    with pytest.raises(ValueError):
        verify_main(3, 0, 1)
    with pytest.raises(ValueError):
        verify_main(4, 9, 1)


def test_verify_main_report_fields():
    (r,) = verify_main(5, 5, 1)
    assert r.result_id == "coeff_valuation"
    assert (r.p, r.t, r.m, r.n) == (5, 5, 1, 4)
    assert r.passed is True


def test_zero_coeffs_small():
    reports = verify_zero_coeffs(12)
    assert len(reports) == 11
    assert all_pass(reports)
    by_m = {r.m: r for r in reports}
    # odd case checks x^m, even case checks x^(m+1)
    assert by_m[3].n == 3
    assert by_m[2].n == 3
    assert by_m[4].n == 5


def test_zero_coeff_m2_by_hand():
    # [x^3] of the square of x/log(1+x): 2*(1/24) + 2*(1/2)*(-1/12) = 0
    r = reciprocal(log_series(3))
    assert 2 * r[0] * r[3] + 2 * r[1] * r[2] == 0


def test_reconstruct_examples():
    assert reconstruct(mpq(1, 2), 3) == reciprocal(log_series(3))
    f = reconstruct(mpq(3, 7), 7)
    assert f[0] == 1 and f[1] == mpq(3, 7)
    with pytest.raises(ValueError):
        reconstruct(0, 5)
    with pytest.raises(ValueError):
        reconstruct(mpq(1, 2), 0)


def test_reconstruct_matches_scaled_reciprocal():
    for c1 in (mpq(1), mpq(-2, 5)):
        f = reconstruct(c1, 12)
        assert f == scale_variable(reciprocal(log_series(12)), 2 * c1)


def test_reconstruct_zero_property_recheck():
    f = reconstruct(mpq(1), 12)
    reports = verify_zero_property(f)
    assert len(reports) == 10  # m = 2..11
    assert all_pass(reports)


def test_verify_reconstruct_reports():
    reports = verify_reconstruct(mpq(1, 2), 12)
    assert reports[0].result_id == "reconstruct_closed_form"
    assert all_pass(reports)


def test_offset_bound_examples():
    reports = verify_offset_bound(5, 5)
    assert len(reports) == 12  # m = 1..4, delta = 1..3
    assert all_pass(reports)
    reports = verify_offset_bound(3, 9)
    assert len(reports) == 8  # m = 1..8, delta = 1
    assert all(r.delta == 1 for r in reports)
    assert all_pass(reports)
    assert verify_offset_bound(2, 4) == []
    assert verify_offset_bound(3, 2) == []  # nu_3(2) = 0: empty m-range


def test_offset_equality_classification():
    reports = verify_offset_equality(5, 25)
    by_point = {(r.m, r.delta): r for r in reports}
    assert by_point[(5, 1)].result_id == "offset_case_a"
    assert by_point[(3, 1)].result_id == "offset_case_b"
    assert by_point[(1, 2)].result_id == "offset_case_c"
    assert by_point[(1, 1)].result_id == "offset_unclassified"  # m = delta mod p
    assert by_point[(2, 2)].result_id == "offset_unclassified"
    assert by_point[(1, 3)].result_id == "offset_unclassified"  # delta > 2
    assert by_point[(1, 1)].passed is None
    assert all_pass(reports)


def test_offset_equality_case_b_value():
    reports = verify_offset_equality(5, 5)
    (r,) = [r for r in reports if (r.m, r.delta) == (3, 1)]
    assert r.result_id == "offset_case_b"
    assert r.predicted == Valuation(-2)
    assert r.actual == Valuation(-2)
    assert r.passed is True


def test_offset_equality_case_c_strictness_split():
    reports = verify_offset_equality(7, 7)
    case_c = [r for r in reports if r.result_id == "offset_case_c"]
    assert case_c and all_pass(case_c)
    # 3m = 5 mod 7 exactly at m = 4: predicted strict there, equality elsewhere
    for r in case_c:
        if r.m % 7 == 4:
            assert "strict" in r.note and r.actual > r.predicted
        else:
            assert "equality" in r.note and r.actual == r.predicted


def test_offset_sweeps_empty_for_p2():
    assert verify_offset_equality(2, 8) == []


def test_falling_valuation_examples():
    r = verify_falling_valuation(3, 9, (2,))
    assert r.predicted == Valuation(2) and r.actual == Valuation(2) and r.passed
    r = verify_falling_valuation(2, -4, (1, 1))
    assert r.predicted == Valuation(2) and r.actual == Valuation(2) and r.passed
    for p in (2, 3, 5, 7):
        r = verify_falling_valuation(p, p, (1,))
        assert r.actual == Valuation(1) and r.passed


def test_falling_valuation_hypothesis_gate():
    with pytest.raises(HypothesisError):
        verify_falling_valuation(3, 9, (5, 5))  # size 10 > 9
    with pytest.raises(HypothesisError):
        verify_falling_valuation(3, 9, (0,))
    with pytest.raises(ValueError):
        verify_falling_valuation(3, 0, (1,))


def test_falling_valuation_random_sweep():
    reports = list(verify_falling_valuation_random(150, seed=42))
    assert len(reports) == 150
    assert all_pass(reports)
    cases = sample_falling_cases(150, seed=42)
    assert cases == sample_falling_cases(150, seed=42)  # deterministic
    for p, t, entries in cases:
        assert 0 < sum(entries) <= p ** nu_int(t, p).value
        assert abs(t) <= 10**6


def test_dominant_term_is_strictly_smallest():
    # at degree (p-1)m every non-dominant expansion term has strictly larger
    # valuation than the dominant one at m*E_(p-1)
    for p, t in ((2, 4), (3, 9)):
        e = nu_int(t, p).value
        for m in range(1, p**e + 1):
            degree = (p - 1) * m
            dominant = tuple(m if j == p - 2 else 0 for j in range(degree))
            floor = Valuation(e) - nu_int(m, p) - m
            assert term_valuation(t, dominant, p) == floor
            for entries in enumerate_weighted(degree):
                if entries == dominant or size(entries) > p**e:
                    continue
                assert term_valuation(t, entries, p) > floor


def test_tuple_corpora():
    small = list(iter_small_tuples(3, 3))
    assert all(any(e) for e in small)
    assert len(small) == (4**1 - 1) + (4**2 - 1) + (4**3 - 1)
    big = random_large_tuples(50, seed=9)
    assert len(big) == 50
    assert all(len(e) > 6 or max(e) > 6 for e in big)


def test_c_and_inequality_drivers():
    tuples = list(iter_small_tuples(3, 3))
    assert all_pass(verify_c_coeffs(tuples))
    assert all_pass(verify_valuation_inequality(tuples, (2, 3)))


def test_report_serialization_json():
    (r,) = verify_main(5, 5, 1)
    (line,) = render_json_lines([r])
    obj = json.loads(line)
    assert list(obj.keys()) == [
        "result_id", "p", "t", "m", "delta", "n", "predicted", "actual", "pass", "note",
    ]
    assert obj["pass"] is True
    assert obj["delta"] is None
    assert obj["predicted"] == 0

    inf_report = VerifyReport("demo", p=3, predicted=INFINITY, actual=INFINITY, passed=True)
    obj = json.loads(next(render_json_lines([inf_report])))
    assert obj["predicted"] == "inf" and obj["actual"] == "inf"


def test_report_serialization_tsv():
    text = render_tsv(verify_main(3, 9, 2))
    lines = text.splitlines()
    assert lines[0].split("\t")[0].strip() == "result_id"
    assert len(lines) == 3
    assert "true" in lines[1]


def test_all_pass_ignores_unasserted():
    reports = [
        VerifyReport("x", passed=True),
        VerifyReport("x", passed=None),
    ]
    assert all_pass(reports)
    assert not all_pass(reports + [VerifyReport("x", passed=False)])
