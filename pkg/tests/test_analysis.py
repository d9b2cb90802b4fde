import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from outarray import oracle
from outarray.analysis import (
    RowStats,
    bracket_stats_via_heinz,
    catalan_stats_closed_form,
    check_bounds,
    heinz_row_sums,
    pascal_bounds,
    phi,
    row_sum_lower_bound,
    row_sum_pascal_bound,
    row_sum_upper_bound_product,
    stats,
    stats_from_sums,
    to_decimal,
)
from outarray.engine import build, output_sequence
from outarray.sequence import (
    catalog,
    constant,
    explicit,
    fibonacci,
    identity,
    power,
    prefix,
    repetition,
    validate,
)


def definitional_stats(spec, n):
    """T, M, S written out term by term from the row sums."""
    y = [None] + prefix(spec, n)
    w = [None] + output_sequence(spec, n)
    T = Fraction((1 + y[n] - y[n - 1]) * w[n - 1], w[n])
    R = y[n - 1] - y[n - 2] + 1
    M = Fraction(sum(w[n - 1] - k * w[n - 2] for k in range(1, R + 1)), w[n])
    return T, M, 1 - M - T


def test_stats_identity_n10():
    s = stats(identity(), 10)
    assert s.T == Fraction(4, 7) == Fraction(12, 21)
    assert (s.T, s.M, s.S) == definitional_stats(identity(), 10)
    assert s.middle_term_count == 2


def test_stats_fibonacci_n24():
    s = stats(fibonacci(), 24)
    assert abs(s.T - Fraction("0.678")) < Fraction(1, 1000)
    assert abs(s.M - Fraction("0.277")) < Fraction(1, 1000)
    assert abs(s.S - Fraction("0.044")) < Fraction(1, 1000)


@pytest.mark.parametrize("j", range(1, 6))
def test_constant_top_fraction(j):
    for n in range(3, 25):
        assert stats(constant(j), n).T == Fraction(n, n + j)


def test_stats_needs_three_rows():
    with pytest.raises(ValueError):
        stats(identity(), 2)
    with pytest.raises(ValueError):
        bracket_stats_via_heinz(2)


def test_catalan_closed_form_examples():
    T, M, S = catalan_stats_closed_form(3)
    assert T == Fraction(5, 7) and S == 0
    T, M, S = catalan_stats_closed_form(4)
    assert M == Fraction(13, 42)
    assert M == stats(identity(), 4).M


def test_catalan_closed_form_matches_definition():
    for n in range(3, 41):
        s = stats(identity(), n)
        assert (s.T, s.M, s.S) == catalan_stats_closed_form(n)


def test_catalan_limits():
    gaps = [abs(catalan_stats_closed_form(n)[0] - Fraction(1, 2)) for n in range(3, 201)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < Fraction(1, 100)
    T, M, S = catalan_stats_closed_form(10_000)
    assert abs(M - Fraction(5, 16)) < Fraction(1, 1000)
    assert abs(S - Fraction(3, 16)) < Fraction(1, 1000)


def test_constant_limit():
    assert stats(constant(3), 400).T > 1 - Fraction(1, 100)


@pytest.mark.parametrize("record", catalog(), ids=lambda r: r.name)
def test_parts_sum_to_one(record):
    for n in range(3, 8):
        s = stats(record.spec, n)
        assert s.T + s.M + s.S == 1
        assert (s.T, s.M, s.S) == definitional_stats(record.spec, n)


def test_product_bounds_examples():
    assert row_sum_lower_bound(fibonacci(), 6) == 96
    assert row_sum_upper_bound_product(fibonacci(), 6) == 2592
    for j in range(1, 5):
        for n in range(1, 8):
            assert row_sum_lower_bound(constant(j), n) == 1 + j
    for n in range(1, 12):
        assert row_sum_lower_bound(identity(), n) == 2 ** n


def test_pascal_bound_examples():
    assert row_sum_pascal_bound(fibonacci(), 6) == math.comb(14, 8) == 3003
    assert 418 <= 3003
    for spec in (fibonacci(), identity(), power(2)):
        assert pascal_bounds(spec, 4, 0) == (1, 1)
    lower, upper = pascal_bounds(identity(), 5, 5)
    assert upper == math.comb(9, 5) == 126
    assert lower <= 42 <= upper


@pytest.mark.parametrize("record", catalog(), ids=lambda r: r.name)
def test_bounds_sandwich(record):
    n_max = min(record.spec.horizon or 12, 12)
    while prefix(record.spec, n_max)[-1] > 200_000:
        n_max -= 1
    a = build(record.spec, n_max)
    for n in range(1, n_max + 1):
        w = a.row_sum(n)
        assert row_sum_lower_bound(record.spec, n) <= w
        assert w <= row_sum_upper_bound_product(record.spec, n)
        assert w <= row_sum_pascal_bound(record.spec, n)
        for k in range(0, a.y[n - 1] + 1, max(1, a.y[n - 1] // 50)):
            lower, upper = pascal_bounds(record.spec, n, k)
            assert lower <= a.entry(n, k) <= upper


def test_heinz_examples():
    assert heinz_row_sums(5) == [2, 5, 19, 123, 1457]
    assert heinz_row_sums(1) == [2]
    with pytest.raises(ValueError):
        heinz_row_sums(0)


def test_heinz_matches_engine():
    assert heinz_row_sums(14) == output_sequence(power(2), 14)


def test_bracket_stats_via_heinz():
    assert bracket_stats_via_heinz(5) == stats(power(2), 5)
    assert bracket_stats_via_heinz(3).T == Fraction(15, 19)
    s = bracket_stats_via_heinz(82)
    assert s.decimals() == {
        "T": "0.744039272799855",
        "M": "0.233621026532793",
        "S": "0.022339700667352",
    }


def test_phi():
    assert phi(identity(), 4) == explicit([2, 5, 14, 42])
    assert phi(constant(1), 4) == explicit([2, 3, 4, 5])
    twice = phi(phi(identity(), 8), 3)
    inner = phi(identity(), 8)
    assert twice.values == tuple(oracle.count_all(inner, n) for n in range(1, 4))
    assert twice.values == (3, 15, 181)


@pytest.mark.parametrize("record", catalog(), ids=lambda r: r.name)
def test_phi_output_is_valid_input(record):
    out = phi(record.spec, 5)
    assert validate(out, 5).ok


def test_check_bounds_success():
    for spec, n in ((fibonacci(), 15), (repetition(), 20), (power(2), 12)):
        report = check_bounds(spec, n)
        assert report.ok, report.violation
        assert report.entries_checked > 0
        assert "all bounds hold" in report.to_text()


def test_check_bounds_reports_corrupted_theorem(monkeypatch):
    import outarray.analysis as mod

    monkeypatch.setattr(mod, "binomial", lambda a, b: 0)
    report = mod.check_bounds(fibonacci(), 5)
    assert not report.ok
    assert '"ok": false' in report.to_json()


def test_to_decimal():
    assert to_decimal(Fraction(2, 3), 3) == "0.667"
    assert to_decimal(Fraction(-1, 8), 2) == "-0.13"
    assert to_decimal(Fraction(5, 2), 0) == "3"
    assert to_decimal(Fraction(1, 3), 15) == "0.333333333333333"


@given(st.integers(1, 10 ** 6), st.integers(1, 10 ** 6), st.integers(0, 20))
def test_to_decimal_within_half_unit(p, q, places):
    value = Fraction(p, q)
    assert abs(Fraction(to_decimal(value, places)) - value) <= Fraction(1, 2 * 10 ** places)


def test_stats_from_sums_definition():
    s = stats_from_sums(3, (1, 2, 4), (2, 5, 19))
    assert isinstance(s, RowStats)
    assert s.T == Fraction(15, 19)
    assert s.M == Fraction((5 - 2) + (5 - 4), 19)
