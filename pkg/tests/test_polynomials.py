import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from outarray.engine import build
from outarray.polynomials import (
    PreconditionViolated,
    RationalPolynomial,
    ThresholdNotFound,
    VerificationFailed,
    binomial,
    closed_form_entry,
    column_polynomial,
    evaluate,
    fit_column,
    interpolate,
    n_threshold,
)
from outarray.sequence import (
    catalog,
    constant,
    explicit,
    fibonacci,
    identity,
    power,
    prefix,
    repetition,
)

x = sympy.Symbol("x")


def from_sympy(expr):
    poly = sympy.Poly(sympy.expand(expr), x)
    coeffs = poly.all_coeffs()[::-1]
    return RationalPolynomial(tuple(Fraction(int(c.p), int(c.q)) for c in coeffs))


R = sympy.Rational


def test_binomial():
    assert binomial(10, 5) == 252
    assert binomial(3, 7) == 0
    assert binomial(5, -1) == 0
    a = 2 ** 81 + 1
    assert binomial(a, 2) == a * (a - 1) // 2 == (2 ** 81 + 1) * 2 ** 81 // 2


@given(st.integers(0, 60), st.integers(-3, 70))
def test_binomial_against_product(a, b):
    if 0 <= b <= a:
        expected = math.prod(range(a - b + 1, a + 1)) // math.factorial(b)
    else:
        expected = 0
    assert binomial(a, b) == expected


def test_n_threshold():
    assert n_threshold(repetition(), 4) == 6
    assert n_threshold(identity(), 3) == 2
    assert n_threshold(repetition(), 5) == 10
    assert n_threshold(identity(), 0) == 0
    with pytest.raises(ThresholdNotFound):
        n_threshold(constant(3), 4, search_horizon=50)
    with pytest.raises(ThresholdNotFound):
        n_threshold(explicit([1, 2, 3]), 4)


def test_closed_form_examples():
    cat = build(identity(), 6)
    assert closed_form_entry(cat, 3, 5, 3) == 28 == cat.entry(5, 3)
    fib = build(fibonacci(), 8)
    assert closed_form_entry(fib, 5, 7, 4) == 118 == fib.entry(7, 4)
    for N in range(1, 5):
        assert closed_form_entry(fib, N, N + 2, 0) == 1


def test_closed_form_from_virtual_row_zero():
    a = build(power(2), 7)
    for n in range(1, 8):
        assert closed_form_entry(a, 0, n, 1) == a.entry(n, 1)


def test_closed_form_preconditions():
    a = build(identity(), 5)
    with pytest.raises(PreconditionViolated):
        closed_form_entry(a, 2, 5, 4)  # k > y_3
    with pytest.raises(PreconditionViolated):
        closed_form_entry(a, 3, 3, 1)  # n must exceed N
    with pytest.raises(PreconditionViolated):
        closed_form_entry(a, 9, 12, 1)


@pytest.mark.parametrize("record", catalog(), ids=lambda r: r.name)
def test_closed_form_exhaustive_small(record):
    rows = 7 if record.name in ("power3", "catalan", "cube") else 10
    a = build(record.spec, rows)
    for N in range(0, rows):
        for k in range(0, min(a.y[N], 12) + 1):
            for n in range(N + 1, rows + 1):
                assert closed_form_entry(a, N, n, k) == a.entry(n, k)


def test_evaluate():
    bracket_p2 = RationalPolynomial((Fraction(-1), Fraction(1, 2), Fraction(1, 2)))
    assert evaluate(bracket_p2, 3) == 5
    assert evaluate(RationalPolynomial.zero(), 17) == 0
    fib_p2 = from_sympy((x - 2) * (x + 3) / 2)
    assert evaluate(fib_p2, 8) == 33


BRACKET = [
    1,
    x,
    x**2 / 2 + x / 2 - 1,
    x**3 / 6 + x**2 / 2 - R(2, 3) * x - 2,
    x**4 / 24 + x**3 / 4 - x**2 / 24 - R(9, 4) * x + 2,
    x**5 / 120 + x**4 / 12 + x**3 / 8 - R(13, 12) * x**2 + R(13, 15) * x - 5,
    x**6 / 720 + x**5 / 48 + R(11, 144) * x**4 - R(13, 48) * x**3 - R(7, 90) * x**2 - R(19, 4) * x + 10,
]
CATALAN = [
    1,
    x,
    (x - 1) * (x + 2) / 2,
    (x - 2) * (x + 2) * (x + 3) / 6,
    (x - 3) * (x + 2) * (x + 3) * (x + 4) / 24,
]
FIBONACCI = [
    1,
    x,
    (x - 2) * (x + 3) / 2,
    (x - 3) * (x**2 + 6 * x + 2) / 6,
    (x - 4) * (x + 1) * (x**2 + 9 * x + 6) / 24,
]
REPETITION = {
    4: x**4 / 24 + x**3 / 4 - x**2 / 24 - R(29, 4) * x - 63,
    5: x**5 / 120 + x**4 / 12 + x**3 / 8 - R(43, 12) * x**2 - R(1999, 30) * x - 767,
}


@pytest.mark.parametrize("k", range(7))
def test_bracket_polynomials(k):
    assert column_polynomial(power(2), k) == from_sympy(BRACKET[k])


@pytest.mark.parametrize("k", range(5))
def test_catalan_polynomials(k):
    assert column_polynomial(identity(), k) == from_sympy(CATALAN[k])


def test_catalan_unexpanded_forms():
    assert from_sympy(CATALAN[3]) == from_sympy((x**3 + 3 * x**2 - 4 * x - 12) / 6)
    assert from_sympy(CATALAN[4]) == from_sympy((x**4 + 6 * x**3 - x**2 - 54 * x - 72) / 24)
    p3 = column_polynomial(identity(), 3)
    assert [p3(n) for n in (2, 3, 4, 5, 6)] == [0, 5, 14, 28, 48]


@pytest.mark.parametrize("k", range(5))
def test_fibonacci_polynomials(k):
    assert column_polynomial(fibonacci(), k) == from_sympy(FIBONACCI[k])


@pytest.mark.parametrize("k", [4, 5])
def test_repetition_polynomials(k):
    assert column_polynomial(repetition(), k) == from_sympy(REPETITION[k])


@pytest.mark.parametrize("k,N", [(4, 6), (5, 10)])
def test_repetition_agreement_boundary(k, N):
    p = column_polynomial(repetition(), k)
    a = build(repetition(), N + k + 8)
    # agreement holds from n = N(k) on and fails for every earlier row
    assert all(p(n) == a.entry(n, k) for n in range(N, N + k + 9))
    assert all(p(n) != a.entry(n, k) for n in range(1, N))
    # a fit started too early does not reproduce the column either
    early = fit_column(a, k, N - 2)
    assert any(early(n) != a.entry(n, k) for n in range(N + 1, N + k + 9))


def test_verification_failure_detected():
    # fitting from row 1 on a repetition column passes through the zero region
    a = build(repetition(), 20)
    wrong = fit_column(a, 4, 1)
    assert wrong == RationalPolynomial.zero()
    assert a.entry(12, 4) != wrong(12)


def test_column_polynomial_verification_error(monkeypatch):
    import outarray.polynomials as mod

    monkeypatch.setattr(mod, "n_threshold", lambda spec, k: 0)
    with pytest.raises(VerificationFailed):
        mod.column_polynomial(repetition(), 4)


@pytest.mark.parametrize(
    "record",
    [r for r in catalog() if r.spec.horizon is None],
    ids=lambda r: r.name,
)
def test_column_polynomial_properties(record):
    for k in range(7):
        N = n_threshold(record.spec, k)
        last = N + k + 8
        if (prefix(record.spec, last)[-1]) > 300_000:
            break
        a = build(record.spec, last)
        p = column_polynomial(record.spec, k, array=a)
        assert p.degree == k
        assert p.leading == Fraction(1, math.factorial(k))
        for n in range(N + 1, last + 1):
            value = p(n)
            assert value.denominator == 1
            assert value == a.entry(n, k)


def test_second_column_formula_when_it_applies():
    # A(n,2) = (n^2+n)/2 + A(1,2) - 1 holds for every n once y_2 >= 2
    for spec in (identity(), constant(2), power(2), power(3), explicit([2, 3, 5, 8, 9, 9, 12])):
        a = build(spec, 7)
        for n in range(1, 8):
            assert a.entry(n, 2) == (n * n + n) // 2 + a.entry(1, 2) - 1
    # Fibonacci has y_2 = 1, so column 2 is zero-padded in row 2 and the formula fails
    a = build(fibonacci(), 6)
    assert a.entry(2, 2) != 3 + a.entry(1, 2) - 1
    assert a.entry(3, 2) != 6 + a.entry(1, 2) - 1


@settings(max_examples=50, deadline=None)
@given(st.lists(st.fractions(max_denominator=20), min_size=1, max_size=6), st.integers(-5, 5))
def test_interpolate_matches_sympy(ys, x0):
    xs = list(range(x0, x0 + len(ys)))
    ours = interpolate(xs, ys)
    expected = sympy.interpolate(list(zip(xs, [R(v.numerator, v.denominator) for v in ys])), x)
    assert ours == from_sympy(expected)
    assert all(ours(a) == b for a, b in zip(xs, ys))


def test_interpolate_errors():
    with pytest.raises(ValueError):
        interpolate([1, 1], [2, 3])
    with pytest.raises(ValueError):
        interpolate([], [])


def test_rendering():
    p = from_sympy(CATALAN[2])
    assert p.render_common() == "(x^2 + x - 2)/2"
    assert p.render() == "x^2/2 + x/2 - 1"
    assert p.render(descending=False) == "-1 + x/2 + x^2/2"
    assert p.pairs() == [(-1, 1), (1, 2), (1, 2)]
    assert RationalPolynomial.from_pairs(p.pairs()) == p
    assert from_sympy(x).render_common() == "x"
    assert RationalPolynomial.zero().render() == "0"
    assert from_sympy(x**3 / 6).render_common() == "x^3/6"
    assert from_sympy(BRACKET[3]).render() == "x^3/6 + x^2/2 - 2x/3 - 2"
