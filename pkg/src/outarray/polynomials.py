"""Binomials, the closed-form entry formula and exact column polynomials."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .engine import DEFAULT_MAX_WIDTH, OutputArray, build
from .sequence import InputSequenceSpec, describe, iter_terms, prefix

__all__ = [
    "ThresholdNotFound",
    "VerificationFailed",
    "PreconditionViolated",
    "RationalPolynomial",
    "binomial",
    "n_threshold",
    "closed_form_entry",
    "interpolate",
    "fit_column",
    "column_polynomial",
    "evaluate",
]


class ThresholdNotFound(ValueError):
    pass


class VerificationFailed(RuntimeError):
    pass


class PreconditionViolated(ValueError):
    pass


def binomial(a: int, b: int) -> int:
    """``C(a, b)``, zero when ``b < 0`` or ``b > a``."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial with Fraction coefficients, lowest degree first."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [Fraction(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def zero(cls) -> RationalPolynomial:
        return cls(())

    @property
    def degree(self) -> int:
        return max(len(self.coefficients) - 1, 0)

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1] if self.coefficients else Fraction(0)

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def pairs(self) -> list[tuple[int, int]]:
        return [(c.numerator, c.denominator) for c in self.coefficients]

    @classmethod
    def from_pairs(cls, pairs) -> RationalPolynomial:
        return cls(tuple(Fraction(p, q) for p, q in pairs))

    def render(self, descending: bool = True, var: str = "x") -> str:
        terms = [(i, c) for i, c in enumerate(self.coefficients) if c]
        if not terms:
            return "0"
        if descending:
            terms.reverse()
        return _join_terms([(i, c) for i, c in terms], var)

    def render_common(self, var: str = "x") -> str:
        """Descending form over the least common denominator, e.g. ``(x^2 + x - 2)/2``."""
        if not self.coefficients:
            return "0"
        d = math.lcm(*(c.denominator for c in self.coefficients))
        body = _join_terms(
            [(i, c * d) for i, c in reversed(list(enumerate(self.coefficients))) if c], var
        )
        if d == 1:
            return body
        if len([c for c in self.coefficients if c]) > 1:
            body = f"({body})"
        return f"{body}/{d}"

    def __str__(self):
        return self.render()


def _monomial(i, var):
    return "" if i == 0 else var if i == 1 else f"{var}^{i}"


def _join_terms(terms, var):
    parts = []
    for idx, (i, c) in enumerate(terms):
        mag = abs(c)
        mono = _monomial(i, var)
        if mag == 1 and mono:
            text = mono
        elif mono:
            num = "" if mag.numerator == 1 else str(mag.numerator)
            text = f"{num}{mono}" if mag.denominator == 1 else f"{num}{mono}/{mag.denominator}"
        else:
            text = str(mag)
        if idx == 0:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f"- {text}" if c < 0 else f"+ {text}")
    return " ".join(parts)


def evaluate(poly: RationalPolynomial, n) -> Fraction:
    return poly(n)


def interpolate(xs, ys) -> RationalPolynomial:
    """Exact interpolating polynomial through ``(xs[i], ys[i])`` via Newton divided differences."""
    xs = [Fraction(x) for x in xs]
    table = [Fraction(v) for v in ys]
    m = len(xs)
    if m == 0 or m != len(table) or len(set(xs)) != m:
        raise ValueError("need distinct abscissae and matching ordinates")
    newton = [table[0]]
    for order in range(1, m):
        table = [(table[i + 1] - table[i]) / (xs[i + order] - xs[i]) for i in range(m - order)]
        newton.append(table[0])
    # nested multiplication from the highest Newton coefficient down
    coeffs = [newton[-1]]
    for i in range(m - 2, -1, -1):
        shifted = [Fraction(0)] + coeffs
        for d, c in enumerate(coeffs):
            shifted[d] -= xs[i] * c
        shifted[0] += newton[i]
        coeffs = shifted
    return RationalPolynomial(tuple(coeffs))


def n_threshold(spec: InputSequenceSpec, k: int, search_horizon: int = 10_000) -> int:
    """Smallest ``N >= 0`` with ``k <= y_{N+1}``."""
    h = spec.horizon
    limit = search_horizon if h is None else min(search_horizon, h)
    for n, yn in enumerate(iter_terms(spec), start=1):
        if n > limit:
            break
        if k <= yn:
            return n - 1
    raise ThresholdNotFound(
        f"{describe(spec)}: no y_n >= {k} for n <= {limit}; the sequence may be eventually constant"
    )


def _row_value(array: OutputArray, N: int, j: int) -> int:
    # row 0 is the virtual row (1, 0, 0, ...) that generates row 1
    if N == 0:
        return 1 if j == 0 else 0
    return array.entry(N, j)


def closed_form_entry(array: OutputArray, N: int, n: int, k: int) -> int:
    """``A(n, k)`` from row ``N`` alone, valid when ``k <= y_{N+1}`` and ``n > N``.

    With ``m = n - N + 1`` the entry is
    ``C(m+k-2, k) + sum_{j=1..k} C(m+k-2-j, k-j) A(N, j)``.
    """
    if N < 0 or n < N + 1 or k < 0:
        raise PreconditionViolated(f"need 0 <= N < n and k >= 0 (N={N}, n={n}, k={k})")
    if N > array.n_rows:
        raise PreconditionViolated(f"row {N} not available (array has {array.n_rows} rows)")
    if N + 1 <= array.n_rows:
        y_next = array.y[N]
    elif array.spec is not None:
        y_next = prefix(array.spec, N + 1)[-1]
    else:
        raise PreconditionViolated(f"y_{N + 1} unknown")
    if k > y_next:
        raise PreconditionViolated(f"k = {k} exceeds y_{N + 1} = {y_next}")
    m = n - N + 1
    total = binomial(m + k - 2, k)
    for j in range(1, k + 1):
        total += binomial(m + k - 2 - j, k - j) * _row_value(array, N, j)
    return total


def fit_column(array: OutputArray, k: int, start: int) -> RationalPolynomial:
    """Degree-k interpolant through ``(n, A(n, k))`` for ``n = start..start+k``."""
    xs = list(range(start, start + k + 1))
    if xs[-1] > array.n_rows:
        raise ValueError(f"need rows up to {xs[-1]}, array has {array.n_rows}")
    return interpolate(xs, [array.entry(n, k) for n in xs])


def column_polynomial(spec: InputSequenceSpec, k: int, verify_extra: int = 4,
                      max_width: int = DEFAULT_MAX_WIDTH,
                      array: OutputArray | None = None) -> RationalPolynomial:
    """Polynomial ``p_k`` with ``p_k(n) = A(n, k)`` for all ``n > N(k)``.

    Fitted on rows ``N(k)+1 .. N(k)+k+1`` and checked on ``verify_extra``
    further rows.
    """
    N = n_threshold(spec, k)
    last = N + k + 1 + verify_extra
    if array is None or array.n_rows < last:
        array = build(spec, last, max_width)
    poly = fit_column(array, k, N + 1)
    for n in range(N + k + 2, last + 1):
        if poly(n) != array.entry(n, k):
            raise VerificationFailed(
                f"{describe(spec)}: p_{k}({n}) = {poly(n)} but A({n},{k}) = {array.entry(n, k)}"
            )
    return poly
