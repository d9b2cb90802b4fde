"""Row-sum analytics: top/middle/small decomposition, bounds, Heinz's
recurrence for the bracket sequence, and the output-sequence map."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import prod

from .engine import DEFAULT_MAX_WIDTH, iter_rows, maximal_entry
from .polynomials import binomial
from .sequence import InputSequenceSpec, describe, explicit, prefix, require_valid

__all__ = [
    "RowStats",
    "to_decimal",
    "stats",
    "stats_from_sums",
    "catalan_stats_closed_form",
    "row_sum_lower_bound",
    "row_sum_upper_bound_product",
    "pascal_bounds",
    "row_sum_pascal_bound",
    "heinz_row_sums",
    "bracket_stats_via_heinz",
    "phi",
    "BoundsReport",
    "check_bounds",
]


def to_decimal(value: Fraction, places: int = 15) -> str:
    """Round ``value`` half-up to ``places`` decimals using integer arithmetic."""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10 ** places
    q = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    whole, frac = divmod(q, 10 ** places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class RowStats:
    n: int
    T: Fraction
    M: Fraction
    S: Fraction
    middle_term_count: int

    def decimals(self, places: int = 15) -> dict[str, str]:
        return {name: to_decimal(getattr(self, name), places) for name in "TMS"}


def stats_from_sums(n: int, y, w) -> RowStats:
    """Decomposition of ``W(n)`` given ``y = (y_{n-2}, y_{n-1}, y_n)`` and
    ``w = (W(n-2), W(n-1), W(n))``."""
    y2, y1, y0 = y
    w2, w1, w0 = w
    R = y1 - y2 + 1
    T = Fraction((1 + y0 - y1) * w1, w0)
    # sum_{k=1}^{R} (W(n-1) - k W(n-2))
    M = Fraction(R * w1 - R * (R + 1) // 2 * w2, w0)
    return RowStats(n, T, M, 1 - M - T, R)


def stats(spec: InputSequenceSpec, n: int, max_width: int = DEFAULT_MAX_WIDTH) -> RowStats:
    if n < 3:
        raise ValueError(f"row statistics need n >= 3, got {n}")
    y = require_valid(spec, n)
    w = []
    for _, _, row in iter_rows(spec, n, max_width, y=y):
        w = (w + [row.total()])[-3:]
    return stats_from_sums(n, y[n - 3:], w)


def catalan_stats_closed_form(n: int) -> tuple[Fraction, Fraction, Fraction]:
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    T = Fraction(n + 2, 2 * n + 1)
    M = Fraction((n + 2) * (5 * n - 7), 4 * (2 * n + 1) * (2 * n - 1))
    S = Fraction(3 * (n - 3) * (n - 2), 4 * (2 * n + 1) * (2 * n - 1))
    return T, M, S


def row_sum_lower_bound(spec: InputSequenceSpec, n: int) -> int:
    y = [0] + prefix(spec, n)
    return prod(1 + y[k + 1] - y[k] for k in range(n))


def row_sum_upper_bound_product(spec: InputSequenceSpec, n: int) -> int:
    return prod(1 + v for v in prefix(spec, n))


def pascal_bounds(spec: InputSequenceSpec, n: int, k: int) -> tuple[int, int]:
    """Entry bounds ``(min(y_{n-1}+1, k+1), C(n-1+k, k))``.

    The lower bound applies for ``n >= 2`` and ``k <= y_n``; it is reported
    as 0 where it does not apply.
    """
    y = prefix(spec, n)
    upper = maximal_entry(n, k)
    if k == 0:
        return 1, upper
    if n < 2 or k > y[n - 1]:
        return 0, upper
    return min(y[n - 2] + 1, k + 1), upper


def row_sum_pascal_bound(spec: InputSequenceSpec, n: int) -> int:
    yn = prefix(spec, n)[-1]
    return binomial(n + yn, yn)


def heinz_row_sums(n_max: int) -> list[int]:
    """Row sums of the bracket array (``y_n = 2^{n-1}``) by Heinz's recurrence."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    w = [1]
    for n in range(1, n_max + 1):
        total = 0
        for j in range(n):
            term = w[j] * binomial(1 + 2 ** j, n - j)
            total += term if (n - j + 1) % 2 == 0 else -term
        w.append(total)
    return w[1:]


def bracket_stats_via_heinz(n: int) -> RowStats:
    if n < 3:
        raise ValueError(f"row statistics need n >= 3, got {n}")
    w = heinz_row_sums(n)
    y = [2 ** (i - 1) for i in (n - 2, n - 1, n)]
    return stats_from_sums(n, y, w[n - 3:])


def phi(spec: InputSequenceSpec, n_terms: int, max_width: int = DEFAULT_MAX_WIDTH) -> InputSequenceSpec:
    """Explicit spec holding the first ``n_terms`` of the output sequence."""
    w = [row.total() for _, _, row in iter_rows(spec, n_terms, max_width)]
    return explicit(w)


@dataclass
class BoundsReport:
    spec: str
    n_max: int
    entries_checked: int = 0
    violation: str | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None

    def to_text(self) -> str:
        if self.ok:
            return f"{self.spec}: all bounds hold for n <= {self.n_max} ({self.entries_checked} entries)"
        return f"{self.spec}: VIOLATION {self.violation}"

    def to_json(self) -> str:
        return json.dumps({**asdict(self), "ok": self.ok})


def check_bounds(spec: InputSequenceSpec, n_max: int, max_width: int = DEFAULT_MAX_WIDTH) -> BoundsReport:
    """Check every entry and row sum for ``n <= n_max`` against both bound theorems."""
    report = BoundsReport(describe(spec), n_max)
    y = require_valid(spec, n_max)
    lower_prod, upper_prod, prev_y = 1, 1, 0
    for n, yn, row in iter_rows(spec, n_max, max_width, y=y):
        lower_prod *= 1 + yn - prev_y
        upper_prod *= 1 + yn
        w = row.total()
        pascal_row = binomial(n + yn, yn)
        if not lower_prod <= w <= min(upper_prod, pascal_row):
            report.violation = (
                f"n={n}: W={w} outside [{lower_prod}, min({upper_prod}, {pascal_row})]"
            )
            return report
        # columns are checked in order so the binomial upper bound can be
        # updated incrementally: C(n-1+k, k) = C(n-2+k, k-1) * (n-1+k) / k
        upper = 1
        for k, value in enumerate(row.values()):
            if k:
                upper = upper * (n - 1 + k) // k
            lower = 1 if k == 0 or n == 1 else min(prev_y + 1, k + 1)
            if not lower <= value <= upper:
                report.violation = f"A({n},{k})={value} outside [{lower}, {upper}]"
                return report
            report.entries_checked += 1
        prev_y = yn
    return report
