"""Output arrays built row by row with plateau-compressed big-integer rows.

Row ``n`` of the array is zero beyond column ``y_n``. For ``k <= y_{n-1}``
the entries are running sums of row ``n-1``; for ``y_{n-1} < k <= y_n`` the
row is flat at ``A(n, y_{n-1})``. Rows therefore store the running-sum part
explicitly and the flat tail as a (value, length) pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator

from .sequence import InputSequenceSpec, describe, require_valid

__all__ = [
    "DEFAULT_MAX_WIDTH",
    "WidthLimitExceeded",
    "Row",
    "OutputArray",
    "build",
    "iter_rows",
    "output_sequence",
    "maximal_entry",
]

DEFAULT_MAX_WIDTH = 10_000_000


class WidthLimitExceeded(MemoryError):
    def __init__(self, row: int, required: int, limit: int):
        self.row, self.required, self.limit = row, required, limit
        super().__init__(
            f"row {row} needs {required} columns, above the width limit {limit}"
        )


@dataclass(frozen=True)
class Row:
    """One logical row: ``explicit`` followed by ``plateau_len`` copies of
    ``plateau_value``, then zeros."""

    explicit: tuple[int, ...]
    plateau_value: int
    plateau_len: int

    @property
    def width(self) -> int:
        return len(self.explicit) + self.plateau_len

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError(k)
        if k < len(self.explicit):
            return self.explicit[k]
        if k < self.width:
            return self.plateau_value
        return 0

    def total(self) -> int:
        return sum(self.explicit) + self.plateau_value * self.plateau_len

    def values(self) -> list[int]:
        return list(self.explicit) + [self.plateau_value] * self.plateau_len

    @classmethod
    def from_values(cls, values, split: int) -> Row:
        """Compress ``values`` keeping the first ``split`` entries explicit."""
        values = list(values)
        head, tail = values[:split], values[split:]
        if tail and any(v != tail[0] for v in tail):
            raise ValueError("row tail past the split point is not constant")
        return cls(tuple(head), tail[0] if tail else head[-1], len(tail))


def _first_row(y1: int) -> Row:
    # y_0 = 0: the explicit part is column 0 and the rest is a plateau of ones
    return Row((1,), 1, y1)


def _next_row(prev: Row, y_prev: int, y_next: int) -> Row:
    # A(n,k) = A(n,k-1) + A(n-1,k) for k <= y_{n-1}; the plateau of the
    # previous row contributes an arithmetic progression to the running sum.
    head = list(accumulate(prev.explicit))
    if prev.plateau_len:
        last, step = head[-1], prev.plateau_value
        head.extend(last + step * i for i in range(1, prev.plateau_len + 1))
    assert len(head) == y_prev + 1
    return Row(tuple(head), head[-1], y_next - y_prev)


def iter_rows(spec: InputSequenceSpec, n_rows: int, max_width: int = DEFAULT_MAX_WIDTH,
              y: list[int] | None = None) -> Iterator[tuple[int, int, Row]]:
    """Yield ``(n, y_n, row_n)`` for ``n = 1..n_rows`` keeping one row alive."""
    if n_rows < 1:
        raise ValueError("n_rows must be >= 1")
    if y is None:
        y = require_valid(spec, n_rows)
    row = None
    for n, yn in enumerate(y[:n_rows], start=1):
        if yn + 1 > max_width:
            raise WidthLimitExceeded(n, yn + 1, max_width)
        row = _first_row(yn) if row is None else _next_row(row, y[n - 2], yn)
        yield n, yn, row


@dataclass(frozen=True)
class OutputArray:
    spec: InputSequenceSpec | None
    y: tuple[int, ...]
    rows: tuple[Row, ...]

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def _row(self, n: int) -> Row:
        if not 1 <= n <= len(self.rows):
            raise IndexError(f"row {n} outside 1..{len(self.rows)}")
        return self.rows[n - 1]

    def row(self, n: int) -> Row:
        return self._row(n)

    def entry(self, n: int, k: int) -> int:
        """``A(n, k)``; zero for ``k > y_n``."""
        if k < 0:
            raise IndexError(f"column must be >= 0, got {k}")
        return self._row(n)[k]

    def row_sum(self, n: int) -> int:
        """``W(n)``."""
        return self._row(n).total()

    def row_sums(self) -> list[int]:
        return [r.total() for r in self.rows]

    def __repr__(self):
        name = describe(self.spec) if self.spec is not None else "?"
        return f"OutputArray({name}, n_rows={self.n_rows})"


def build(spec: InputSequenceSpec, n_rows: int, max_width: int = DEFAULT_MAX_WIDTH) -> OutputArray:
    y = require_valid(spec, n_rows)
    rows = tuple(row for _, _, row in iter_rows(spec, n_rows, max_width, y=y))
    return OutputArray(spec, tuple(y), rows)


def output_sequence(spec: InputSequenceSpec, n_terms: int, max_width: int = DEFAULT_MAX_WIDTH) -> list[int]:
    """``[W(1), ..., W(n_terms)]`` without materializing the array."""
    return [row.total() for _, _, row in iter_rows(spec, n_terms, max_width)]


def maximal_entry(n: int, k: int) -> int:
    """Entry of the array with no zeroing (every ``y_n`` infinite)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    return math.comb(n - 1 + k, k)
