"""Brute-force counting of valid tuples straight from the chain constraints.

A tuple ``(x_1, ..., x_n)`` is valid for ``y`` when ``x_1 <= y_n`` and
``x_{j+1} <= min(x_j, y_{n-j})``. Nothing here uses the array recurrence.
"""

from __future__ import annotations

from .sequence import InputSequenceSpec, require_valid

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "enumerate_valid",
    "count_valid",
    "count_row",
    "count_all",
    "is_valid",
]

DEFAULT_BUDGET = 10 ** 6


class BudgetExceeded(RuntimeError):
    pass


def is_valid(x, y) -> bool:
    """Check a tuple against the prefix ``y = [y_1, ...]`` directly."""
    n = len(x)
    if n == 0 or any(v < 0 for v in x) or x[0] > y[n - 1]:
        return False
    return all(x[j] <= min(x[j - 1], y[n - j - 1]) for j in range(1, n))


def enumerate_valid(spec: InputSequenceSpec, n: int, first_entry: int | None = None,
                    budget: int = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All valid n-tuples, lexicographically descending."""
    y = require_valid(spec, n)
    out: list[tuple[int, ...]] = []
    stack: list[int] = []

    def descend(j):
        # stack holds x_1..x_j
        if j == n:
            if len(out) >= budget:
                raise BudgetExceeded(f"more than {budget} valid {n}-tuples")
            out.append(tuple(stack))
            return
        cap = min(stack[-1], y[n - j - 1])
        for v in range(cap, -1, -1):
            stack.append(v)
            descend(j + 1)
            stack.pop()

    firsts = range(y[n - 1], -1, -1) if first_entry is None else [first_entry]
    for x1 in firsts:
        if 0 <= x1 <= y[n - 1]:
            stack.append(x1)
            descend(1)
            stack.pop()
    return out


def _counter(y, n, budget):
    memo: dict[tuple[int, int], int] = {}

    def completions(j, c):
        # tuples x_{j+1}..x_n given x_j = c
        if j == n:
            return 1
        c = min(c, y[n - j - 1])
        key = (j, c)
        if key not in memo:
            if len(memo) >= budget:
                raise BudgetExceeded(f"more than {budget} memo states")
            memo[key] = sum(completions(j + 1, v) for v in range(c + 1))
        return memo[key]

    return completions


def count_valid(spec: InputSequenceSpec, n: int, k: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of valid n-tuples with ``x_1 = k``."""
    y = require_valid(spec, n)
    if k < 0 or k > y[n - 1]:
        return 0
    return _counter(y, n, budget)(1, k)


def count_row(spec: InputSequenceSpec, n: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """``[count_valid(spec, n, k) for k in 0..y_n]`` sharing one memo table."""
    y = require_valid(spec, n)
    completions = _counter(y, n, budget)
    return [completions(1, k) for k in range(y[n - 1] + 1)]


def count_all(spec: InputSequenceSpec, n: int, budget: int = DEFAULT_BUDGET) -> int:
    return sum(count_row(spec, n, budget))
