"""Input sequences: nondecreasing sequences of positive integers, indexed from 1."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

__all__ = [
    "InputSequenceSpec",
    "SequenceRecord",
    "ValidationReport",
    "HorizonExceeded",
    "InvalidSequence",
    "constant",
    "affine",
    "identity",
    "power",
    "fibonacci",
    "triangular",
    "square",
    "pronic",
    "cube",
    "catalan_numbers",
    "primes",
    "three_halves",
    "repetition",
    "explicit",
    "phi_of",
    "term",
    "iter_terms",
    "prefix",
    "validate",
    "catalog",
    "lookup",
]

KINDS = (
    "constant",
    "affine",
    "power",
    "fibonacci",
    "triangular",
    "square",
    "pronic",
    "cube",
    "catalan-numbers",
    "primes",
    "three-halves",
    "repetition",
    "explicit",
    "phi",
)


class HorizonExceeded(IndexError):
    """Raised when a finite sequence is evaluated past its last term."""


class InvalidSequence(ValueError):
    """Raised when a sequence is not positive and nondecreasing."""


@dataclass(frozen=True)
class InputSequenceSpec:
    """Declarative description of an input sequence ``y_1, y_2, ...``.

    ``params`` holds the integer parameters of the generator (``j`` for
    constant, ``(a, b)`` for ``a*n + b``, the base for powers). ``values``
    holds the terms of explicit and phi sequences. ``limit`` caps the
    horizon of otherwise unbounded generators.
    """

    kind: str
    params: tuple[int, ...] = ()
    values: tuple[int, ...] | None = None
    limit: int | None = None
    inner: InputSequenceSpec | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")

    @property
    def horizon(self) -> int | None:
        """Largest admissible index, or None when unbounded."""
        if self.values is not None:
            return len(self.values)
        return self.limit

    def __str__(self):
        return describe(self)


def describe(spec: InputSequenceSpec) -> str:
    """Render ``spec`` in the CLI grammar."""
    k = spec.kind
    if k in ("constant", "power"):
        text = f"{k}:{spec.params[0]}"
    elif k == "affine":
        text = f"affine:{spec.params[0]},{spec.params[1]}"
    elif k == "explicit":
        return "explicit:" + ",".join(map(str, spec.values))
    elif k == "phi":
        return f"phi:({describe(spec.inner)}),{len(spec.values)}"
    else:
        text = k
    if spec.limit is not None:
        text += f"@{spec.limit}"
    return text


def constant(j: int) -> InputSequenceSpec:
    return InputSequenceSpec("constant", (j,))


def affine(a: int, b: int) -> InputSequenceSpec:
    """The sequence ``a*n + b``."""
    return InputSequenceSpec("affine", (a, b))


def identity() -> InputSequenceSpec:
    return affine(1, 0)


def power(base: int) -> InputSequenceSpec:
    """The sequence ``base**(n-1)``."""
    return InputSequenceSpec("power", (base,))


def fibonacci() -> InputSequenceSpec:
    return InputSequenceSpec("fibonacci")


def triangular() -> InputSequenceSpec:
    """``C(n+1, 2)``."""
    return InputSequenceSpec("triangular")


def square() -> InputSequenceSpec:
    return InputSequenceSpec("square")


def pronic() -> InputSequenceSpec:
    """``n**2 + n``."""
    return InputSequenceSpec("pronic")


def cube() -> InputSequenceSpec:
    return InputSequenceSpec("cube")


def catalan_numbers() -> InputSequenceSpec:
    """``C(2n, n) / (n+1)``, i.e. 1, 2, 5, 14, ..."""
    return InputSequenceSpec("catalan-numbers")


def primes(limit: int | None = None) -> InputSequenceSpec:
    return InputSequenceSpec("primes", limit=limit)


def three_halves() -> InputSequenceSpec:
    """``floor((3/2)**n)``."""
    return InputSequenceSpec("three-halves")


def repetition() -> InputSequenceSpec:
    """Each ``m`` repeated ``m`` times: 1, 2, 2, 3, 3, 3, ..."""
    return InputSequenceSpec("repetition")


def explicit(values) -> InputSequenceSpec:
    values = tuple(int(v) for v in values)
    if not values:
        raise ValueError("explicit sequence needs at least one term")
    return InputSequenceSpec("explicit", values=values)


def phi_of(inner: InputSequenceSpec, horizon: int, max_width: int | None = None) -> InputSequenceSpec:
    """The output sequence of ``inner``, materialized for ``n <= horizon``."""
    from .engine import DEFAULT_MAX_WIDTH, output_sequence

    width = DEFAULT_MAX_WIDTH if max_width is None else max_width
    values = tuple(output_sequence(inner, horizon, width))
    return InputSequenceSpec("phi", values=values, inner=inner)


def _nth_prime_list(count: int) -> list[int]:
    found: list[int] = []
    candidate = 2
    while len(found) < count:
        if all(candidate % p for p in found if p * p <= candidate):
            found.append(candidate)
        candidate += 1
    return found


def _repetition_term(n: int) -> int:
    # smallest m with m(m+1)/2 >= n
    return (math.isqrt(8 * n - 7) + 1) // 2


def _closed_form(spec: InputSequenceSpec, n: int) -> int:
    k = spec.kind
    if k == "constant":
        return spec.params[0]
    if k == "affine":
        a, b = spec.params
        return a * n + b
    if k == "power":
        return spec.params[0] ** (n - 1)
    if k == "triangular":
        return n * (n + 1) // 2
    if k == "square":
        return n * n
    if k == "pronic":
        return n * n + n
    if k == "cube":
        return n ** 3
    if k == "catalan-numbers":
        return math.comb(2 * n, n) // (n + 1)
    if k == "three-halves":
        return 3 ** n // 2 ** n
    if k == "repetition":
        return _repetition_term(n)
    raise AssertionError(k)


def _check_index(spec: InputSequenceSpec, n: int) -> None:
    if n < 1:
        raise IndexError(f"sequence index must be >= 1, got {n}")
    h = spec.horizon
    if h is not None and n > h:
        raise HorizonExceeded(f"{describe(spec)} is defined only for n <= {h}, asked for n = {n}")


def _iterate(spec: InputSequenceSpec) -> Iterator[int]:
    """Yield y_1, y_2, ... (unbounded for closed-form kinds)."""
    k = spec.kind
    if spec.values is not None:
        yield from spec.values
    elif k == "fibonacci":
        a, b = 1, 1
        while True:
            yield a
            a, b = b, a + b
    elif k == "primes":
        found: list[int] = []
        candidate = 2
        while True:
            if all(candidate % p for p in found if p * p <= candidate):
                found.append(candidate)
                yield candidate
            candidate += 1
    else:
        n = 1
        while True:
            yield _closed_form(spec, n)
            n += 1


def iter_terms(spec: InputSequenceSpec) -> Iterator[int]:
    """Lazily yield ``y_1, y_2, ...`` up to the horizon."""
    h = spec.horizon
    for n, value in enumerate(_iterate(spec), start=1):
        if h is not None and n > h:
            return
        yield value


def term(spec: InputSequenceSpec, n: int) -> int:
    """Return ``y_n``."""
    _check_index(spec, n)
    if spec.values is not None:
        return spec.values[n - 1]
    if spec.kind == "fibonacci":
        a, b = 1, 1
        for _ in range(n - 1):
            a, b = b, a + b
        return a
    if spec.kind == "primes":
        return _nth_prime_list(n)[-1]
    return _closed_form(spec, n)


def prefix(spec: InputSequenceSpec, n: int) -> list[int]:
    """Return ``[y_1, ..., y_n]``."""
    if n < 0:
        raise IndexError(f"prefix length must be >= 0, got {n}")
    if n:
        _check_index(spec, n)
    out = []
    for value in _iterate(spec):
        if len(out) == n:
            break
        out.append(value)
    return out


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def check_terms(y) -> ValidationReport:
    prev = None
    for i, v in enumerate(y, start=1):
        if v < 1:
            return ValidationReport(False, i, f"y_{i} = {v} is not positive")
        if prev is not None and v < prev:
            return ValidationReport(False, i, f"y_{i} = {v} < y_{i - 1} = {prev}")
        prev = v
    return ValidationReport(True)


def validate(spec: InputSequenceSpec, horizon: int) -> ValidationReport:
    """Check positivity and monotonicity of ``y_1..y_horizon``."""
    h = spec.horizon
    if h is not None and horizon > h:
        report = check_terms(prefix(spec, h))
        if not report:
            return report
        return ValidationReport(False, h + 1, f"sequence ends at n = {h}")
    return check_terms(prefix(spec, horizon))


def require_valid(spec: InputSequenceSpec, n: int) -> list[int]:
    """Return ``prefix(spec, n)`` or raise if it is not a legal input."""
    y = prefix(spec, n)
    report = check_terms(y)
    if not report:
        raise InvalidSequence(f"{describe(spec)}: {report.reason}")
    return y


# --- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class SequenceRecord:
    name: str
    spec: InputSequenceSpec
    expected_output_prefix: tuple[int, ...]
    oeis_id: str | None
    notes: str = ""
    discrepancy: bool = False
    # the listing printed alongside the sequence, when it differs from
    # expected_output_prefix (leading W(0) term or a known misprint)
    printed: tuple[int, ...] = ()


def _formula_terms(f, count=8):
    return tuple(f(n) for n in range(1, count + 1))


def _build_catalog() -> tuple[SequenceRecord, ...]:
    comb = math.comb
    return (
        SequenceRecord(
            "identity", identity(),
            _formula_terms(lambda n: comb(2 * n + 2, n + 1) // (n + 2)),
            "A000108", "Catalan numbers; the output array is the Catalan triangle",
        ),
        SequenceRecord(
            "catalan", catalan_numbers(),
            (2, 5, 24, 287, 9921, 1071177),
            None,
            "input is the Catalan numbers (output of identity, so Phi applied twice); "
            "terms come from direct enumeration; the printed listing 2,5,14,287 has "
            "14 where enumeration gives W(3) = 24 (suspected misprint)",
            discrepancy=True,
            printed=(2, 5, 14, 287),
        ),
        SequenceRecord(
            "odd", affine(2, -1),
            _formula_terms(lambda n: comb(3 * n + 1, n) // (n + 1)),
            "A006013",
        ),
        SequenceRecord(
            "even", affine(2, 0),
            _formula_terms(lambda n: comb(3 * n + 3, n + 1) // (2 * n + 3)),
            "A001764",
        ),
        SequenceRecord(
            "triple", affine(3, 0),
            _formula_terms(lambda n: comb(4 * n + 4, n + 1) // (3 * n + 4)),
            "A002293",
        ),
        SequenceRecord(
            "quadruple", affine(4, 0),
            _formula_terms(lambda n: comb(5 * n + 5, n + 1) // (4 * n + 5)),
            "A002294",
        ),
        SequenceRecord("triangular", triangular(), (2, 7, 37, 268, 2496), "A107877"),
        SequenceRecord("square", square(), (2, 9, 70, 805), "A177450"),
        SequenceRecord("pronic", pronic(), (3, 18, 172, 2313, 40626), "A177447"),
        SequenceRecord("cube", cube(), (2, 17, 404, 20002), None, "not in OEIS"),
        SequenceRecord(
            "fibonacci", fibonacci(), (2, 3, 7, 19, 75, 418), None,
            "not in OEIS; printed with the conventional leading W(0) = 1",
            printed=(1, 2, 3, 7, 19, 75, 418),
        ),
        SequenceRecord(
            "bracket", power(2), (2, 5, 19, 123, 1457), "A355519",
            "counts valid tournament brackets",
        ),
        SequenceRecord("power3", power(3), (2, 7, 58, 1317), None, "not in OEIS"),
        SequenceRecord(
            "primes", primes(limit=15),
            (3, 9, 37, 173, 1217, 7557, 60803, 419255), None,
            "first fifteen primes only; not in OEIS",
        ),
        SequenceRecord(
            "three-halves", three_halves(), (2, 5, 14, 56, 258, 1803, 18352), None,
            "input is A002379; output not in OEIS",
        ),
        SequenceRecord(
            "repetition", repetition(), (2, 5, 9, 23, 43, 70), None,
            "m repeated m times; not in OEIS",
        ),
    )


_CATALOG = _build_catalog()


def catalog() -> list[SequenceRecord]:
    return list(_CATALOG)


def lookup(name: str) -> SequenceRecord:
    for record in _CATALOG:
        if record.name == name:
            return record
    raise KeyError(name)
