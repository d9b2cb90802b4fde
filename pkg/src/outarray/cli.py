"""Command-line interface.

Sequence specs
--------------
A spec is either a catalog name (``outarray seq list``) or one of::

    constant:J          y_n = J
    affine:A,B          y_n = A*n + B          (identity = affine:1,0)
    power:B             y_n = B**(n-1)         (bracket = power:2)
    fib | fibonacci     1, 1, 2, 3, 5, ...
    triangular          C(n+1, 2)
    square | pronic | cube
    catalan-numbers     1, 2, 5, 14, ...
    primes              2, 3, 5, 7, ...
    three-halves        floor((3/2)**n)
    repetition          1, 2, 2, 3, 3, 3, ...
    explicit:V1,V2,...  a finite list
    phi:(SPEC)[,H]      output sequence of SPEC, first H terms (default 10)

Any generator may take ``@H`` to cap its horizon, e.g. ``primes@15``.
Catalog names take precedence, so ``primes`` is the fifteen-term entry.

Exit status: 0 success, 1 a check failed, 2 usage or parse error,
3 width limit exceeded, 4 enumeration budget exceeded, 5 other errors.
"""

from __future__ import annotations

import argparse
import io
import json
import os
import sys
from dataclasses import dataclass, replace

from . import analysis, engine, formats, oracle, polynomials, sequence
from .sequence import InputSequenceSpec, describe

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_WIDTH, EXIT_BUDGET, EXIT_ERROR = range(6)
MAX_WIDTH_ENV = "OUTARRAY_MAX_WIDTH"
DEFAULT_PHI_TERMS = 10


class SpecParseError(ValueError):
    pass


class UsageError(Exception):
    pass


_SIMPLE = {
    "fib": sequence.fibonacci,
    "fibonacci": sequence.fibonacci,
    "triangular": sequence.triangular,
    "square": sequence.square,
    "pronic": sequence.pronic,
    "cube": sequence.cube,
    "catalan-numbers": sequence.catalan_numbers,
    "primes": sequence.primes,
    "three-halves": sequence.three_halves,
    "repetition": sequence.repetition,
    "identity": sequence.identity,
}


def _ints(text: str, count: int | None, what: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",")]
    except ValueError:
        raise SpecParseError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if count is not None and len(values) != count:
        raise SpecParseError(f"{what}: expected {count} integer(s), got {len(values)}")
    return values


def parse_spec(text: str, max_width: int = engine.DEFAULT_MAX_WIDTH) -> InputSequenceSpec:
    text = text.strip()
    if not text:
        raise SpecParseError("empty sequence spec")
    if text.startswith("phi:"):
        body = text[4:]
        if not body.startswith("("):
            raise SpecParseError("phi needs a parenthesized inner spec, e.g. phi:(identity)")
        depth = 0
        for i, ch in enumerate(body):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        if depth:
            raise SpecParseError(f"unbalanced parentheses in {text!r}")
        inner = parse_spec(body[1:i], max_width)
        rest = body[i + 1:]
        if rest and not rest.startswith(","):
            raise SpecParseError(f"unexpected {rest!r} after phi:(...)")
        horizon = _ints(rest[1:], 1, "phi horizon")[0] if rest else DEFAULT_PHI_TERMS
        return sequence.phi_of(inner, horizon, max_width)

    try:
        return sequence.lookup(text).spec
    except KeyError:
        pass

    limit = None
    if "@" in text:
        text, _, cap = text.rpartition("@")
        limit = _ints(cap, 1, "horizon cap")[0]
        if limit < 1:
            raise SpecParseError("horizon cap must be positive")
    name, _, args = text.partition(":")
    if name in _SIMPLE and not args:
        spec = _SIMPLE[name]()
    elif name == "constant":
        spec = sequence.constant(*_ints(args, 1, name))
    elif name == "affine":
        spec = sequence.affine(*_ints(args, 2, name))
    elif name == "power":
        spec = sequence.power(*_ints(args, 1, name))
    elif name == "explicit":
        if limit is not None:
            raise SpecParseError("explicit lists take no horizon cap")
        return sequence.explicit(_ints(args, None, name))
    else:
        raise SpecParseError(f"unknown sequence spec {text!r}")
    return replace(spec, limit=limit) if limit is not None else spec


@dataclass
class RunConfig:
    spec_text: str
    rows: int
    max_width: int = engine.DEFAULT_MAX_WIDTH
    output_format: str = "table"
    offset: int = 1
    include_w0: bool = False

    def __post_init__(self):
        if self.rows < 1:
            raise UsageError("row/term count must be >= 1")
        if self.output_format not in ("table", "json", "bfile"):
            raise UsageError(f"unknown output format {self.output_format!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")

    def exit(self, status=0, message=None):
        if message:
            raise UsageError(message.strip())
        raise _HelpShown()


class _HelpShown(Exception):
    pass


def _default_width() -> int:
    value = os.environ.get(MAX_WIDTH_ENV)
    if not value:
        return engine.DEFAULT_MAX_WIDTH
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{MAX_WIDTH_ENV} must be an integer, got {value!r}") from None


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="outarray", description="Output arrays and output sequences of integer input sequences.")
    p.add_argument("--max-width", type=_positive, default=None,
                   help=f"column limit per row (default ${MAX_WIDTH_ENV} or {engine.DEFAULT_MAX_WIDTH})")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("seq", help="list or show catalog sequences")
    s.add_argument("action", choices=["list", "show"])
    s.add_argument("name", nargs="?")

    s = sub.add_parser("array", help="print the output array")
    s.add_argument("spec")
    s.add_argument("--rows", type=_positive, required=True)
    s.add_argument("--format", choices=["table", "json"], default="table")
    s.add_argument("--width-cap", type=_positive, default=1000, help="JSON: expand rows up to this width")

    s = sub.add_parser("sums", help="print the output sequence W(1..N)")
    s.add_argument("spec")
    s.add_argument("--terms", type=_positive, required=True)
    s.add_argument("--format", choices=["table", "json", "bfile"], default="table")
    s.add_argument("--offset", type=int, default=None)
    s.add_argument("--w0", action="store_true", help="prepend the conventional W(0) = 1")

    s = sub.add_parser("stats", help="top/middle/small decomposition of W(n)")
    s.add_argument("spec")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--via-heinz", action="store_true", help="bracket sequence only: use Heinz's recurrence")
    s.add_argument("--places", type=_nonneg, default=15)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("poly", help="fit the column polynomial p_k")
    s.add_argument("spec")
    s.add_argument("--k", type=_nonneg, required=True)
    s.add_argument("--verify-extra", type=_nonneg, default=4)
    s.add_argument("--form", choices=["common", "descending", "ascending", "pairs"], default="common")

    s = sub.add_parser("bounds", help="check entry and row-sum bounds")
    s.add_argument("spec")
    s.add_argument("--n-max", type=_positive, required=True)
    s.add_argument("--json", action="store_true")

    s = sub.add_parser("verify", help="cross-check the array against brute-force counting")
    s.add_argument("spec")
    s.add_argument("--n-max", type=_positive, required=True)
    s.add_argument("--budget", type=_positive, default=oracle.DEFAULT_BUDGET)

    s = sub.add_parser("bfile", help="write the output sequence as an OEIS b-file")
    s.add_argument("spec")
    s.add_argument("--terms", type=_positive, required=True)
    s.add_argument("--offset", type=int, default=None)
    s.add_argument("--w0", action="store_true")

    s = sub.add_parser("lookup", help="search a local OEIS stripped dump for the output sequence")
    s.add_argument("spec")
    s.add_argument("--stripped", required=True)
    s.add_argument("--terms", type=_positive, default=8)
    s.add_argument("--min-match", type=_positive, default=8)

    s = sub.add_parser("phi", help="print the output sequence as an explicit spec")
    s.add_argument("spec")
    s.add_argument("--terms", type=_positive, required=True)
    return p


def _terms(spec, cfg: RunConfig) -> list[int]:
    w = engine.output_sequence(spec, cfg.rows, cfg.max_width)
    return [1] + w if cfg.include_w0 else w


def _cmd_seq(args, out, width):
    if args.action == "list":
        for r in sequence.catalog():
            oeis = r.oeis_id or "not in OEIS"
            flag = "  [discrepancy]" if r.discrepancy else ""
            out.write(f"{r.name:<14} {describe(r.spec):<18} {oeis:<12}{flag}\n")
        return EXIT_OK
    if not args.name:
        raise UsageError("seq show needs a name")
    try:
        r = sequence.lookup(args.name)
    except KeyError:
        raise UsageError(f"no catalog entry {args.name!r}") from None
    out.write(f"name:     {r.name}\nspec:     {describe(r.spec)}\n")
    out.write(f"y:        {' '.join(map(str, sequence.prefix(r.spec, min(8, r.spec.horizon or 8))))}\n")
    out.write(f"W:        {' '.join(map(str, r.expected_output_prefix))}\n")
    if r.printed:
        out.write(f"printed:  {' '.join(map(str, r.printed))}\n")
    out.write(f"oeis:     {r.oeis_id or 'not in OEIS'}\n")
    if r.notes:
        out.write(f"notes:    {r.notes}\n")
    return EXIT_OK


def _cmd_array(args, out, width):
    spec = parse_spec(args.spec, width)
    array = engine.build(spec, args.rows, width)
    if args.format == "json":
        out.write(formats.array_to_json(array, args.width_cap) + "\n")
    else:
        out.write(formats.render_table(array))
    return EXIT_OK


def _cmd_sums(args, out, width):
    fmt = args.format
    offset = args.offset if args.offset is not None else (0 if args.w0 else 1)
    cfg = RunConfig(args.spec, args.terms, width, fmt, offset, args.w0)
    w = _terms(parse_spec(cfg.spec_text, width), cfg)
    if fmt == "bfile":
        out.write(formats.export_bfile(w, cfg.offset))
    elif fmt == "json":
        out.write(json.dumps({"spec": cfg.spec_text, "offset": cfg.offset, "W": [str(v) for v in w]}) + "\n")
    else:
        out.write(" ".join(map(str, w)) + "\n")
    return EXIT_OK


def _cmd_stats(args, out, width):
    spec = parse_spec(args.spec, width)
    if args.via_heinz:
        if spec != sequence.power(2):
            raise UsageError("--via-heinz applies only to the bracket sequence power:2")
        st = analysis.bracket_stats_via_heinz(args.n)
    else:
        st = analysis.stats(spec, args.n, width)
    approx = st.decimals(args.places)
    if args.json:
        doc = {"n": st.n, "R": st.middle_term_count}
        for name in "TMS":
            doc[name] = str(getattr(st, name))
            doc[name + "_approx"] = approx[name]
        out.write(json.dumps(doc) + "\n")
        return EXIT_OK
    out.write(f"n = {st.n}, middle terms R = {st.middle_term_count}\n")
    for name in "TMS":
        value = getattr(st, name)
        exact = str(value)
        if len(exact) > 80:
            exact = f"<{value.numerator.bit_length()}-bit / {value.denominator.bit_length()}-bit fraction>"
        out.write(f"{name}({st.n}) = {exact}  ~ {approx[name]} (approx.)\n")
    return EXIT_OK


def _cmd_poly(args, out, width):
    spec = parse_spec(args.spec, width)
    poly = polynomials.column_polynomial(spec, args.k, args.verify_extra, width)
    if args.form == "pairs":
        out.write(json.dumps(poly.pairs()) + "\n")
    elif args.form == "ascending":
        out.write(poly.render(descending=False) + "\n")
    elif args.form == "descending":
        out.write(poly.render() + "\n")
    else:
        out.write(poly.render_common() + "\n")
    return EXIT_OK


def _cmd_bounds(args, out, width):
    spec = parse_spec(args.spec, width)
    report = analysis.check_bounds(spec, args.n_max, width)
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_verify(args, out, width):
    spec = parse_spec(args.spec, width)
    array = engine.build(spec, args.n_max, width)
    bad = 0
    for n in range(1, args.n_max + 1):
        expected = oracle.count_row(spec, n, args.budget)
        got = array.row(n).values()
        if got != expected:
            bad += 1
            k = next((i for i, (a, b) in enumerate(zip(got, expected)) if a != b), min(len(got), len(expected)))
            out.write(f"row {n}: mismatch at column {k}\n")
    if bad:
        out.write(f"{describe(spec)}: {bad} row(s) disagree\n")
        return EXIT_CHECK_FAILED
    out.write(f"{describe(spec)}: engine matches brute-force counts for n <= {args.n_max}\n")
    return EXIT_OK


def _cmd_bfile(args, out, width):
    offset = args.offset if args.offset is not None else (0 if args.w0 else 1)
    cfg = RunConfig(args.spec, args.terms, width, "bfile", offset, args.w0)
    out.write(formats.export_bfile(_terms(parse_spec(cfg.spec_text, width), cfg), cfg.offset))
    return EXIT_OK


def _cmd_lookup(args, out, width):
    spec = parse_spec(args.spec, width)
    w = engine.output_sequence(spec, args.terms, width)
    index = formats.OeisStrippedIndex.load(args.stripped)
    hits = formats.lookup_stripped(index, w, args.min_match)
    out.write("\n".join(hits) + "\n" if hits else "not found in dump\n")
    return EXIT_OK


def _cmd_phi(args, out, width):
    spec = parse_spec(args.spec, width)
    out.write(describe(analysis.phi(spec, args.terms, width)) + "\n")
    return EXIT_OK


_COMMANDS = {
    "seq": _cmd_seq,
    "array": _cmd_array,
    "sums": _cmd_sums,
    "stats": _cmd_stats,
    "poly": _cmd_poly,
    "bounds": _cmd_bounds,
    "verify": _cmd_verify,
    "bfile": _cmd_bfile,
    "lookup": _cmd_lookup,
    "phi": _cmd_phi,
}


def run(argv) -> tuple[int, str]:
    """Run one command; return ``(exit status, output or diagnostic)``."""
    out = io.StringIO()
    try:
        args = build_parser().parse_args(argv)
        width = args.max_width if args.max_width is not None else _default_width()
        status = _COMMANDS[args.command](args, out, width)
    except _HelpShown:
        return EXIT_OK, build_parser().format_help()
    except (UsageError, SpecParseError) as exc:
        return EXIT_USAGE, f"error: {exc}\n"
    except engine.WidthLimitExceeded as exc:
        return EXIT_WIDTH, f"error: {exc}\n"
    except oracle.BudgetExceeded as exc:
        return EXIT_BUDGET, f"error: {exc}\n"
    except (ValueError, IndexError, RuntimeError, OSError) as exc:
        return EXIT_ERROR, f"error: {exc}\n"
    return status, out.getvalue()


def main(argv=None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    (sys.stdout if status in (EXIT_OK, EXIT_CHECK_FAILED) else sys.stderr).write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
