"""Regenerate tests/data/stripped_fixture.txt, a ten-term excerpt in OEIS stripped format.

Terms come from closed forms (Catalan-type numbers, Fibonacci) and from
Heinz's recurrence for the bracket sequence, each starting at the OEIS offset.
"""

import math
from pathlib import Path

from outarray.analysis import heinz_row_sums

TERMS = 10


def entries():
    fib = [0, 1]
    while len(fib) < TERMS:
        fib.append(fib[-1] + fib[-2])
    yield "A000045", fib
    yield "A000108", [math.comb(2 * n, n) // (n + 1) for n in range(TERMS)]
    yield "A001764", [math.comb(3 * n, n) // (2 * n + 1) for n in range(TERMS)]
    yield "A002293", [math.comb(4 * n, n) // (3 * n + 1) for n in range(TERMS)]
    yield "A006013", [math.comb(3 * n + 1, n) // (n + 1) for n in range(TERMS)]
    yield "A355519", [1] + heinz_row_sums(TERMS - 1)


def main():
    lines = ["# synthetic excerpt in OEIS stripped format, ten terms per entry"]
    lines += [f"{anum} ," + "".join(f"{t}," for t in terms) for anum, terms in entries()]
    path = Path(__file__).resolve().parent.parent / "tests" / "data" / "stripped_fixture.txt"
    path.write_text("\n".join(lines) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
