"""Run every catalog input through the engine and compare with the stored prefixes.

For each entry prints the computed output prefix, whether it matches the
stored one, the product bounds at the last row and the top fraction T.
"""

import argparse

from outarray.analysis import row_sum_lower_bound, row_sum_upper_bound_product, stats
from outarray.engine import output_sequence
from outarray.sequence import catalog


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--terms", type=int, default=6)
    args = parser.parse_args()

    for record in catalog():
        n = min(args.terms, record.spec.horizon or args.terms)
        w = output_sequence(record.spec, n)
        stored = list(record.expected_output_prefix[:n])
        agree = w[: len(stored)] == stored
        flag = "ok" if agree else "MISMATCH"
        if record.discrepancy:
            flag += f" (printed {' '.join(map(str, record.printed))})"
        lo, hi = row_sum_lower_bound(record.spec, n), row_sum_upper_bound_product(record.spec, n)
        top = stats(record.spec, n).T if n >= 3 else None
        print(f"{record.name:<13} {' '.join(map(str, w))}")
        print(f"{'':<13} {flag}; {lo} <= W({n}) <= {hi}; T({n}) = {float(top):.4f}")


if __name__ == "__main__":
    main()
