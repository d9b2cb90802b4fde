"""Tabulate T, M and S for the bracket input y_n = 2^(n-1) far past the engine's reach.

Row sums come from Heinz's recurrence, so rows of width 2^80 cost nothing.

    python scripts/bracket_stats.py --n-max 82 --step 8
"""

import argparse

from outarray.analysis import heinz_row_sums, stats_from_sums


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=82)
    parser.add_argument("--step", type=int, default=8)
    parser.add_argument("--places", type=int, default=15)
    args = parser.parse_args()

    w = heinz_row_sums(args.n_max)
    print(f"{'n':>4}  {'T':<{args.places + 2}}  {'M':<{args.places + 2}}  S")
    rows = list(range(3, args.n_max + 1, args.step))
    if rows[-1] != args.n_max:
        rows.append(args.n_max)
    for n in rows:
        y = (2 ** (n - 3), 2 ** (n - 2), 2 ** (n - 1))
        s = stats_from_sums(n, y, tuple(w[n - 3:n])).decimals(args.places)
        print(f"{n:>4}  {s['T']}  {s['M']}  {s['S']}")


if __name__ == "__main__":
    main()
