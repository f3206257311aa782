"""Print the B-series for small ranks three ways: enumeration, Cramer's rule
and (where one is known) a closed theta-quotient form.

    python3 scripts/print_identities.py --order 15
"""
import argparse

from sldecomp.decomp import index_range, multiplicity_table, series_from_table
from sldecomp.identities import cramer_B, propmod_classify
from sldecomp.qseries import format_series
from sldecomp.suites import closed_forms


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--max-n", type=int, default=5)
    args = p.parse_args()
    N = args.order
    forms = closed_forms(N)
    for n in range(2, args.max_n + 1):
        for i in range(n):
            tbl = multiplicity_table(n, i, n * (N + n))
            for t in index_range(n, i):
                enum = series_from_table(tbl, t)
                top = min(N, enum.order)
                print(f"n={n} i={i} t={t}")
                print(f"  enumerated : {format_series(enum.truncate(top))} + O(q^{top + 1})")
                if propmod_classify(n, i):
                    print(f"  cramer     : {format_series(cramer_B(n, i, t, N))} + O(q^{N + 1})")
                if (n, i, t) in forms:
                    print(f"  closed form: {format_series(forms[n, i, t].truncate(N))} + O(q^{N + 1})")


if __name__ == "__main__":
    main()
