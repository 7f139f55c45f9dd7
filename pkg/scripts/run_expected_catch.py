#!/usr/bin/env python3
"""Expected caught-errors curve for RS(63,31,33) at 5 and 6 dB.

For each window size L the mean of eps_L + (ell/s)*(tau - eps) over words
that defeat half-distance decoding is compared against sqrt(L*(2*tau - d)).
Window sizes whose curve sits below that bound make poor operating points.
"""

import argparse
import time

from rsw.code import GrsCode
from rsw.gf import Field
from rsw.simulate import default_threads, expected_catch, write_records_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--threads", type=int, default=default_threads())
    ap.add_argument("--out", default="expected_catch.csv")
    args = ap.parse_args()

    code = GrsCode.reed_solomon(Field(6), 63, 31)
    windows = list(range(5, 61, 5))
    t0 = time.time()
    records = expected_catch(
        code, windows, [5.0, 6.0], args.trials, 19, args.seed, threads=args.threads
    )
    write_records_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out} in {time.time() - t0:.0f}s")
    for r in records:
        marker = "above" if r.mean_catch >= r.bound else "below"
        print(
            f"  snr={r.snr_db:3.1f} L={r.L:2d}: mean_catch={r.mean_catch:7.3f} "
            f"bound={r.bound:6.3f} ({marker}; ell/s={r.ell}/{r.s})"
        )


if __name__ == "__main__":
    main()
