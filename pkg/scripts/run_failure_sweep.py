#!/usr/bin/env python3
"""Block-failure curves for RS(63,31,33), radius 19, windows 15/25/45.

Sweeps 5.0 to 6.0 dB in 0.25 dB steps.  With the default 10^4 trials per
point this resolves failure rates down to roughly 1e-3; expect a couple of
hours on one core (the 5.0 dB points dominate).  Pass --trials 1000 for a
quick look.
"""

import argparse
import time

from rsw.code import GrsCode
from rsw.gf import Field
from rsw.simulate import default_threads, failure_sweep, write_records_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--threads", type=int, default=default_threads())
    ap.add_argument("--out", default="failure_sweep.csv")
    args = ap.parse_args()

    code = GrsCode.reed_solomon(Field(6), 63, 31)
    snrs = [5.0 + 0.25 * i for i in range(5)]
    t0 = time.time()
    records = failure_sweep(
        code, snrs, args.trials, [15, 25, 45], 19, args.seed, threads=args.threads
    )
    write_records_csv(records, args.out)
    print(f"wrote {len(records)} rows to {args.out} in {time.time() - t0:.0f}s")
    for r in records:
        print(
            f"  snr={r.snr_db:4.2f} L={r.L:2d}: classical={r.failures_classical:5d}"
            f" wu={r.failures_wu:5d} reduced={r.failures_reduced:5d} / {r.trials}"
        )


if __name__ == "__main__":
    main()
