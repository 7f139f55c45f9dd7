"""Command-line front end: decode / sweep / catch.

Word file format for `decode`:
  line 1: m n k
  line 2: n received symbols (integers in [0, 2^m))
  line 3: optional n reliabilities (floats); presence selects the reduced
          decoder, absence the hard-decision list decoder.

Exit codes: 0 = at least one codeword found, 1 = decoding failed,
2 = usage or input-format error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from rsw.code import GrsCode
from rsw.decoders import ReducedConfig, johnson_radius, reduced_decode, wu_decode
from rsw.gf import Field
from rsw.simulate import default_threads, expected_catch, failure_sweep, write_records_csv


class InputFormatError(Exception):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")


def _parse_word_file(path):
    with open(path) as fh:
        lines = [ln.strip() for ln in fh]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputFormatError(1, "empty input file")
    head = lines[0].split()
    if len(head) != 3:
        raise InputFormatError(1, "expected 'm n k'")
    try:
        m, n, k = (int(v) for v in head)
    except ValueError:
        raise InputFormatError(1, "m, n, k must be integers") from None
    if len(lines) < 2:
        raise InputFormatError(2, "missing received word")
    try:
        word = [int(v) for v in lines[1].split()]
    except ValueError:
        raise InputFormatError(2, "received symbols must be integers") from None
    if len(word) != n:
        raise InputFormatError(2, f"expected {n} symbols, got {len(word)}")
    if any(not 0 <= v < (1 << m) for v in word):
        raise InputFormatError(2, f"symbols must lie in [0, {1 << m})")
    eta = None
    if len(lines) >= 3:
        try:
            eta = [float(v) for v in lines[2].split()]
        except ValueError:
            raise InputFormatError(3, "reliabilities must be numbers") from None
        if len(eta) != n:
            raise InputFormatError(3, f"expected {n} reliabilities, got {len(eta)}")
    return m, n, k, word, eta


def _build_code(args, m: int, n: int, k: int) -> GrsCode:
    field = Field(m, args.modulus)
    return GrsCode.reed_solomon(field, n, k)


def cmd_decode(args) -> int:
    try:
        m, n, k, word, eta = _parse_word_file(args.word_file)
    except (InputFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        code = _build_code(args, m, n, k)
        tau = args.tau if args.tau is not None else johnson_radius(n, n - k + 1)
        if eta is not None:
            if args.window is None:
                print("error: reduced decoding needs --L", file=sys.stderr)
                return 2
            if len(args.window) != 1:
                print("error: decode takes exactly one --L", file=sys.stderr)
                return 2
            cfg = ReducedConfig(tau, args.window[0], args.tau_l_override)
            res = reduced_decode(code, word, np.asarray(eta), cfg)
        else:
            res = wu_decode(code, word, tau)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    d = res.diagnostics
    print(f"outcome: {res.outcome}")
    print(f"stage: {d.stage}")
    print(f"tau: {d.tau}  tau_L: {d.tau_l}  s: {d.multiplicity}  ell: {d.list_size}")
    if d.positions is not None:
        print(f"window positions: {' '.join(str(p) for p in d.positions)}")
    print(f"candidate pairs: {d.candidate_count}")
    for i, w in enumerate(res.words):
        print(f"codeword {i}: {' '.join(str(s) for s in w)}")
    return 0 if res.words else 1


def _snr_list(args) -> list[float]:
    out = []
    v = args.snr_from
    while v <= args.snr_to + 1e-9:
        out.append(round(v, 6))
        v += args.snr_step
    return out


def cmd_sweep(args) -> int:
    field = Field(args.field_m, args.modulus)
    code = GrsCode.reed_solomon(field, args.n, args.k)
    tau = args.tau if args.tau is not None else johnson_radius(code.n, code.d)
    windows = args.window or [15, 25, 45]
    records = failure_sweep(
        code,
        _snr_list(args),
        args.trials,
        windows,
        tau,
        args.seed,
        threads=args.threads,
        tau_l_override=args.tau_l_override,
    )
    _emit(records, args.out)
    return 0


def cmd_catch(args) -> int:
    field = Field(args.field_m, args.modulus)
    code = GrsCode.reed_solomon(field, args.n, args.k)
    tau = args.tau if args.tau is not None else johnson_radius(code.n, code.d)
    windows = args.window or list(range(5, 61, 5))
    records = expected_catch(
        code, windows, _snr_list(args), args.trials, tau, args.seed, threads=args.threads
    )
    _emit(records, args.out)
    return 0


def _emit(records, out_path) -> None:
    if out_path:
        write_records_csv(records, out_path)
        return
    import csv as _csv
    from dataclasses import fields as _fields

    w = _csv.writer(sys.stdout)
    names = [f.name for f in _fields(records[0])]
    w.writerow(names)
    for rec in records:
        w.writerow([repr(getattr(rec, n)) if isinstance(getattr(rec, n), float) else getattr(rec, n) for n in names])


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field-m", type=int, default=6, help="extension degree m of GF(2^m)")
    p.add_argument("--modulus", type=lambda s: int(s, 0), default=None,
                   help="field modulus bitmask (e.g. 0b1000011); default per m")
    p.add_argument("--n", type=int, default=63)
    p.add_argument("--k", type=int, default=31)
    p.add_argument("--tau", type=int, default=None, help="decoding radius; default Johnson")
    p.add_argument("--L", dest="window", type=int, action="append",
                   help="window size; repeatable")
    p.add_argument("--tau-l-override", type=int, default=None,
                   help="force the window agreement target")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--threads", type=int, default=default_threads(),
                   help="worker processes (env RSW_THREADS as fallback)")
    p.add_argument("--out", type=str, default=None, help="CSV output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rsw", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    pd = sub.add_parser("decode", help="decode one received word from a file")
    _add_common(pd)
    pd.add_argument("word_file")
    pd.set_defaults(fn=cmd_decode)

    ps = sub.add_parser("sweep", help="Monte Carlo block-failure sweep over SNR")
    _add_common(ps)
    ps.add_argument("--snr-from", type=float, default=5.0)
    ps.add_argument("--snr-to", type=float, default=6.0)
    ps.add_argument("--snr-step", type=float, default=0.25)
    ps.add_argument("--trials", type=int, default=10000)
    ps.set_defaults(fn=cmd_sweep)

    pc = sub.add_parser("catch", help="expected caught-errors curve over window sizes")
    _add_common(pc)
    pc.add_argument("--snr-from", type=float, default=5.0)
    pc.add_argument("--snr-to", type=float, default=6.0)
    pc.add_argument("--snr-step", type=float, default=1.0)
    pc.add_argument("--trials", type=int, default=10000)
    pc.set_defaults(fn=cmd_catch)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
