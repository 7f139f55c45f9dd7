"""Monte Carlo drivers: block-failure sweeps and expected-catch curves.

Reproducibility contract: every trial draws from its own substream seeded by
(seed, snr_key, trial_index), and all aggregation is over exact integer
counters, so results are byte-identical for any worker count.  Failure
counts are against the transmitted codeword: a decoder fails a trial when
its output (unique word or list) does not contain what was sent, covering
both wrong decoding and decoding failure.
"""

from __future__ import annotations

import csv
import math
import os
import time
from dataclasses import dataclass, fields
from fractions import Fraction
from multiprocessing import get_context

import numpy as np

from rsw.channel import ChannelConfig, SoftReceived, harden, modulate, reliability_matrix, transmit
from rsw.code import GrsCode
from rsw.decoders import ReducedConfig, classical_decode, reduced_decode, wu_decode
from rsw.interpolation import choose_parameters, tau_l


@dataclass
class SimRecord:
    snr_db: float
    trials: int
    failures_classical: int
    failures_wu: int
    failures_reduced: int
    L: int
    tau: int
    tau_L: int
    s: int
    ell: int
    wall_time_s: float


@dataclass
class CatchRecord:
    L: int
    snr_db: float
    mean_catch: float
    bound: float
    ell: int
    s: int


def _csv_value(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_records_csv(records, path) -> None:
    if not records:
        raise ValueError("no records to write")
    names = [f.name for f in fields(records[0])]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(names)
        for rec in records:
            w.writerow([_csv_value(getattr(rec, n)) for n in names])


def _trial_rng(seed: int, snr_key: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=(seed, snr_key, trial)))


def simulate_word(code: GrsCode, cc: ChannelConfig, rng: np.random.Generator):
    """One transmission: returns (sent codeword, SoftReceived)."""
    f = code.field
    info = [int(v) for v in rng.integers(0, f.q, code.k)]
    c = code.encode(info)
    y = transmit(modulate(f, c), cc, rng)
    rho = reliability_matrix(y, cc, f)
    word, eta = harden(rho)
    return c, SoftReceived(y=y, rho=rho, word=word, eta=eta)


def _design_params(code: GrsCode, window: int, tau: int, tau_l_override: int | None):
    """(tau_L, s, ell) used for reporting a window's design point.

    The split of the weighted-degree budget between the two slots depends on
    the per-word EEA outcome; absent clipping the monomial count only sees
    the sum, so the canonical split reproduces the runtime (s, ell).
    """
    target = tau_l_override if tau_l_override is not None else tau_l(window, tau, code.d)
    w = 2 * tau - code.d
    params = choose_parameters(window, target, w - w // 2, w // 2)
    return target, params.multiplicity, params.list_size


# -- worker plumbing (fork-based pools share state via the initializer) ------

_W: dict = {}


def _init_sweep_worker(code, snr_db, rate, windows, tau, tau_l_override, seed, snr_key):
    _W.update(
        code=code,
        cc=ChannelConfig(snr_db, rate),
        cfgs=[ReducedConfig(tau, w, tau_l_override) for w in windows],
        tau=tau,
        seed=seed,
        snr_key=snr_key,
    )


def _sweep_chunk(bounds):
    lo, hi = bounds
    code, cc, cfgs, tau = _W["code"], _W["cc"], _W["cfgs"], _W["tau"]
    fails = np.zeros(2 + len(cfgs), np.int64)
    for trial in range(lo, hi):
        rng = _trial_rng(_W["seed"], _W["snr_key"], trial)
        c, soft = simulate_word(code, cc, rng)
        if not classical_decode(code, soft.word).contains(c):
            fails[0] += 1
        if not wu_decode(code, soft.word, tau).contains(c):
            fails[1] += 1
        for j, cfg in enumerate(cfgs):
            if not reduced_decode(code, soft.word, soft.eta, cfg).contains(c):
                fails[2 + j] += 1
    return fails


def _init_catch_worker(code, snr_db, rate, windows, tau, seed, snr_key):
    _W.update(
        code=code,
        cc=ChannelConfig(snr_db, rate),
        windows=list(windows),
        tau=tau,
        seed=seed,
        snr_key=snr_key,
    )


def _catch_chunk(bounds):
    """Integer sums, conditioned on words that defeat half-distance decoding.

    Returns (conditioned_count, sum over those words of (tau - eps),
    per-window sums of eps_L).
    """
    lo, hi = bounds
    code, cc, windows, tau = _W["code"], _W["cc"], _W["windows"], _W["tau"]
    half = (code.d - 1) // 2
    cond = 0
    sum_tau_minus_eps = 0
    sums_eps_l = np.zeros(len(windows), np.int64)
    for trial in range(lo, hi):
        rng = _trial_rng(_W["seed"], _W["snr_key"], trial)
        c, soft = simulate_word(code, cc, rng)
        errs = [i for i in range(code.n) if soft.word[i] != c[i]]
        eps = len(errs)
        if eps <= half:
            continue
        cond += 1
        sum_tau_minus_eps += tau - eps
        err_set = set(errs)
        order = np.argsort(soft.eta, kind="stable")
        hits = np.cumsum([1 if int(i) in err_set else 0 for i in order])
        for j, window in enumerate(windows):
            sums_eps_l[j] += int(hits[window - 1])
    return cond, sum_tau_minus_eps, sums_eps_l


def _run_chunks(worker, init, initargs, trials, threads):
    step = 256
    chunks = [(lo, min(lo + step, trials)) for lo in range(0, trials, step)]
    if threads <= 1:
        init(*initargs)
        return [worker(ch) for ch in chunks]
    ctx = get_context("fork")
    with ctx.Pool(processes=threads, initializer=init, initargs=initargs) as pool:
        return pool.map(worker, chunks)


def _snr_key(snr_db: float) -> int:
    return round(snr_db * 1000)


def failure_sweep(
    code: GrsCode,
    snrs: list[float],
    trials: int,
    windows: list[int],
    tau: int,
    seed: int,
    threads: int = 1,
    tau_l_override: int | None = None,
) -> list[SimRecord]:
    """Block-failure counts per (snr, window) for all decoders."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if 2 * tau <= code.d:
        raise ValueError("sweep needs 2*tau > d")
    rate = code.k / code.n
    # validate every window's design point before burning trial time
    designs = {w: _design_params(code, w, tau, tau_l_override) for w in windows}
    records = []
    for snr in snrs:
        t0 = time.time()
        parts = _run_chunks(
            _sweep_chunk,
            _init_sweep_worker,
            (code, snr, rate, windows, tau, tau_l_override, seed, _snr_key(snr)),
            trials,
            threads,
        )
        fails = np.sum(parts, axis=0)
        wall = time.time() - t0
        for j, window in enumerate(windows):
            target, s, ell = designs[window]
            records.append(
                SimRecord(
                    snr_db=snr,
                    trials=trials,
                    failures_classical=int(fails[0]),
                    failures_wu=int(fails[1]),
                    failures_reduced=int(fails[2 + j]),
                    L=window,
                    tau=tau,
                    tau_L=target,
                    s=s,
                    ell=ell,
                    wall_time_s=round(wall, 3),
                )
            )
    return records


def expected_catch(
    code: GrsCode,
    windows: list[int],
    snrs: list[float],
    trials: int,
    tau: int,
    seed: int,
    threads: int = 1,
) -> list[CatchRecord]:
    """Mean of eps_L + (ell/s)*(tau - eps) against the bound sqrt(L*(2*tau-d)).

    The mean is taken over words whose error count defeats the half-distance
    stage (the regime the interpolation actually answers for); words below
    half distance never reach it.  All windows share each trial's channel
    output, which keeps the curve comparable across L.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rate = code.k / code.n
    designs = {w: _design_params(code, w, tau, None) for w in windows}
    records = []
    for snr in snrs:
        parts = _run_chunks(
            _catch_chunk,
            _init_catch_worker,
            (code, snr, rate, windows, tau, seed, _snr_key(snr)),
            trials,
            threads,
        )
        cond = sum(p[0] for p in parts)
        sum_tme = sum(p[1] for p in parts)
        sums_eps_l = np.sum([p[2] for p in parts], axis=0)
        for j, window in enumerate(windows):
            _, s, ell = designs[window]
            bound = math.sqrt(window * (2 * tau - code.d))
            if cond == 0:
                mean = float("nan")
            else:
                mean = float((Fraction(int(sums_eps_l[j])) + Fraction(ell, s) * sum_tme) / cond)
            records.append(
                CatchRecord(L=window, snr_db=snr, mean_catch=mean, bound=bound, ell=ell, s=s)
            )
    return records


def default_threads() -> int:
    env = os.environ.get("RSW_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1
