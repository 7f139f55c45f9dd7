"""BPSK modulation over AWGN with symbol-level reliability extraction.

Each GF(2^m) symbol is sent as m BPSK symbols (bit 0 -> +1, bit 1 -> -1)
under the little-endian polynomial-basis bit mapping of the field.  With
unit energy per BPSK symbol and code rate R = k/n, the per-dimension noise
variance used here is

    sigma^2 = 1 / (2 * R * 10^(snr_db / 10)).

The receiver computes the log-ratio reliability matrix

    rho[i, b] = ln( exp(-|y_i - z_b|^2 / 2 sigma^2)
                    / sum_{l != b} exp(-|y_i - z_l|^2 / 2 sigma^2) ),

hardens it to r_i = argmax_b rho[i, b] (ties to the smaller symbol), and
keeps eta_i = best minus second-best row value.  Only the ordering of eta
is ever consumed downstream; no normalization is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from rsw.gf import Field

NOISELESS_SENTINEL = 1e18  # stands in for +-infinity in the sigma = 0 limit


@dataclass(frozen=True)
class ChannelConfig:
    snr_db: float
    rate: float
    seed: int | None = None

    @property
    def sigma2(self) -> float:
        return 1.0 / (2.0 * self.rate * 10.0 ** (self.snr_db / 10.0))

    @property
    def sigma(self) -> float:
        return float(np.sqrt(self.sigma2))


@dataclass
class SoftReceived:
    """One transmission: raw channel output, reliabilities, hard decision."""

    y: np.ndarray        # (n, m) real
    rho: np.ndarray      # (n, q) log-ratio reliabilities
    word: tuple[int, ...]
    eta: np.ndarray      # (n,) nonnegative top-two gaps


@lru_cache(maxsize=8)
def _modulation_table_cached(field: Field) -> np.ndarray:
    bits = ((np.arange(field.q)[:, None] >> np.arange(field.m)[None, :]) & 1)
    return (1.0 - 2.0 * bits).astype(float)


def modulation_table(field: Field) -> np.ndarray:
    """(q, m) matrix of BPSK points, row b = modulation of symbol b."""
    return _modulation_table_cached(field)


def modulate(field: Field, word) -> np.ndarray:
    """(n, m) matrix of +-1 values for a word of field symbols."""
    return modulation_table(field)[np.asarray(word, dtype=np.int64)]


def transmit(signal: np.ndarray, cfg: ChannelConfig, rng: np.random.Generator) -> np.ndarray:
    """Add white Gaussian noise; exact passthrough when sigma = 0."""
    if cfg.sigma == 0.0:
        return signal.copy()
    return signal + rng.normal(0.0, cfg.sigma, signal.shape)


def _log_ratio_rows(scores: np.ndarray) -> np.ndarray:
    """rho from per-symbol log-likelihood scores, shifted so no exp overflows.

    For every column the denominator sum is taken over the other columns.
    Off-argmax columns shift by the row max (the sum then dominates 1); the
    argmax column shifts by the runner-up instead, which keeps its sum >= 1
    as well, so the logs never see a vanishing argument.
    """
    nrows, ncols = scores.shape
    idx = np.arange(nrows)
    m1 = scores.max(axis=1, keepdims=True)
    am = scores.argmax(axis=1)
    expd = np.exp(scores - m1)
    total = expd.sum(axis=1, keepdims=True)
    with np.errstate(divide="ignore"):  # argmax column is recomputed below
        rho = scores - (m1 + np.log(total - expd))
    masked = scores.copy()
    masked[idx, am] = -np.inf
    m2 = masked.max(axis=1)
    d2 = np.exp(masked - m2[:, None]).sum(axis=1)
    rho[idx, am] = scores[idx, am] - (m2 + np.log(d2))
    return rho


def reliability_matrix(y: np.ndarray, cfg: ChannelConfig, field: Field) -> np.ndarray:
    """(n, q) log-ratio reliabilities of a received (n, m) signal matrix."""
    zmat = modulation_table(field)
    dist2 = ((y[:, None, :] - zmat[None, :, :]) ** 2).sum(axis=2)
    if cfg.sigma == 0.0:
        rho = np.full(dist2.shape, -NOISELESS_SENTINEL)
        rho[np.arange(len(y)), dist2.argmin(axis=1)] = NOISELESS_SENTINEL
        return rho
    return _log_ratio_rows(-dist2 / (2.0 * cfg.sigma2))


def harden(rho: np.ndarray) -> tuple[tuple[int, ...], np.ndarray]:
    """Hard decision and reliability vector from a rho matrix.

    r_i is the argmax of row i (ties resolved toward the smaller symbol
    value); eta_i is the gap between the two largest row entries, hence
    always >= 0 and 0 exactly on a tie.
    """
    if rho.ndim != 2 or rho.shape[1] < 2:
        raise ValueError("rho must be a matrix with at least two columns")
    word = tuple(int(b) for b in rho.argmax(axis=1))
    top2 = np.partition(rho, rho.shape[1] - 2, axis=1)[:, -2:]
    eta = top2[:, 1] - top2[:, 0]
    return word, np.maximum(eta, 0.0)
