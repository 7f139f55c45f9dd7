"""Soft-decision Reed-Solomon decoding toolkit.

Provides GF(2^m) arithmetic, generalized Reed-Solomon codes, a key-equation
solver based on the extended Euclidean algorithm, rational interpolation with
multiplicities, hard-decision and reliability-reduced list decoders, a
BPSK/AWGN channel model, and Monte Carlo simulation drivers.
"""

from rsw.gf import Field
from rsw.poly import Poly, BiPoly, eea_full, rational_reconstruct, series_roots
from rsw.code import GrsCode
from rsw.key_equation import KeyEqOutput, solve_key_equation
from rsw.interpolation import (
    InterpParams,
    ProjPoint,
    QPoly,
    build_q,
    choose_parameters,
    rational_roots,
    tau_l,
)
from rsw.decoders import (
    DecodeResult,
    ReducedConfig,
    classical_decode,
    johnson_radius,
    reduced_decode,
    membership_predicate,
    wu_decode,
)
from rsw.channel import ChannelConfig, SoftReceived, harden, modulate, reliability_matrix, transmit

__version__ = "0.1.0"
