"""Hard-decision and reliability-reduced list decoders.

Both list decoders share the same pipeline: syndrome, halted EEA giving the
cofactor pair (h1, h2), a half-distance shortcut, then rational interpolation
whose root pairs (A, B) recombine to locator candidates A*h1 + B*h2.  The
hard-decision decoder interpolates on all n points with agreement target tau;
the reduced decoder interpolates only on the L least reliable positions with
the smaller target tau_l, which is what cuts the interpolation cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from rsw.code import GrsCode
from rsw.interpolation import build_q, choose_parameters, proj_point, rational_roots, tau_l
from rsw.key_equation import KeyEqOutput, solve_key_equation


def johnson_radius(n: int, d: int) -> int:
    """Largest tau with tau < n - sqrt(n*(n-d)), in exact integer arithmetic."""
    if not 1 <= d <= n:
        raise ValueError("need 1 <= d <= n")
    return n - math.isqrt(n * (n - d)) - 1


def least_reliable_positions(eta, window: int) -> tuple[int, ...]:
    """Indices of the `window` smallest reliabilities, ties to the lower index."""
    eta = np.asarray(eta, dtype=float)
    order = np.argsort(eta, kind="stable")
    return tuple(sorted(int(i) for i in order[:window]))


@dataclass
class DecodeDiagnostics:
    stage: str = ""
    tau: int | None = None
    tau_l: int | None = None
    multiplicity: int | None = None
    list_size: int | None = None
    deg_h1: int | None = None
    positions: tuple[int, ...] | None = None
    candidate_count: int = 0


@dataclass
class DecodeResult:
    """outcome is "unique", "list", or "fail"; words are deduplicated and sorted."""

    outcome: str
    words: tuple[tuple[int, ...], ...]
    diagnostics: DecodeDiagnostics = dc_field(default_factory=DecodeDiagnostics)

    def contains(self, word) -> bool:
        return tuple(word) in self.words


@dataclass
class ReducedConfig:
    """Radius and window for reduced decoding.

    tau must satisfy d/2 <= tau < n - sqrt(n*(n-d)) + 1; the upper limit sits
    one above the hard-decision list-decoding radius because the reduced
    interpolation only answers for the window, not all n points.
    """

    tau: int
    window: int
    tau_l_override: int | None = None

    def validate(self, code: GrsCode) -> None:
        n, d = code.n, code.d
        if 2 * self.tau < d:
            raise ValueError(f"tau={self.tau} below half distance d/2={d / 2}")
        if (n - self.tau + 1) ** 2 <= n * (n - d):
            raise ValueError(f"tau={self.tau} beyond the supported radius")
        if not 1 <= self.window <= n:
            raise ValueError(f"window={self.window} outside [1, {n}]")
        if self.tau_l_override is not None and self.tau_l_override < 1:
            raise ValueError("tau_l_override must be >= 1")


def _half_distance_word(code: GrsCode, word, synd, keq: KeyEqOutput):
    """The shortcut word when h1 is a valid below-half-distance locator."""
    h1 = keq.h1
    if 2 * h1.degree >= code.d:
        return None
    if code.locator_positions(h1) is None:
        return None
    return code.forney_correct(word, h1, synd)


def _interpolation_words(
    code, word, synd, keq, positions, target, diag, min_ratio=None, widen=False
):
    """Shared interpolation stage; words found, with diag.stage set on failure.

    With widen=True the root extraction stretches its degree budget to the
    point where the window success law stops being satisfiable, so locators
    of weight beyond tau stay reachable when the window catches enough of
    their errors.  The fixed-radius decoder keeps the tight budget: its
    output contract is the radius-tau ball.
    """
    f = code.field
    h1, h2 = keq.h1, keq.h2
    deg_h1 = int(h1.degree)
    tau = diag.tau
    # degree budgets from the cofactor-expansion caps; generically
    # (tau - deg h1, tau - d + deg h1), simply clamped at zero
    w1 = max(0, tau + keq.a_off)
    w2 = max(0, tau + keq.b_off)
    try:
        params = choose_parameters(len(positions), target, w1, w2, min_ratio)
    except ValueError:
        # degenerate remainder ladder inflated the budget past the
        # existence bound; no interpolation guarantee exists for this word
        diag.stage = "fail_radius_guarantee"
        return ()
    diag.multiplicity = params.multiplicity
    diag.list_size = params.list_size
    diag.deg_h1 = deg_h1
    points = [
        proj_point(f, code.alphas[i], h2.evaluate(code.alphas[i]), h1.evaluate(code.alphas[i]))
        for i in positions
    ]
    qp = build_q(f, points, params)
    slack = 0
    if widen:
        # eps <= tau + (window - target) * s / ell is where the success law
        # ceases to be satisfiable; one slack unit covers one unit of eps
        slack = max(0, ((len(positions) - target) * params.multiplicity) // params.list_size)
    pairs = rational_roots(qp, slack=slack)
    diag.candidate_count = len(pairs)
    if not pairs:
        diag.stage = "fail_no_root_pairs"
        return ()
    found = set()
    saw_locator = False
    for f1, f2 in pairs:
        locator = (f1 * h1 + f2 * h2).monic()
        if locator.is_zero() or code.locator_positions(locator) is None:
            continue
        saw_locator = True
        corrected = code.forney_correct(word, locator, synd)
        if corrected is not None:
            found.add(corrected)
    if not saw_locator:
        diag.stage = "fail_no_valid_locator"
        return ()
    if not found:
        diag.stage = "fail_no_codeword"
        return ()
    diag.stage = "interpolation"
    return tuple(sorted(found))


def classical_decode(code: GrsCode, word) -> DecodeResult:
    """Half-the-minimum-distance decoding through the key equation alone."""
    word = tuple(word)
    synd = code.syndrome(word)
    diag = DecodeDiagnostics(tau=(code.d - 1) // 2)
    if synd.is_zero():
        diag.stage = "no_error"
        return DecodeResult("unique", (word,), diag)
    keq = solve_key_equation(code, synd)
    diag.deg_h1 = int(keq.h1.degree)
    corrected = _half_distance_word(code, word, synd, keq)
    if corrected is not None:
        diag.stage = "half_distance"
        return DecodeResult("unique", (corrected,), diag)
    diag.stage = "fail_half_distance"
    return DecodeResult("fail", (), diag)


def wu_decode(code: GrsCode, word, tau: int) -> DecodeResult:
    """Hard-decision list decoding up to the Johnson radius.

    Interpolates on all n points with agreement target tau; the parameter
    search additionally enforces ell/s >= 1 so the constructed Q also covers
    error counts below tau.
    """
    n, d = code.n, code.d
    if not (d - 1) // 2 <= tau <= johnson_radius(n, d):
        raise ValueError(
            f"tau={tau} outside [{(d - 1) // 2}, {johnson_radius(n, d)}]"
        )
    word = tuple(word)
    synd = code.syndrome(word)
    diag = DecodeDiagnostics(tau=tau)
    if synd.is_zero():
        diag.stage = "no_error"
        return DecodeResult("unique", (word,), diag)
    keq = solve_key_equation(code, synd)
    diag.deg_h1 = int(keq.h1.degree)
    corrected = _half_distance_word(code, word, synd, keq)
    if corrected is not None:
        diag.stage = "half_distance"
        return DecodeResult("unique", (corrected,), diag)
    if 2 * tau <= d:
        # radius adds nothing beyond the half-distance stage
        diag.stage = "fail_half_distance"
        return DecodeResult("fail", (), diag)
    words = _interpolation_words(
        code, word, synd, keq, tuple(range(n)), tau, diag, min_ratio=1.0, widen=False
    )
    if not words:
        return DecodeResult("fail", (), diag)
    return DecodeResult("list", words, diag)


def reduced_decode(code: GrsCode, word, eta, cfg: ReducedConfig) -> DecodeResult:
    """Reliability-reduced list decoding.

    Runs the half-distance shortcut, then rational interpolation restricted
    to the cfg.window least reliable positions with agreement target
    tau_l = floor(sqrt(window*(2*tau - d)) + 1) (or the override).
    """
    cfg.validate(code)
    word = tuple(word)
    eta = np.asarray(eta, dtype=float)
    if eta.shape != (code.n,):
        raise ValueError(f"eta must have length n={code.n}")
    synd = code.syndrome(word)
    diag = DecodeDiagnostics(tau=cfg.tau)
    if synd.is_zero():
        diag.stage = "no_error"
        return DecodeResult("unique", (word,), diag)
    keq = solve_key_equation(code, synd)
    diag.deg_h1 = int(keq.h1.degree)
    corrected = _half_distance_word(code, word, synd, keq)
    if corrected is not None:
        diag.stage = "half_distance"
        return DecodeResult("unique", (corrected,), diag)
    target = cfg.tau_l_override
    if target is None:
        target = tau_l(cfg.window, cfg.tau, code.d)
    diag.tau_l = target
    positions = least_reliable_positions(eta, cfg.window)
    diag.positions = positions
    words = _interpolation_words(code, word, synd, keq, positions, target, diag, widen=True)
    if not words:
        return DecodeResult("fail", (), diag)
    return DecodeResult("list", words, diag)


def membership_predicate(code, codeword, word, eta, cfg: ReducedConfig, s: int, ell: int) -> bool:
    """Membership law of the reduced decoder's output list.

    True iff the candidate codeword is within half distance, or its errors
    caught in the window satisfy wt_L >= tau_l - (ell/s)*(tau - wt), checked
    in exact integer arithmetic.
    """
    codeword = tuple(codeword)
    word = tuple(word)
    wt = sum(1 for a, b in zip(codeword, word) if a != b)
    if 2 * wt < code.d:
        return True
    target = cfg.tau_l_override
    if target is None:
        target = tau_l(cfg.window, cfg.tau, code.d)
    chosen = least_reliable_positions(eta, cfg.window)
    wt_l = sum(1 for i in chosen if codeword[i] != word[i])
    return s * wt_l >= s * target - ell * (cfg.tau - wt)
