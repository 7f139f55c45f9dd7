import random

import numpy as np
import pytest

from rsw.code import GrsCode
from rsw.decoders import (
    ReducedConfig,
    classical_decode,
    johnson_radius,
    least_reliable_positions,
    reduced_decode,
    membership_predicate,
    wu_decode,
)
from rsw.gf import Field
from rsw.oracle import oracle_list_decode


@pytest.fixture(scope="module")
def rs15():
    return GrsCode.reed_solomon(Field(4), 15, 7)


@pytest.fixture(scope="module")
def rs63():
    return GrsCode.reed_solomon(Field(6), 63, 31)


def plant(code, rng, weight):
    info = [rng.randrange(code.field.q) for _ in range(code.k)]
    c = code.encode(info)
    pos = rng.sample(range(code.n), weight)
    r = list(c)
    for p in pos:
        r[p] ^= rng.randrange(1, code.field.q)
    return c, tuple(r), pos


def eta_with_window_errors(n, pos, in_window):
    eta = 1.0 + np.arange(n) / n
    for p in pos[:in_window]:
        eta[p] = 0.0
    return eta


def test_johnson_radius_values():
    assert johnson_radius(63, 33) == 19
    assert johnson_radius(15, 9) == 5
    assert johnson_radius(10, 10) == 9  # sqrt(0) edge, exact arithmetic
    with pytest.raises(ValueError):
        johnson_radius(5, 6)


def test_least_reliable_tie_break():
    eta = np.array([0.5, 0.1, 0.5, 0.1, 0.9])
    assert least_reliable_positions(eta, 3) == (0, 1, 3)


def test_classical_decode_roundtrip(rs15):
    rng = random.Random(1)
    for weight in range(0, 5):
        for _ in range(100):
            c, r, _ = plant(rs15, rng, weight)
            res = classical_decode(rs15, r)
            assert res.outcome == "unique" and res.words == (c,)


def test_classical_decode_fails_beyond_half(rs15):
    rng = random.Random(2)
    outcomes = [classical_decode(rs15, plant(rs15, rng, 6)[1]).outcome for _ in range(50)]
    assert outcomes.count("fail") > 40  # the rest are miscorrections


def test_wu_preconditions(rs63):
    c, r, _ = plant(rs63, random.Random(3), 5)
    with pytest.raises(ValueError):
        wu_decode(rs63, r, 15)
    with pytest.raises(ValueError):
        wu_decode(rs63, r, 20)


def test_wu_half_distance_path(rs63):
    rng = random.Random(4)
    for _ in range(30):
        c, r, _ = plant(rs63, rng, rng.randrange(0, 17))
        res = wu_decode(rs63, r, 19)
        assert res.outcome == "unique" and res.words == (c,)
        assert res.diagnostics.stage in ("no_error", "half_distance")


def test_wu_at_half_distance_radius_equals_classical(rs15):
    # tau = floor((d-1)/2) adds nothing beyond the key-equation stage
    rng = random.Random(5)
    for _ in range(200):
        weight = rng.randrange(0, 7)
        c, r, _ = plant(rs15, rng, weight)
        a = classical_decode(rs15, r)
        b = wu_decode(rs15, r, 4)
        assert a.outcome == b.outcome and a.words == b.words


def test_wu_list_regime_rs63(rs63):
    rng = random.Random(6)
    for _ in range(8):
        c, r, _ = plant(rs63, rng, 19)
        res = wu_decode(rs63, r, 19)
        assert res.contains(c)
        assert res.outcome == "list"
        # soundness: everything returned is a codeword within deg(locator)
        for w in res.words:
            assert rs63.is_codeword(w)
            assert sum(1 for a, b in zip(w, r) if a != b) <= 19 + 3


def test_wu_against_oracle(rs15):
    rng = random.Random(7)
    checked_lists = 0
    for _ in range(30):
        weight = rng.choice([4, 5, 5, 5])
        c, r, _ = plant(rs15, rng, weight)
        res = wu_decode(rs15, r, 5)
        truth = oracle_list_decode(rs15, r, 5)
        assert set(res.words) <= truth
        if res.outcome == "unique":
            # half-distance stop deliberately returns the one nearby word
            assert res.words[0] in truth
        else:
            assert set(res.words) == truth
            checked_lists += 1
    assert checked_lists >= 10


def test_reduced_config_validation(rs63):
    ReducedConfig(19, 25).validate(rs63)
    ReducedConfig(20, 25).validate(rs63)  # one past the list radius is legal
    with pytest.raises(ValueError):
        ReducedConfig(16, 25).validate(rs63)
    with pytest.raises(ValueError):
        ReducedConfig(21, 25).validate(rs63)
    with pytest.raises(ValueError):
        ReducedConfig(19, 0).validate(rs63)
    with pytest.raises(ValueError):
        ReducedConfig(19, 64).validate(rs63)
    with pytest.raises(ValueError):
        ReducedConfig(19, 25, tau_l_override=0).validate(rs63)


def test_reduced_half_distance_shortcut(rs63):
    rng = random.Random(8)
    eta = np.ones(63)
    for _ in range(20):
        c, r, _ = plant(rs63, rng, rng.randrange(0, 17))
        res = reduced_decode(rs63, r, eta, ReducedConfig(19, 25))
        assert res.outcome == "unique" and res.words == (c,)
        assert res.diagnostics.multiplicity is None  # interpolation never ran


def test_reduced_guarantee_at_design_point(rs63):
    # eps = tau = 19 with >= tau_L errors among the window
    rng = random.Random(9)
    cfg = ReducedConfig(19, 25)
    for _ in range(25):
        c, r, pos = plant(rs63, rng, 19)
        eta = eta_with_window_errors(63, pos, 12)
        res = reduced_decode(rs63, r, eta, cfg)
        assert res.contains(c)
        assert res.diagnostics.tau_l == 12
        assert (res.diagnostics.multiplicity, res.diagnostics.list_size) == (4, 8)


def test_reduced_beyond_radius_with_extra_catches(rs63):
    # eps = 21 > tau succeeds when the window catches enough errors
    rng = random.Random(10)
    cfg = ReducedConfig(19, 25)
    for _ in range(15):
        c, r, pos = plant(rs63, rng, 21)
        eta = eta_with_window_errors(63, pos, 16)
        res = reduced_decode(rs63, r, eta, cfg)
        assert res.contains(c)


def test_reduced_oracle_perfect_eta_monotone(rs63):
    # errors exactly the least reliable positions: always caught at eps = tau
    rng = random.Random(11)
    for window in (15, 25, 45):
        cfg = ReducedConfig(19, window)
        for _ in range(10):
            c, r, pos = plant(rs63, rng, 19)
            eta = eta_with_window_errors(63, pos, 19)
            res = reduced_decode(rs63, r, eta, cfg)
            assert res.contains(c)


def test_reduced_fail_when_window_misses(rs63):
    # adversarially bad eta: no errors inside the window at eps = 19
    rng = random.Random(12)
    cfg = ReducedConfig(19, 15)
    fails = 0
    for _ in range(20):
        c, r, pos = plant(rs63, rng, 19)
        eta = 1.0 + np.arange(63) / 63.0
        for p in pos:
            eta[p] = 2.0  # errors look most reliable
        res = reduced_decode(rs63, r, eta, cfg)
        fails += not res.contains(c)
    assert fails == 20


def test_reduced_duplicate_free_and_sound(rs63):
    rng = random.Random(13)
    cfg = ReducedConfig(19, 25)
    for _ in range(10):
        c, r, pos = plant(rs63, rng, 19)
        eta = eta_with_window_errors(63, pos, 13)
        res = reduced_decode(rs63, r, eta, cfg)
        assert len(set(res.words)) == len(res.words)
        for w in res.words:
            assert rs63.is_codeword(w)


def test_membership_predicate_examples(rs63):
    rng = random.Random(14)
    cfg = ReducedConfig(19, 25, tau_l_override=12)
    c, r, pos = plant(rs63, rng, 0)
    eta = np.ones(63)
    assert membership_predicate(rs63, c, r, eta, cfg, 1, 2)

    # wt = 18, wt_L = 10: 10 >= 12 - 2*(19 - 18) holds with ell/s = 2
    c, r, pos = plant(rs63, rng, 18)
    eta = eta_with_window_errors(63, pos, 10)
    for p in pos[10:]:
        eta[p] = 3.0  # keep the remaining errors out of the window
    assert membership_predicate(rs63, c, r, eta, cfg, 1, 2)

    # wt = 19, wt_L = 11: needs 12
    c, r, pos = plant(rs63, rng, 19)
    eta = eta_with_window_errors(63, pos, 11)
    for p in pos[11:]:
        eta[p] = 3.0
    assert not membership_predicate(rs63, c, r, eta, cfg, 1, 2)


def test_membership_predicate_matches_decoder(rs63):
    # on instances reaching interpolation, the predicate characterizes
    # membership of the transmitted word in the output list
    rng = random.Random(15)
    cfg = ReducedConfig(19, 25)
    agree = total = 0
    for _ in range(40):
        weight = rng.randrange(17, 23)
        in_window = rng.randrange(0, min(weight, 25) + 1)
        c, r, pos = plant(rs63, rng, weight)
        eta = eta_with_window_errors(63, pos, in_window)
        for p in pos[in_window:]:
            eta[p] = 3.0
        res = reduced_decode(rs63, r, eta, cfg)
        s, ell = res.diagnostics.multiplicity, res.diagnostics.list_size
        if s is None:
            continue
        total += 1
        agree += membership_predicate(rs63, c, r, eta, cfg, s, ell) == res.contains(c)
    assert total >= 35 and agree == total


def test_reduced_eta_length_validation(rs63):
    c, r, _ = plant(rs63, random.Random(16), 3)
    with pytest.raises(ValueError):
        reduced_decode(rs63, r, np.ones(10), ReducedConfig(19, 25))
