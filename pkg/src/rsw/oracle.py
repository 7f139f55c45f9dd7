"""Brute-force reference decoders for tiny codes.

Ground truth for the list decoders: enumerate candidate error supports,
re-interpolate the message polynomial from the untouched positions, and keep
every codeword inside the requested Hamming ball.  Costs grow as C(n, radius)
erasure decodes, so a hard guard keeps usage at toy sizes.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from rsw.code import GrsCode
from rsw.gflinalg import solve_linear
from rsw.poly import Poly

MAX_N = 31
MAX_RADIUS = 6


def _erasure_decode(code: GrsCode, word, erased: frozenset[int]):
    """Unique codeword agreeing with word outside `erased`, or None.

    Interpolates the message polynomial through k kept positions and checks
    consistency on the remaining kept ones.
    """
    f = code.field
    kept = [i for i in range(code.n) if i not in erased]
    base, check = kept[: code.k], kept[code.k :]
    xs = [code.alphas[i] for i in base]
    ys = [f.div(word[i], code.vs[i]) for i in base]
    # Lagrange interpolation of degree < k
    msg = Poly.zero(f)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = Poly(f, (yi,))
        den = 1
        for j, xj in enumerate(xs):
            if j != i:
                num = num * Poly(f, (xj, 1))
                den = f.mul(den, xi ^ xj)
        msg = msg + num.scale(f.inv(den))
    for i in check:
        if f.mul(code.vs[i], msg.evaluate(code.alphas[i])) != word[i]:
            return None
    return code.encode([msg.coeffs[i] if i < len(msg.coeffs) else 0 for i in range(code.k)])


def oracle_list_decode(code: GrsCode, word, radius: int) -> set[tuple[int, ...]]:
    """Exact set of codewords within Hamming distance `radius` of `word`.

    Every support of size `radius` is erased in turn; a codeword at distance
    t <= radius differs on some size-t set, and any size-radius superset of
    it recovers that codeword, so size-radius supports alone are exhaustive.
    """
    word = tuple(word)
    if len(word) != code.n:
        raise ValueError(f"word must have length n={code.n}")
    if code.n > MAX_N or radius > MAX_RADIUS:
        raise ValueError(f"oracle guard: need n <= {MAX_N} and radius <= {MAX_RADIUS}")
    if radius > code.d - 1:
        raise ValueError("radius beyond d-1 erasures is not uniquely decodable")
    out = set()
    for erased in combinations(range(code.n), radius):
        cand = _erasure_decode(code, word, frozenset(erased))
        if cand is not None and sum(1 for a, b in zip(cand, word) if a != b) <= radius:
            out.add(cand)
    return out


def oracle_module_membership(locator: Poly, h1: Poly, h2: Poly, deg_a_max: int, deg_b_max: int):
    """Solve locator = A*h1 + B*h2 with deg A <= deg_a_max, deg B <= deg_b_max.

    Returns one solution (A, B) or None.  A negative degree bound forces the
    corresponding polynomial to zero; both bounds negative admit only the
    zero locator.
    """
    f = locator.field
    na = max(0, deg_a_max + 1)
    nb = max(0, deg_b_max + 1)
    if na + nb == 0:
        return None if not locator.is_zero() else (Poly.zero(f), Poly.zero(f))
    nrows = max(
        len(locator.coeffs),
        (na + len(h1.coeffs) if na else 0),
        (nb + len(h2.coeffs) if nb else 0),
    )
    mat = np.zeros((nrows, na + nb), np.int64)
    for col in range(na):  # coefficient a_col contributes x^col * h1
        for j, c in enumerate(h1.coeffs):
            mat[col + j, col] = c
    for col in range(nb):
        for j, c in enumerate(h2.coeffs):
            mat[col + j, na + col] = c
    rhs = np.zeros(nrows, np.int64)
    for i, c in enumerate(locator.coeffs):
        rhs[i] = c
    sol = solve_linear(mat, rhs, f)
    if sol is None:
        return None
    a = Poly(f, [int(v) for v in sol[:na]])
    b = Poly(f, [int(v) for v in sol[na:]])
    assert a * h1 + b * h2 == locator
    return a, b
