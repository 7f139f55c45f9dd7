"""Rational interpolation with multiplicities.

Constructs a trivariate Q(x, y, z), homogeneous of degree ell in (y, z),
vanishing with multiplicity s at given points (x_i, y_i : z_i).  Coprime
pairs (f1, f2) within the weighted-degree budget that pass through at least
T of the points are then roots: Q(x, f1(x), f2(x)) = 0.  "Passing through"
a point means z_i*f1(x_i) + y_i*f2(x_i) = 0, i.e. (f1 : f2) agrees with
(y_i : z_i) projectively.

Weights: w1 is the degree budget of the y-slot (f1), w2 of the z-slot (f2);
a satisfying Q exists whenever the number of monomials of (1, w1, w2)-weighted
degree < s*T exceeds the N*s*(s+1)/2 vanishing constraints, which the
parameter search guarantees under T^2 > N*(w1 + w2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from rsw.gf import Field
from rsw.gflinalg import nullspace_vector
from rsw.poly import BiPoly, Poly, poly_gcd, rational_candidates, series_roots

SEARCH_BOUND_S = 64


def tau_l(window: int, tau: int, d: int) -> int:
    """Agreement target for a reduced window: floor(sqrt(window*(2*tau - d)) + 1).

    The result t always satisfies t^2 > window*(2*tau - d), the existence
    bound for the reduced interpolation problem.
    """
    if window < 1:
        raise ValueError("window size must be >= 1")
    if 2 * tau <= d:
        raise ValueError("2*tau must exceed d (below that radius the key "
                         "equation alone decodes)")
    return math.isqrt(window * (2 * tau - d)) + 1


@dataclass(frozen=True)
class InterpParams:
    """Dimensions of one rational interpolation problem."""

    n_points: int
    target: int  # minimum number of points a sought pair passes through
    w1: int
    w2: int
    multiplicity: int
    list_size: int

    @property
    def constraint_count(self) -> int:
        s = self.multiplicity
        return self.n_points * s * (s + 1) // 2

    @property
    def monomial_count(self) -> int:
        return monomial_count(self.multiplicity, self.list_size, self.target, self.w1, self.w2)


def monomial_count(s: int, ell: int, target: int, w1: int, w2: int) -> int:
    """Number of monomials x^j y^i z^(ell-i) with weighted degree < s*target."""
    a, b = max(w1, w2), min(w1, w2)
    base = s * target - b * ell
    if base <= 0:
        return 0
    if a == b:
        return (ell + 1) * base
    step = a - b
    imax = min(ell, (base - 1) // step)
    return (imax + 1) * base - step * imax * (imax + 1) // 2


def choose_parameters(
    n_points: int,
    target: int,
    w1: int,
    w2: int,
    min_ratio: float | None = None,
) -> InterpParams:
    """Smallest multiplicity s, then smallest ell, making Q guaranteed to exist.

    Existence means strictly more monomials than vanishing constraints.  The
    optional min_ratio enforces ell/s >= min_ratio (the fixed-radius decoder
    needs ell/s >= 1 so that its Q also covers fewer-than-target agreements).

    Raises ValueError when target^2 <= n_points*(w1+w2), i.e. the requested
    radius falls outside the guarantee region.
    """
    if w1 < 0 or w2 < 0:
        raise ValueError("weighted-degree budgets must be nonnegative")
    if target * target <= n_points * (w1 + w2):
        raise ValueError(
            f"radius beyond guarantee: target^2 = {target * target} must exceed "
            f"N*(w1+w2) = {n_points * (w1 + w2)}"
        )
    for s in range(1, SEARCH_BOUND_S + 1):
        constraints = n_points * s * (s + 1) // 2
        ell_lo = 1 if min_ratio is None else max(1, math.ceil(min_ratio * s))
        ell_cap = 2 * s * target + 2
        for ell in range(ell_lo, ell_cap + 1):
            if monomial_count(s, ell, target, w1, w2) > constraints:
                return InterpParams(n_points, target, w1, w2, s, ell)
    raise RuntimeError(f"parameter search exhausted s <= {SEARCH_BOUND_S}")


@dataclass(frozen=True)
class ProjPoint:
    """Interpolation point (x, y : z), stored normalized: z = 1 or (y, z) = (1, 0)."""

    x: int
    y: int
    z: int


def proj_point(field: Field, x: int, y: int, z: int) -> ProjPoint:
    if y == 0 and z == 0:
        raise ValueError("(0 : 0) is not a projective point")
    if z != 0:
        return ProjPoint(x, field.div(y, z), 1)
    return ProjPoint(x, 1, 0)


@dataclass(frozen=True)
class QPoly:
    """Q(x, y, z) = sum_i q_polys[i](x) * y^i * z^(ell - i)."""

    field: Field
    ell: int
    q_polys: tuple[Poly, ...]
    params: InterpParams

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.q_polys)

    def weighted_degree(self) -> int:
        w1, w2, ell = self.params.w1, self.params.w2, self.ell
        return max(
            int(p.degree) + i * w1 + (ell - i) * w2
            for i, p in enumerate(self.q_polys)
            if not p.is_zero()
        )

    def substitute(self, f1: Poly, f2: Poly) -> Poly:
        """Q(x, f1(x), f2(x)) as a univariate polynomial."""
        f = self.field
        acc = Poly.zero(f)
        pow1 = Poly.one(f)
        pows1 = []
        for _ in range(self.ell + 1):
            pows1.append(pow1)
            pow1 = pow1 * f1
        pow2 = Poly.one(f)
        for i in range(self.ell, -1, -1):
            if not self.q_polys[i].is_zero():
                acc = acc + self.q_polys[i] * pows1[i] * pow2
            pow2 = pow2 * f2
        return acc

    def evaluate(self, x0: int, y0: int, z0: int) -> int:
        f = self.field
        acc = 0
        for i, p in enumerate(self.q_polys):
            if not p.is_zero():
                term = f.mul(p.evaluate(x0), f.mul(f.pow(y0, i), f.pow(z0, self.ell - i)))
                acc ^= term
        return acc

    def dehomogenize_affine(self) -> BiPoly:
        """P(x, t) = Q(x, t, 1); roots t = f1/f2 with f2(0) != 0."""
        return BiPoly(self.field, list(self.q_polys))

    def dehomogenize_infinity(self) -> BiPoly:
        """P(x, u) = Q(x, 1, u); roots u = f2/f1 with f1(0) != 0."""
        return BiPoly(self.field, list(reversed(self.q_polys)))


def _monomial_basis(params: InterpParams):
    """Monomials (i, j) of weighted degree < s*T, sorted by (wdeg, i).

    The sort fixes which kernel vector build_q returns, which keeps decoder
    output reproducible.
    """
    s, ell, w1, w2, t = (
        params.multiplicity,
        params.list_size,
        params.w1,
        params.w2,
        params.target,
    )
    monos = []
    for i in range(ell + 1):
        budget = s * t - i * w1 - (ell - i) * w2
        for j in range(max(0, budget)):
            monos.append((j + i * w1 + (ell - i) * w2, i, j))
    monos.sort()
    mono_i = np.array([m[1] for m in monos], dtype=np.int64)
    mono_j = np.array([m[2] for m in monos], dtype=np.int64)
    return mono_i, mono_j


def _power_table(field: Field, base: int, count: int) -> np.ndarray:
    out = np.zeros(count, np.int64)
    v = 1
    for e in range(count):
        out[e] = v
        v = field.mul(v, base)
    return out


def build_q(field: Field, points: list[ProjPoint], params: InterpParams) -> QPoly:
    """Solve the vanishing-constraint system and assemble Q.

    For each point and each derivative order pair (a, b) with a + b < s, one
    linear constraint over the field: the (a, b) Hasse coefficient of the
    dehomogenized Q at the point must vanish.  The x_i must be pairwise
    distinct.  The kernel is nonempty by the parameter count; an empty
    kernel therefore indicates a bug and raises.
    """
    n = len(points)
    if n != params.n_points:
        raise ValueError(f"expected {params.n_points} points, got {n}")
    if len({p.x for p in points}) != n:
        raise ValueError("interpolation x-coordinates must be pairwise distinct")
    s, ell = params.multiplicity, params.list_size
    mono_i, mono_j = _monomial_basis(params)
    ncols = mono_i.size
    lg, e2 = field.np_log, field.np_exp2

    max_j = int(mono_j.max()) + 1 if ncols else 1
    rows = np.zeros((n * s * (s + 1) // 2, ncols), np.int64)
    row = 0
    for pt in points:
        lpx = lg[_power_table(field, pt.x, max_j)]
        lpt = lg[_power_table(field, pt.y, ell + 1)]
        for a in range(s):
            ja = mono_j - a
            binom_a = (mono_j & a) == a
            for b in range(s - a):
                if pt.z == 1:
                    ib = mono_i - b
                    valid = binom_a & (ja >= 0) & (ib >= 0) & ((mono_i & b) == b)
                    ls = lpx[np.where(ja >= 0, ja, 0)] + lpt[np.where(ib >= 0, ib, 0)]
                else:
                    # point (1 : 0): dehomogenize at y = 1, constrain u = z/y at 0
                    valid = binom_a & (ja >= 0) & (ell - mono_i == b)
                    ls = lpx[np.where(ja >= 0, ja, 0)]
                rows[row] = np.where(valid, e2[ls], 0)
                row += 1

    kern = nullspace_vector(rows, field)
    if kern is None:
        raise RuntimeError(
            "interpolation system has trivial kernel; parameter selection is broken"
        )
    coeff_lists: list[list[int]] = [[] for _ in range(ell + 1)]
    for i in range(ell + 1):
        coeff_lists[i] = [0] * (int(mono_j[mono_i == i].max()) + 1 if np.any(mono_i == i) else 0)
    for col in range(ncols):
        coeff_lists[int(mono_i[col])][int(mono_j[col])] = int(kern[col])
    q_polys = tuple(Poly(field, cl) for cl in coeff_lists)
    qp = QPoly(field, ell, q_polys, params)
    if qp.is_zero():
        raise RuntimeError("kernel vector assembled to the zero polynomial")
    if qp.weighted_degree() >= s * params.target:
        raise RuntimeError("weighted-degree invariant violated by construction")
    return qp


def _strip_x_content(p: BiPoly) -> BiPoly:
    v = p.content_valuation()
    return p.shift_down_x(v) if v else p


def rational_roots(qp: QPoly, slack: int = 0) -> list[tuple[Poly, Poly]]:
    """All projective-distinct coprime pairs with Q(x, f1, f2) = 0.

    Degree budget: deg f1 <= w1 + slack, deg f2 <= w2 + slack.  Positive
    slack widens the search beyond the design radius; every candidate is
    verified by exact substitution, so slack never costs soundness.

    Pairs are normalized with f2 monic (f1 monic when f2 = 0) and returned
    in a deterministic order.  The empty list is a legal outcome.
    """
    params = qp.params
    w1e = params.w1 + slack
    w2e = params.w2 + slack
    prec = w1e + w2e + 1
    field = qp.field
    seen = {}
    rejected = set()

    # spot-check grid: evaluating the q_i once makes each candidate's
    # pre-filter a handful of scalar operations; only survivors pay for the
    # exact symbolic substitution
    spots = list(range(2, min(field.q, 10)))
    qvals = [[p.evaluate(x0) for p in qp.q_polys] for x0 in spots]

    def consider(f1: Poly, f2: Poly):
        if f1.is_zero() and f2.is_zero():
            return
        if f2.is_zero():
            f1 = f1.monic()
        elif f1.is_zero():
            f2 = f2.monic()
        else:
            c = field.inv(f2.coeffs[-1])
            f1, f2 = f1.scale(c), f2.scale(c)
        key = (f1.coeffs, f2.coeffs)
        if key in seen or key in rejected:
            return
        for x0, qv in zip(spots, qvals):
            y0, z0 = f1.evaluate(x0), f2.evaluate(x0)
            acc = 0
            for i in range(qp.ell, -1, -1):
                acc = field.mul(acc, y0) ^ field.mul(qv[i], field.pow(z0, qp.ell - i))
            if acc != 0:
                rejected.add(key)
                return
        if (not f1.is_zero() and not f2.is_zero() and poly_gcd(f1, f2).degree != 0) or (
            not qp.substitute(f1, f2).is_zero()
        ):
            rejected.add(key)
            return
        seen[key] = (f1, f2)

    def extract(bipoly: BiPoly, swap: bool):
        if bipoly.degree_t < 1:  # constant in t: no roots on this chart
            return
        for sigma in series_roots(bipoly, prec):
            if swap:
                for num, den in rational_candidates(sigma, prec, w2e, w1e):
                    consider(den, num)
            else:
                for f1, f2 in rational_candidates(sigma, prec, w1e, w2e):
                    consider(f1, f2)

    extract(_strip_x_content(qp.dehomogenize_affine()), swap=False)
    extract(_strip_x_content(qp.dehomogenize_infinity()), swap=True)

    out = sorted(
        seen.values(),
        key=lambda p: (len(p[0].coeffs), len(p[1].coeffs), p[0].coeffs, p[1].coeffs),
    )
    return out
