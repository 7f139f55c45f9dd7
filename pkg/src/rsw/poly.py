"""Dense univariate and bivariate polynomial arithmetic over GF(2^m).

Univariate polynomials carry a reference to their field and store
coefficients with index = degree.  The zero polynomial has degree -inf so
degree comparisons order it below every integer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rsw.gf import Field

NEG_INF = float("-inf")


class Poly:
    """Dense polynomial over a Field; immutable by convention."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        n = len(coeffs)
        while n and coeffs[n - 1] == 0:
            n -= 1
        self.field = field
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x_pow(cls, field: Field, k: int, c: int = 1) -> "Poly":
        """c * x^k"""
        return cls(field, (0,) * k + (c,))

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Poly":
        """Monic product of (x - r) over the given roots."""
        p = cls.one(field)
        for r in roots:
            p = p * cls(field, (r, 1))
        return p

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs and self.field is other.field

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] ^= c
        return Poly(self.field, out)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        if len(a) * len(b) >= 1024:
            return self._mul_vectorized(other)
        logs = self.field._logs
        exp2 = self.field._exp2
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                la = logs[ca]
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] ^= exp2[la + logs[cb]]
        return Poly(self.field, out)

    def _mul_vectorized(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        f = self.field
        logs = f._logs
        lb = f.np_log[np.asarray(b, dtype=np.int64)]
        e2 = f.np_exp2
        out = np.zeros(len(a) + len(b) - 1, np.int64)
        for i, ca in enumerate(a):
            if ca:
                out[i : i + len(b)] ^= e2[logs[ca] + lb]
        return Poly(f, out.tolist())

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.field)
        logs = self.field._logs
        exp2 = self.field._exp2
        lc = logs[c]
        return Poly(self.field, [exp2[lc + logs[a]] for a in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead_inv = f.inv(other.coeffs[-1])
        if len(rem) - 1 < db:
            return Poly.zero(f), self
        quot = [0] * (len(rem) - db)
        logs, exp2 = f._logs, f._exp2
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            qc = exp2[logs[c] + logs[lead_inv]]
            quot[i - db] = qc
            lq = logs[qc]
            base = i - db
            for j, cb in enumerate(other.coeffs):
                if cb:
                    rem[base + j] ^= exp2[lq + logs[cb]]
        return Poly(f, quot), Poly(f, rem[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return self if lead == 1 else self.scale(self.field.inv(lead))

    def evaluate(self, x0: int) -> int:
        logs = self.field._logs
        exp2 = self.field._exp2
        lx = logs[x0]
        acc = 0
        for c in reversed(self.coeffs):
            acc = exp2[logs[acc] + lx] ^ c
        return acc

    def eval_many(self, points: np.ndarray) -> np.ndarray:
        return self.field.eval_poly_many(list(self.coeffs), points)

    def derivative(self) -> "Poly":
        """Formal derivative; in characteristic 2 only odd-degree terms survive."""
        return Poly(self.field, [c if i % 2 == 1 else 0 for i, c in enumerate(self.coeffs)][1:])

    def truncate(self, prec: int) -> "Poly":
        """Reduce mod x^prec."""
        return Poly(self.field, self.coeffs[:prec])

    def valuation(self) -> int | float:
        """Largest v with x^v dividing the polynomial; +inf for zero."""
        if not self.coeffs:
            return float("inf")
        v = 0
        while self.coeffs[v] == 0:
            v += 1
        return v

    def shift_down(self, v: int) -> "Poly":
        """Divide by x^v (requires valuation >= v)."""
        if v == 0:
            return self
        if self.coeffs and any(self.coeffs[:v]):
            raise ValueError("polynomial not divisible by x^v")
        return Poly(self.field, self.coeffs[v:])

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


@dataclass
class EeaTrace:
    """Row-by-row trace of the extended Euclidean algorithm on (a, b).

    Row i holds (remainders[i], u[i], v[i]) with the Bezout identity
    remainders[i] = u[i]*b + v[i]*a.  Rows 0 and 1 are the seeds (a, 0, 1)
    and (b, 1, 0); genuine division steps start at row 2.  quotients[i] is
    the quotient that produced row i (None for the seeds).
    """

    remainders: list
    u: list
    v: list
    quotients: list


def eea_full(a: Poly, b: Poly) -> EeaTrace:
    """Run the extended Euclidean algorithm to completion.

    The final nonzero remainder equals gcd(a, b) up to a scalar.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("eea_full requires inputs not both zero")
    f = a.field
    zero, one = Poly.zero(f), Poly.one(f)
    rs = [a, b]
    us = [zero, one]
    vs = [one, zero]
    qs: list[Poly | None] = [None, None]
    while not rs[-1].is_zero():
        q, rem = divmod(rs[-2], rs[-1])
        rs.append(rem)
        us.append(us[-2] + q * us[-1])
        vs.append(vs[-2] + q * vs[-1])
        qs.append(q)
    return EeaTrace(rs, us, vs, qs)


def rational_reconstruct(series: Poly, precision: int, w1: int, w2: int):
    """Recover (f1, f2) with f1 = f2 * series (mod x^precision).

    Returns the unique coprime pair with deg f1 <= w1, deg f2 <= w2 and
    f2(0) != 0, normalized so f2 is monic, or None when no such pair exists.
    Realized by halting the EEA on (x^precision, series) at the first
    remainder of degree <= w1.

    Requires precision >= w1 + w2 + 1.
    """
    if precision < w1 + w2 + 1:
        raise ValueError("precision must be at least w1 + w2 + 1")
    f = series.field
    series = series.truncate(precision)
    trace = eea_full(Poly.x_pow(f, precision), series)
    for i in range(1, len(trace.remainders)):
        r = trace.remainders[i]
        if r.degree <= w1:
            f1, f2 = r, trace.u[i]
            if f2.is_zero() or f2.degree > w2 or f2.coeffs[0] == 0:
                return None
            if poly_gcd(f1, f2).degree != 0:
                return None
            c = f.inv(f2.coeffs[-1])
            return f1.scale(c), f2.scale(c)
    return None


def rational_candidates(series: Poly, precision: int, w1: int, w2: int):
    """All EEA rows of (x^precision, series) that fit the degree bounds.

    Unlike rational_reconstruct this does not fix the numerator degree in
    advance: each admissible row (one per numerator-degree cutoff) is
    returned, normalized with monic denominator.  Callers are expected to
    filter the candidates by an exact criterion of their own.
    """
    f = series.field
    series = series.truncate(precision)
    trace = eea_full(Poly.x_pow(f, precision), series)
    out = []
    for i in range(1, len(trace.remainders)):
        r = trace.remainders[i]
        u = trace.u[i]
        if u.degree > w2:
            break  # denominator degrees only grow along the trace
        if r.degree > w1 or u.coeffs[0] == 0:
            continue
        if poly_gcd(r, u).degree != 0:
            continue
        c = f.inv(u.coeffs[-1])
        out.append((r.scale(c), u.scale(c)))
    return out


def _binom_odd(n: int, k: int) -> bool:
    """C(n, k) mod 2 via Lucas: odd iff the bits of k are a subset of n."""
    return (n & k) == k


class BiPoly:
    """Polynomial in (x, t) over a Field, stored as t-coefficients.

    coeffs[i] is the Poly in x multiplying t^i; trailing zero coefficients
    are stripped.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = coeffs

    @property
    def degree_t(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "BiPoly") -> "BiPoly":
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        get = lambda cs, i: cs[i] if i < len(cs) else Poly.zero(f)
        return BiPoly(f, [get(self.coeffs, i) + get(other.coeffs, i) for i in range(n)])

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return BiPoly(f, [])
        out = [Poly.zero(f)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return BiPoly(f, out)

    def evaluate(self, x0: int, t0: int) -> int:
        acc = 0
        for p in reversed(self.coeffs):
            acc = self.field.mul(acc, t0) ^ p.evaluate(x0)
        return acc

    def subst_t_poly(self, t_of_x: Poly) -> Poly:
        """P(x, t(x)) as a univariate polynomial."""
        acc = Poly.zero(self.field)
        for p in reversed(self.coeffs):
            acc = acc * t_of_x + p
        return acc

    def truncate_x(self, prec: int) -> "BiPoly":
        return BiPoly(self.field, [p.truncate(prec) for p in self.coeffs])

    def content_valuation(self) -> int:
        """Largest v with x^v dividing every t-coefficient."""
        if self.is_zero():
            raise ValueError("content of the zero polynomial")
        return int(min(p.valuation() for p in self.coeffs if not p.is_zero()))

    def shift_down_x(self, v: int) -> "BiPoly":
        return BiPoly(self.field, [p.shift_down(v) if not p.is_zero() else p for p in self.coeffs])

    def t_slice_at_x0(self, x0: int) -> list[int]:
        """Coefficients of the univariate P(x0, t)."""
        return [p.evaluate(x0) for p in self.coeffs]

    def subst_t_affine(self, gamma: int, x_prec: int) -> "BiPoly":
        """P(x, x*t + gamma), truncated mod x^x_prec.

        Horner in t; every intermediate is truncated, which is sound because
        only the series behaviour mod x^x_prec is consumed downstream.
        """
        f = self.field
        acc: list[Poly] = []
        for p in reversed(self.coeffs):
            # acc <- acc * (x*t + gamma) + p
            shifted = [c.shift(1).truncate(x_prec) for c in acc]  # * x t
            scaled = [c.scale(gamma) for c in acc]                # * gamma
            nxt = [Poly.zero(f)] * max(len(shifted) + 1, len(scaled), 1)
            for i, c in enumerate(shifted):
                nxt[i + 1] = nxt[i + 1] + c
            for i, c in enumerate(scaled):
                nxt[i] = nxt[i] + c
            nxt[0] = nxt[0] + p.truncate(x_prec)
            acc = nxt
        return BiPoly(f, acc)

    def hasse_coeff(self, ax: int, bt: int, x0: int, t0: int) -> int:
        """Hasse derivative of order (ax, bt) evaluated at (x0, t0).

        Equals the coefficient of x^ax t^bt in P(x + x0, t + t0); binomial
        weights reduce mod 2, so a term contributes iff the order bits are a
        subset of the exponent bits.
        """
        f = self.field
        logs, exp2 = f._logs, f._exp2
        acc = 0
        for i in range(bt, len(self.coeffs)):
            if not _binom_odd(i, bt):
                continue
            p = self.coeffs[i].coeffs
            inner = 0
            for j in range(ax, len(p)):
                if p[j] and _binom_odd(j, ax):
                    inner ^= exp2[logs[p[j]] + logs[f.pow(x0, j - ax)]]
            if inner:
                acc ^= exp2[logs[inner] + logs[f.pow(t0, i - bt)]]
        return acc

    def __repr__(self) -> str:
        return f"BiPoly(deg_t={self.degree_t}, coeffs={self.coeffs!r})"


def hasse_bivariate(p: BiPoly, ax: int, bt: int, point: tuple[int, int]) -> int:
    """Order-(ax, bt) Hasse derivative of a bivariate polynomial at a point."""
    if ax < 0 or bt < 0:
        raise ValueError("Hasse orders must be nonnegative")
    return p.hasse_coeff(ax, bt, point[0], point[1])


def _t_roots(field: Field, coeffs: list[int]) -> list[int]:
    """Roots of a univariate polynomial given by scalar coefficients.

    Exhaustive scan; fields in play are small (q <= 2^16, typically 64).
    """
    logs, exp2 = field._logs, field._exp2
    roots = []
    for g in range(field.q):
        lg = logs[g]
        acc = 0
        for c in reversed(coeffs):
            acc = exp2[logs[acc] + lg] ^ c
        if acc == 0:
            roots.append(g)
    return roots


def _series_roots_impl(p: BiPoly, precision: int, budget: int):
    """Shared recursion for series_roots; returns (roots, exhausted_early).

    `budget` is the x-truncation depth the recursion works under.  A root of
    multiplicity m consumes m units of budget per fixed coefficient, so a
    budget of `precision` only resolves simple roots fully; callers that
    must not lose repeated roots retry with a larger budget.  Branches whose
    budget runs out before `precision` coefficients are fixed get
    zero-padded and flagged.
    """
    field = p.field
    max_branches = max(1, int(p.degree_t)) * precision
    found: list[tuple[int, ...]] = []
    exhausted = False

    def emit(prefix: list[int]):
        if len(found) >= max_branches:
            raise RuntimeError("series root count exceeded deg_t * precision")
        found.append(tuple(prefix + [0] * (precision - len(prefix))))

    def rec(cur: BiPoly, k: int, prefix: list[int]):
        nonlocal exhausted
        if len(prefix) == precision:
            emit(prefix)
            return
        # invariant: seeking w(x) with cur(x, w(x)) = 0 mod x^k
        cur = cur.truncate_x(k)
        if cur.is_zero():
            # budget exhausted before the prefix was pinned down: the whole
            # branch is a root family, emit the zero-padded member
            exhausted = True
            emit(prefix)
            return
        v = cur.content_valuation()
        if v:
            cur = cur.shift_down_x(v)
            k -= v  # still >= 1: cur was nonzero mod x^k
        for gamma in _t_roots(field, cur.t_slice_at_x0(0)):
            # substituting t <- x*t + gamma always leaves an x factor, so
            # the child strips fresh content and k strictly decreases
            rec(cur.subst_t_affine(gamma, k), k, prefix + [gamma])

    rec(p, budget, [])
    uniq = sorted(set(found))
    return [Poly(field, c) for c in uniq], exhausted


def series_roots(p: BiPoly, precision: int) -> list[Poly]:
    """Power series t(x) with P(x, t(x)) = 0 (mod x^precision).

    Classic branch-and-substitute recursion on the constant term: at each
    level the candidate coefficients are the roots of P(0, t), and the
    recursion continues on P(x, x*t + gamma) with its x-content stripped.

    A root of multiplicity m burns m units of working precision per fixed
    coefficient, so the recursion escalates its budget until every branch is
    either fully pinned down or genuinely under-determined.  Branches that
    stay under-determined at the top budget are whole families of roots;
    they are reported through their zero-padded member rather than
    enumerated (enumeration would be exponential).

    Raises RuntimeError if the branch count exceeds deg_t(P) * precision,
    which signals a degenerate input such as a polynomial divisible by a
    power of x times t^2.
    """
    if precision < 1:
        raise ValueError("precision must be >= 1")
    if p.is_zero():
        raise ValueError("series_roots of the zero polynomial")
    for budget in (precision, 2 * precision, (int(p.degree_t) + 1) * precision):
        roots, exhausted = _series_roots_impl(p, precision, budget)
        if not exhausted:
            break
    return roots
