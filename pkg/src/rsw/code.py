"""Generalized Reed-Solomon codes: construction, encoding, syndromes, Forney.

Conventions:
  * codewords are (v_0*C(alpha_0), ..., v_{n-1}*C(alpha_{n-1})) for message
    polynomials C of degree < k;
  * the syndrome of a word r is S(x) = sum_{i=0}^{d-2} x^i *
    sum_j r_j * vhat_j * alpha_j^{d-2-i} with
    vhat_j = (v_j * prod_{h != j}(alpha_j - alpha_h))^{-1};
  * under this syndrome the error evaluator paired with a locator L is
    Omega = L*S mod x^{d-1} and carries an extra alpha^{d-1} factor per
    position, which the error-value formula divides back out.  The exponent
    was pinned down by planted-error round trips; see forney_correct.
"""

from __future__ import annotations

import numpy as np

from rsw.gf import Field
from rsw.poly import Poly


class GrsCode:
    """A GRS(n, k, d = n-k+1) code over GF(2^m); immutable after construction."""

    def __init__(self, field: Field, n: int, k: int, alphas, vs):
        alphas = tuple(alphas)
        vs = tuple(vs)
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        if n > field.q:
            raise ValueError(f"length n={n} exceeds field size q={field.q}")
        if len(alphas) != n or len(vs) != n:
            raise ValueError("alphas and vs must both have length n")
        if len(set(alphas)) != n:
            raise ValueError("evaluation points must be pairwise distinct")
        if any(v == 0 for v in vs):
            raise ValueError("column multipliers must be nonzero")
        self.field = field
        self.n = n
        self.k = k
        self.d = n - k + 1
        self.alphas = alphas
        self.vs = vs
        self.vhats = self._compute_vhats()
        self._np_alphas = np.asarray(alphas, dtype=np.int64)
        self._np_vs = np.asarray(vs, dtype=np.int64)
        self._synd_log = self._syndrome_log_matrix()

    @classmethod
    def reed_solomon(cls, field: Field, n: int, k: int) -> "GrsCode":
        """Plain RS specialization: alpha_i = g^i for the field generator g, v_i = 1."""
        if n > field.q - 1:
            raise ValueError(f"plain RS needs n <= q-1 = {field.q - 1}")
        return cls(field, n, k, [field.alpha(i) for i in range(n)], [1] * n)

    def _compute_vhats(self) -> tuple[int, ...]:
        f = self.field
        vhats = []
        for i, ai in enumerate(self.alphas):
            prod = self.vs[i]
            for h, ah in enumerate(self.alphas):
                if h != i:
                    prod = f.mul(prod, ai ^ ah)
            vhats.append(f.inv(prod))
        return tuple(vhats)

    def _syndrome_log_matrix(self) -> np.ndarray:
        """log of M[i, j] = vhat_j * alpha_j^(d-2-i) for the syndrome mat-vec."""
        f = self.field
        rows = self.d - 1
        mat = np.zeros((rows, self.n), np.int64)
        for j in range(self.n):
            aj, vj = self.alphas[j], self.vhats[j]
            for i in range(rows):
                mat[i, j] = f.mul(vj, f.pow(aj, self.d - 2 - i))
        return f.np_log[mat]

    # -- encoding -----------------------------------------------------------

    def encode(self, info) -> tuple[int, ...]:
        info = tuple(info)
        if len(info) != self.k:
            raise ValueError(f"info word must have length k={self.k}")
        f = self.field
        vals = f.eval_poly_many(list(info), self._np_alphas)
        return tuple(int(c) for c in f.mul_vec(vals, self._np_vs))

    # -- syndrome and correction ---------------------------------------------

    def syndrome(self, word) -> Poly:
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.n,):
            raise ValueError(f"word must have length n={self.n}")
        f = self.field
        terms = f.np_exp2[self._synd_log + f.np_log[word][None, :]]
        coeffs = np.bitwise_xor.reduce(terms, axis=1)
        return Poly(f, [int(c) for c in coeffs])

    def is_codeword(self, word) -> bool:
        return self.syndrome(word).is_zero()

    def locator_positions(self, locator: Poly) -> list[int] | None:
        """Error positions {i : locator(alpha_i) = 0}, or None.

        Valid only when the locator splits into deg(locator) distinct roots
        among the evaluation points; a repeated root or a root outside the
        point set makes the count fall short.
        """
        if locator.is_zero():
            raise ValueError("zero polynomial is not a locator")
        vals = locator.eval_many(self._np_alphas)
        positions = [i for i in range(self.n) if vals[i] == 0]
        if len(positions) != locator.degree:
            return None
        return positions

    def forney_correct(self, word, locator: Poly, synd: Poly) -> tuple[int, ...] | None:
        """Correct `word` at the locator's roots; None if anything fails.

        Error values follow from Omega = locator * S mod x^{d-1}:
            e_i = Omega(alpha_i) / (vhat_i * alpha_i^{d-1} * locator'(alpha_i)).
        Positions with alpha_i = 0 fall outside this formula (the alpha^{d-1}
        factor vanishes); such codes are handled by solving the syndrome
        system on the located support instead.
        """
        positions = self.locator_positions(locator)
        if positions is None:
            return None
        f = self.field
        if any(self.alphas[i] == 0 for i in positions):
            corrected = self._correct_by_support(word, positions)
        else:
            omega = (locator * synd).truncate(self.d - 1)
            deriv = locator.derivative()
            corrected = list(word)
            for i in positions:
                ai = self.alphas[i]
                denom = f.mul(f.mul(self.vhats[i], f.pow(ai, self.d - 1)), deriv.evaluate(ai))
                if denom == 0:
                    return None
                corrected[i] ^= f.div(omega.evaluate(ai), denom)
        if corrected is None or not self.is_codeword(corrected):
            return None
        return tuple(corrected)

    def _correct_by_support(self, word, positions) -> list[int] | None:
        """Solve for error values on a known support via the syndrome system."""
        from rsw.gflinalg import solve_linear

        f = self.field
        synd = self.syndrome(word)
        rows = self.d - 1
        mat = np.zeros((rows, len(positions)), np.int64)
        for col, j in enumerate(positions):
            for i in range(rows):
                mat[i, col] = f.mul(self.vhats[j], f.pow(self.alphas[j], self.d - 2 - i))
        rhs = np.zeros(rows, np.int64)
        for i, c in enumerate(synd.coeffs):
            rhs[i] = c
        sol = solve_linear(mat, rhs, f)
        if sol is None:
            return None
        corrected = list(word)
        for col, j in enumerate(positions):
            corrected[j] ^= int(sol[col])
        return corrected

    def __repr__(self) -> str:
        return f"GrsCode(n={self.n}, k={self.k}, d={self.d}, q={self.field.q})"
