"""GF(2^m) arithmetic with discrete-log tables.

Field elements are plain Python ints in [0, 2^m).  The binary digits of an
element are the coefficients of its polynomial-basis representation, in
little-endian order: bit j is the coefficient of x^j.  Addition is XOR;
multiplication runs through exp/log tables built from a generator of the
multiplicative group.

Default irreducible (primitive) polynomials, one per extension degree:

    m=2  : x^2 + x + 1                  0b111              = 7
    m=3  : x^3 + x + 1                  0b1011             = 11
    m=4  : x^4 + x + 1                  0b10011            = 19
    m=5  : x^5 + x^2 + 1                0b100101           = 37
    m=6  : x^6 + x + 1                  0b1000011          = 67
    m=7  : x^7 + x^3 + 1                0b10001001         = 137
    m=8  : x^8 + x^4 + x^3 + x^2 + 1    0b100011101        = 285
    m=9  : x^9 + x^4 + 1                                   = 529
    m=10 : x^10 + x^3 + 1                                  = 1033
    m=11 : x^11 + x^2 + 1                                  = 2053
    m=12 : x^12 + x^6 + x^4 + x + 1                        = 4179
    m=13 : x^13 + x^4 + x^3 + x + 1                        = 8219
    m=14 : x^14 + x^10 + x^6 + x + 1                       = 17475
    m=15 : x^15 + x + 1                                    = 32771
    m=16 : x^16 + x^12 + x^3 + x + 1                       = 69643

The fixed list keeps the indexing of powers of the generator reproducible
across runs and machines.
"""

from __future__ import annotations

import numpy as np

DEFAULT_MODULI = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 529,
    10: 1033,
    11: 2053,
    12: 4179,
    13: 8219,
    14: 17475,
    15: 32771,
    16: 69643,
}


def clmul_mod(a: int, b: int, modulus: int, m: int) -> int:
    """Carry-less multiply of two bit-vectors, reduced mod an irreducible.

    Table-free; used to build the tables and as an independent cross-check.
    """
    top = 1 << m
    p = 0
    while b:
        if b & 1:
            p ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return p


def poly_deg(mask: int) -> int:
    return mask.bit_length() - 1


def find_factor(modulus: int, m: int) -> int | None:
    """Smallest nontrivial factor of a degree-m GF(2) polynomial, or None.

    Trial division by every polynomial of degree 1 .. m//2.
    """
    for f in range(2, 1 << (m // 2 + 1)):
        if poly_deg(f) < 1:
            continue
        # remainder of modulus / f by long division over GF(2)
        rem = modulus
        df = poly_deg(f)
        while poly_deg(rem) >= df:
            rem ^= f << (poly_deg(rem) - df)
        if rem == 0:
            return f
    return None


class Field:
    """Arithmetic context for GF(2^m), 2 <= m <= 16.

    Immutable after construction; all operations are pure, so a single
    instance can be shared freely across workers.
    """

    def __init__(self, m: int, modulus: int | None = None):
        if not 2 <= m <= 16:
            raise ValueError(f"extension degree m={m} out of supported range [2, 16]")
        if modulus is None:
            modulus = DEFAULT_MODULI[m]
        if poly_deg(modulus) != m:
            raise ValueError(f"modulus {bin(modulus)} does not have degree {m}")
        factor = find_factor(modulus, m)
        if factor is not None:
            raise ValueError(
                f"modulus {bin(modulus)} is reducible: divisible by {bin(factor)}"
            )
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self.generator = self._build_tables()

        # Padded double-length exp table: for nonzero a, b the index
        # log[a] + log[b] stays below 2(q-1); log[0] is parked high enough
        # that any sum involving it lands in the zero-filled tail.  This
        # makes mul/div branch-free.
        q = self.q
        self._log0 = 2 * q + 2
        exp2 = [0] * (2 * self._log0 + 1)
        for i in range(2 * q - 2):
            exp2[i] = self._exp[i % (q - 1)]
        self._exp2 = exp2
        logs = list(self._log)
        logs[0] = self._log0
        self._logs = logs

        # numpy copies for vectorized kernels
        self.np_log = np.asarray(logs, dtype=np.int64)
        self.np_exp2 = np.asarray(exp2, dtype=np.int64)

    def _build_tables(self) -> int:
        q = self.q
        for g in range(2, q):
            exp = [0] * (q - 1)
            log = [0] * q
            v = 1
            ok = True
            for i in range(q - 1):
                if v == 1 and i > 0:
                    ok = False  # order of g divides i < q-1
                    break
                exp[i] = v
                log[v] = i
                v = clmul_mod(v, g, self.modulus, self.m)
            if ok and v == 1:
                self._exp = exp
                self._log = log
                return g
        raise AssertionError("no multiplicative generator found (modulus not irreducible?)")

    # -- scalar operations -------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    sub = add  # characteristic 2

    def mul(self, a: int, b: int) -> int:
        return self._exp2[self._logs[a] + self._logs[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(2^m)")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise ZeroDivisionError("division by 0 in GF(2^m)")
        return self._exp2[self._logs[a] + self.q - 1 - self._log[b]]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of 0")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def alpha(self, i: int) -> int:
        """i-th power of the table generator."""
        return self._exp[i % (self.q - 1)]

    # -- element <-> bit-vector mapping ------------------------------------

    def element_bits(self, a: int) -> tuple[int, ...]:
        """Little-endian coefficient bits of an element (length m)."""
        if not 0 <= a < self.q:
            raise ValueError(f"element {a} outside [0, {self.q})")
        return tuple((a >> j) & 1 for j in range(self.m))

    def bits_to_element(self, bits) -> int:
        bits = tuple(bits)
        if len(bits) != self.m:
            raise ValueError(f"expected {self.m} bits, got {len(bits)}")
        v = 0
        for j, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit value {b!r} is not 0/1")
            v |= b << j
        return v

    # -- vectorized operations (int64 numpy arrays of elements) ------------

    def mul_vec(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.np_exp2[self.np_log[a] + self.np_log[b]]

    def eval_poly_many(self, coeffs: list[int], points: np.ndarray) -> np.ndarray:
        """Horner evaluation of a coefficient list at many points at once."""
        acc = np.zeros(points.shape, dtype=np.int64)
        lg, e2 = self.np_log, self.np_exp2
        lp = lg[points]
        for c in reversed(coeffs):
            acc = e2[lg[acc] + lp]
            if c:
                acc ^= c
        return acc

    def __repr__(self) -> str:
        return f"Field(m={self.m}, modulus={bin(self.modulus)})"
